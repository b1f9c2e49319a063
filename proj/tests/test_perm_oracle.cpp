#include <algorithm>
#include <random>
#include <set>

#include "ffperm/field.hpp"
#include "ffperm/numtheory.hpp"
#include "ffperm/oracle.hpp"
#include "ffperm/poly.hpp"
#include "test_util.hpp"

using namespace ffperm;

namespace {

constexpr Elem w = 2, w2 = 3;

RationalMap rat(const FieldCtx& F, std::vector<Elem> num, std::vector<Elem> den)
{
  return rat_normalize(Poly(F, std::move(num)), Poly(F, std::move(den)));
}

Poly random_poly(const FieldCtx& F, std::mt19937_64& rng, int deg)
{
  std::vector<Elem> c(deg + 1);
  for (auto& x : c)
    x = rng() % F.order();
  while (c.back() == 0)
    c.back() = rng() % F.order();
  return Poly(F, std::move(c));
}

// Independent: z^r A(z^{q-1}) evaluated term by term with the full exponent.
bool naive_perm_fq2(const FieldCtx& F, const Poly& A, std::uint64_t r, std::uint64_t q)
{
  std::set<Elem> img;
  for (Elem x = 0; x < F.order(); ++x) {
    Elem acc = 0;
    for (int i = 0; i <= A.degree(); ++i) {
      Elem term = A.coeff(i);
      for (std::uint64_t e = 0; e < r + i * (q - 1); ++e)
        term = F.mul(term, x);
      acc = F.add(acc, term);
    }
    img.insert(acc);
  }
  return img.size() == F.order();
}

std::vector<DegreeOneMap> mu_to_p1_maps(const FieldCtx& F, std::uint64_t q, std::size_t limit)
{
  std::vector<DegreeOneMap> out;
  for (Elem a = 0; a < F.order() && out.size() < limit; ++a)
    for (Elem b = 0; b < F.order() && out.size() < limit; ++b)
      for (Elem d = 0; d < F.order() && out.size() < limit; ++d) {
        const DegreeOneMap m{a, b, 1, d};
        if (F.sub(F.mul(a, d), b) == 0)
          continue;
        if (mu_to_p1_test(F, m, q))
          out.push_back(m);
      }
  return out;
}

}  // namespace

TEST_CASE("sparse polynomials")
{
  auto F16 = field(2, 4);
  const auto f = make_sparse(*F16, {{5, 1}, {2, 3}, {5, 1}, {2, 0}, {0, 7}});
  // the X^5 terms cancel in characteristic 2
  REQUIRE(f.terms.size() == 2);
  CHECK(f.terms[0] == std::make_pair<std::uint64_t, Elem>(0, 7));
  CHECK(f.terms[1] == std::make_pair<std::uint64_t, Elem>(2, 3));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Poly A = random_poly(*F16, rng, 5);
    const std::uint64_t r = 1 + rng() % 40;
    const auto s = sparse_from_A(A, r, 4);
    for (Elem x = 0; x < 16; ++x) {
      Elem acc = 0;
      for (int i = 0; i <= A.degree(); ++i) {
        Elem term = A.coeff(i);
        for (std::uint64_t e = 0; e < r + i * 3; ++e)
          term = F16->mul(term, x);
        acc = F16->add(acc, term);
      }
      REQUIRE(sparse_eval(*F16, s, x) == acc);
    }
  }
  CHECK(sparse_to_text(make_sparse(*F16, {})) == "0");
}

TEST_CASE("is_perm_fq2 examples")
{
  auto F4 = field(2, 2);
  CHECK(is_perm_fq2(*F4, make_sparse(*F4, {{1, 1}}), 2).is_permutation);
  CHECK(is_perm_fq2(*F4, make_sparse(*F4, {{2, 1}}), 2).is_permutation);
  const auto v = is_perm_fq2(*F4, make_sparse(*F4, {{3, 1}}), 2);
  CHECK_FALSE(v.is_permutation);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->first == P1Point::finite(1));
  CHECK(v.witness->second == P1Point::finite(w));
  CHECK_FALSE(is_perm_fq2(*F4, make_sparse(*F4, {{1, 1}}), 2).witness.has_value());
  // subfield domain inside a larger ambient
  auto F16 = field(2, 4);
  CHECK(is_perm_fq2(*F16, make_sparse(*F16, {{1, 1}}), 2).is_permutation);
  Elem outside = 0;
  for (Elem x = 0; x < 16; ++x)
    if (!F16->in_subfield(x, 2))
      outside = x;
  CHECK_ERRC(is_perm_fq2(*F16, make_sparse(*F16, {{1, outside}}), 2), MapNotStable);
}

TEST_CASE("is_perm_mu and is_perm_p1fq examples")
{
  auto F4 = field(2, 2);
  CHECK(is_perm_mu(rat(*F4, {1}, {0, 1}), 2).is_permutation);
  CHECK_FALSE(is_perm_mu(rat(*F4, {0, 0, 0, 1}, {1}), 2).is_permutation);
  CHECK_ERRC(is_perm_mu(rat(*F4, {0, 1}, {1, 1}), 2), MapNotStable);
  auto F2 = field(2, 1);
  CHECK(is_perm_p1fq(rat(*F2, {0, 0, 0, 1}, {1}), 2).is_permutation);
  CHECK_FALSE(is_perm_p1fq(rat(*F2, {0, 0, 1}, {1, 1}), 2).is_permutation);
  CHECK_ERRC(is_perm_p1fq(rat(*F4, {w, 1}, {1}), 2), MapNotStable);
  auto F3 = field(3, 1);
  // X^3 on P^1(F_3) is the identity
  CHECK(is_perm_p1fq(rat(*F3, {0, 0, 0, 1}, {1}), 3).is_permutation);
}

TEST_CASE("reduction to mu_{q+1}: examples")
{
  auto F4 = field(2, 2);
  const Poly A(*F4, {w2, 1, 0, w2});
  const auto red = reduce_lemma_old(3, A, 2);
  CHECK(red.gcd_ok);
  CHECK(red.g0_permutes());
  CHECK(is_perm_fq2(*F4, sparse_from_A(A, 3, 2), 2).is_permutation);
  auto F16 = field(2, 4);
  CHECK_FALSE(reduce_lemma_old(3, Poly(*F16, {1, 1}), 4).gcd_ok);
  CHECK_ERRC(reduce_lemma_old(3, Poly(*F16), 4), ZeroPolynomial);
}

TEST_CASE("reduction to mu_{q+1}: equivalence with brute force")
{
  auto F4 = field(2, 2);
  for (Elem c0 = 0; c0 < 4; ++c0)
    for (Elem c1 = 0; c1 < 4; ++c1)
      for (Elem c2 = 0; c2 < 4; ++c2)
        for (Elem c3 = 0; c3 < 4; ++c3) {
          const Poly A(*F4, {c0, c1, c2, c3});
          if (A.is_zero())
            continue;
          for (std::uint64_t r = 1; r <= 6; ++r) {
            const auto red = reduce_lemma_old(r, A, 2);
            const bool lhs = naive_perm_fq2(*F4, A, r, 2);
            REQUIRE(lhs == is_perm_fq2(*F4, sparse_from_A(A, r, 2), 2).is_permutation);
            REQUIRE(lhs == (red.gcd_ok && red.g0_permutes()));
          }
        }
  std::mt19937_64 rng(17);
  for (unsigned N : {4u, 6u}) {
    auto F = field(2, N);
    const std::uint64_t q = std::uint64_t(1) << (N / 2);
    int perms = 0;
    for (int t = 0; t < 3000; ++t) {
      Poly A = random_poly(*F, rng, 1 + static_cast<int>(rng() % 5));
      // bias towards permutations: A = X^{Q+1} style with a few terms
      if (t % 3 == 0)
        A = Poly::from_terms(*F, {{3, static_cast<Elem>(1 + rng() % (F->order() - 1))}, {0, 1}});
      const std::uint64_t r = 1 + rng() % (2 * q + 2);
      const auto red = reduce_lemma_old(r, A, q);
      const bool lhs = is_perm_fq2(*F, sparse_from_A(A, r, q), q).is_permutation;
      REQUIRE(lhs == (red.gcd_ok && red.g0_permutes()));
      perms += lhs;
    }
    CHECK(perms > 0);
  }
}

TEST_CASE("build_g_from_A")
{
  auto F16 = field(2, 4);
  const auto& F = *F16;
  const std::uint64_t q = 4, Q = 2;
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const Elem a = rng() % 16, b = rng() % 16, c = rng() % 16, d = 1 + rng() % 15;
    const Poly A = Poly::from_terms(F, {{Q + 1, a}, {Q, b}, {1, c}, {0, d}});
    const Poly B = Poly::from_terms(
        F, {{Q + 1, F.frobenius(d, 2)}, {Q, F.frobenius(c, 2)}, {1, F.frobenius(b, 2)}, {0, F.frobenius(a, 2)}});
    REQUIRE(rat_equal(build_g_from_A(A, Q + 1, q), rat_normalize(B, A)));
  }
  const auto gx = build_g_from_A(Poly::constant(F, 1), 1, q);
  CHECK(gx.num == Poly::x(F));
  CHECK(gx.den == Poly::constant(F, 1));

  // pointwise agreement with z^r A(z)^{q-1} on mu_5 when A has no mu-roots
  int tested = 0;
  while (tested < 1000) {
    const Poly A = random_poly(F, rng, 1 + static_cast<int>(rng() % 4));
    const std::uint64_t r = 1 + rng() % 12;
    const auto red = reduce_lemma_old(r, A, q);
    const auto g = build_g_from_A(A, static_cast<std::int64_t>(r), q);
    const bool no_mu_roots = roots_in_mu(A, q).empty();
    if (no_mu_roots) {
      ++tested;
      for (std::size_t i = 0; i < red.mu.size(); ++i)
        REQUIRE(rat_eval(g, P1Point::finite(red.mu[i])) == P1Point::finite(red.values[i]));
    }
    const bool g_perm = no_mu_roots && is_perm_mu(g, q).is_permutation;
    REQUIRE(red.g0_permutes() == g_perm);
  }
}

TEST_CASE("build_h_from_g")
{
  auto F4 = field(2, 2);
  const DegreeOneMap rho{w, w2, 1, 1};
  REQUIRE(mu_to_p1_test(*F4, rho, 2));
  const auto h = build_h_from_g(rat(*F4, {1}, {0, 1}), rho, rho, 2);
  CHECK(rat_in_subfield(h, 1));
  CHECK(is_perm_p1fq(h, 2).is_permutation);
  const auto hx = build_h_from_g(rat(*F4, {0, 1}, {1}), rho, rho, 2);
  CHECK(hx.degree() == 1);
  CHECK(rat_in_subfield(hx, 1));
  CHECK_ERRC(build_h_from_g(rat(*F4, {0, 1}, {1}), DegreeOneMap{}, rho, 2), BadConjugators);

  auto F16 = field(2, 4);
  const std::uint64_t q = 4;
  const auto maps = mu_to_p1_maps(*F16, q, 40);
  REQUIRE(maps.size() >= 10);
  std::mt19937_64 rng(29);
  int done = 0, perms = 0;
  while (done < 1000) {
    const Poly A = random_poly(*F16, rng, 1 + static_cast<int>(rng() % 3));
    if (!roots_in_mu(A, q).empty())
      continue;
    const auto g = build_g_from_A(A, static_cast<std::int64_t>(1 + rng() % 10), q);
    const auto& r1 = maps[rng() % maps.size()];
    const auto& r2 = maps[rng() % maps.size()];
    const auto hh = build_h_from_g(g, r1, r2, q);
    REQUIRE(rat_in_subfield(hh, 2));
    const bool gp = is_perm_mu(g, q).is_permutation;
    REQUIRE(gp == is_perm_p1fq(hh, q).is_permutation);
    perms += gp;
    ++done;
  }
  CHECK(perms > 0);
}

TEST_CASE("binomial criterion")
{
  auto F16 = field(2, 4);
  const Elem prim = F16->exp(1);
  CHECK(F16->pow(prim, 5) != 1);
  auto rep = binomial_criterion(*F16, 1, 1, prim, 4);
  CHECK(rep.criterion);
  CHECK(rep.oracle);
  const Elem mu_elt = F16->mu_subgroup(4)[1];
  rep = binomial_criterion(*F16, 1, 1, mu_elt, 4);
  CHECK_FALSE(rep.criterion);
  CHECK_FALSE(rep.oracle);
  auto F4 = field(2, 2);
  rep = binomial_criterion(*F4, 1, 2, w, 2);
  CHECK_FALSE(rep.criterion);
  CHECK_ERRC(binomial_criterion(*F4, 1, 3, w, 2), HypothesisViolated);
  CHECK_ERRC(binomial_criterion(*F4, 1, 1, 0, 2), HypothesisViolated);

  // F_4^* = mu_3, so q = 2 only has negative cases
  int agree = 0;
  for (unsigned N : {2u, 4u}) {
    auto F = field(2, N);
    const std::uint64_t q = std::uint64_t(1) << (N / 2);
    for (std::uint64_t r = 1; r <= q + 1; ++r)
      for (std::uint64_t t = 1; t <= q + 1; ++t) {
        if (gcd_u64(t, q + 1) != 1)
          continue;
        for (Elem alpha = 1; alpha < F->order(); ++alpha) {
          const auto b = binomial_criterion(*F, r, t, alpha, q);
          REQUIRE(b.criterion == b.oracle);
          agree += b.criterion;
        }
      }
  }
  CHECK(agree > 0);
}

TEST_CASE("ramification-based mu test: binomial-type family")
{
  // g = X^s (alpha^q X - 1)/(X - alpha): multiset [s, 1] over 0. Needs alpha outside mu_{q+1},
  // which rules out q = 2.
  for (unsigned N : {4u, 6u, 8u}) {
    auto F = field(2, N);
    const std::uint64_t q = std::uint64_t(1) << (N / 2);
    const Elem alpha = F->exp(1);
    REQUIRE(F->pow(alpha, static_cast<std::int64_t>(q + 1)) != 1);
    const Poly lin(*F, {1, F->frobenius(alpha, N / 2)});  // alpha^q X - 1 in char 2
    const Poly den(*F, {alpha, 1});
    for (unsigned s = 1; s <= 2 * (q + 1); ++s) {
      const auto g = rat_normalize(shift(lin, s), den);
      const bool crit = lpp_check_map(g, s, 1, P1Point::finite(0), q);
      REQUIRE(crit == (s % (q + 1) == 0));
      REQUIRE(crit == is_perm_mu(g, q).is_permutation);
    }
    // same test starting from A = X - alpha with r = s + 1
    for (unsigned s = 1; s <= q + 1; ++s)
      REQUIRE(lpp_check(den, s + 1, s, 1, P1Point::finite(0), q) == (s % (q + 1) == 0));
    CHECK_ERRC(lpp_check_map(rat_normalize(shift(lin, 2), den), 3, 1, P1Point::finite(0), q), RamMismatch);
  }
}

TEST_CASE("ramification-based mu test: branch point inside mu")
{
  // g = tau^{-1} o h o sigma with h in F_q(X) of multiset [s, t] over 0, so the
  // branch point tau^{-1}(0) lies in mu_{q+1}.
  auto F16 = field(2, 4);
  const std::uint64_t q = 4;
  const auto maps = mu_to_p1_maps(*F16, q, 4);
  REQUIRE(maps.size() >= 2);
  const auto& tau = maps[0];
  const auto& sigma = maps[1];
  const DegreeOneMap tinv = deg1_inverse(*F16, tau);
  const P1Point gamma = deg1_eval(*F16, tinv, P1Point::finite(0));
  REQUIRE_FALSE(gamma.inf);
  REQUIRE(F16->pow(gamma.x, 5) == 1);
  struct St {
    unsigned s, t;
  };
  for (St st : {St{5, 1}, St{1, 2}, St{3, 2}, St{5, 3}}) {
    const Poly h = shift(poly_pow(Poly(*F16, {1, 1}), st.t), st.s);  // X^s (X+1)^t
    const auto g = rat_compose(tinv, rat_normalize(h, Poly::constant(*F16, 1)), sigma);
    const bool crit = lpp_check_map(g, st.s, st.t, gamma, q);
    CHECK_FALSE(crit);
    CHECK(crit == is_perm_mu(g, q).is_permutation);
  }
}

TEST_CASE("multiplicative equivalence")
{
  auto F16 = field(2, 4);
  const auto& F = *F16;
  const auto f = make_sparse(F, {{7, 1}, {1, 5}});
  const auto self = mult_equiv(F, f, f);
  REQUIRE(self.has_value());
  CHECK(self->alpha == 1);
  CHECK(self->beta == 1);
  CHECK(self->n == 1);
  const Elem beta = 9;
  const auto x = make_sparse(F, {{1, 1}});
  const auto bx = mult_equiv(F, x, make_sparse(F, {{1, beta}}));
  REQUIRE(bx.has_value());
  CHECK(bx->alpha == 1);
  CHECK(bx->beta == beta);
  CHECK(bx->n == 1);
  CHECK_FALSE(mult_equiv(F, x, make_sparse(F, {{3, 1}})).has_value());
  auto F2 = field(2, 1);
  CHECK(mult_equiv(*F2, make_sparse(*F2, {{1, 1}}), make_sparse(*F2, {{1, 1}})).has_value());

  std::mt19937_64 rng(41);
  auto F8 = field(2, 3);
  for (int t = 0; t < 1000; ++t) {
    const auto& G = *F8;
    std::vector<std::pair<std::uint64_t, Elem>> terms;
    for (int i = 0; i < 3; ++i)
      terms.emplace_back(1 + rng() % 12, static_cast<Elem>(rng() % 8));
    const auto f1 = make_sparse(G, terms);
    const Elem alpha = 1 + rng() % 7, b = 1 + rng() % 7;
    std::uint64_t n = 1 + rng() % 7;
    while (gcd_u64(n, 7) != 1)
      n = 1 + rng() % 7;
    std::vector<std::pair<std::uint64_t, Elem>> gt;
    for (auto [e, c] : f1.terms)
      gt.emplace_back(e * n, G.mul(b, G.mul(c, G.pow(alpha, static_cast<std::int64_t>(e)))));
    const auto g1 = make_sparse(G, gt);
    const auto wit = mult_equiv(G, f1, g1);
    REQUIRE(wit.has_value());
    for (Elem z = 0; z < 8; ++z) {
      const Elem inner = G.mul(wit->alpha, G.pow(z, static_cast<std::int64_t>(wit->n)));
      REQUIRE(sparse_eval(G, g1, z) == G.mul(wit->beta, sparse_eval(G, f1, inner)));
    }
    std::vector<Elem> all(8);
    for (Elem z = 0; z < 8; ++z)
      all[z] = z;
    REQUIRE(is_perm_on(G, f1, all).is_permutation == is_perm_on(G, g1, all).is_permutation);
  }
}

TEST_CASE("sporadic degree-4 permutations")
{
  const auto entries = table3_verify();
  CHECK(entries.size() == 17);
  std::set<std::pair<std::uint64_t, std::string>> labels;
  for (const auto& e : entries) {
    CHECK(e.permutes);
    CHECK(e.h.degree() == 4);
    CHECK(e.ctx->order() == e.q);
    labels.emplace(e.q, e.label);
  }
  CHECK(labels.size() == 12);
  auto F7 = field(7, 1);
  CHECK(is_perm_p1fq(rat(*F7, {0, 3, 0, 0, 1}, {1}), 7).is_permutation);
  auto F2 = field(2, 1);
  CHECK(is_perm_p1fq(rat(*F2, {0, 1, 0, 1, 1}, {1}), 2).is_permutation);
  auto F5 = field(5, 1);
  CHECK(is_perm_p1fq(rat(*F5, {1, 1, 0, 0, 1}, {2, 0, 1}), 5).is_permutation);
  // perturbing a coefficient breaks it
  CHECK_FALSE(is_perm_p1fq(rat(*F7, {0, 2, 0, 0, 1}, {1}), 7).is_permutation);
}

TEST_CASE("degree-3 permutations are totally ramified over branch points")
{
  for (auto [p, k] : {std::pair{2u, 1u}, {2u, 2u}, {5u, 1u}, {7u, 1u}, {3u, 1u}}) {
    auto F = field(p, 2 * k);
    const std::uint64_t q = ipow(p, k);
    const auto maps = degree3_permutations(*F, q);
    REQUIRE(!maps.empty());
    for (const auto& h : maps) {
      REQUIRE(h.degree() == 3);
      REQUIRE(rat_in_subfield(h, k));
      REQUIRE(is_separable_rat(h).separable);
      REQUIRE(is_perm_p1fq(h, q).is_permutation);
      std::set<P1Point> branch;
      const Poly wr = wronskian(h);
      if (!wr.is_zero())
        for (Elem x : field_roots(wr))
          branch.insert(rat_eval(h, P1Point::finite(x)));
      if (ramification_index(h, P1Point::infinity()) > 1)
        branch.insert(rat_eval(h, P1Point::infinity()));
      REQUIRE(!branch.empty());
      for (const auto& b : branch)
        REQUIRE(ramification_multiset(h, b, SplitPolicy::Report).multiset == std::vector<unsigned>{3});
    }
  }
}
