#include <random>

#include "ffperm/identities.hpp"
#include "ffperm/numtheory.hpp"
#include "test_util.hpp"

using namespace ffperm;

namespace {

// Pointwise evaluation of both sides at (x, y), straight from the formulas.
struct PointSides {
  Elem lhs, rhs;
  bool rhs_defined;
};

PointSides eval_sides(const IdentityInstance& I, Elem x, Elem y)
{
  const auto& F = *I.ctx;
  const std::uint64_t q = I.q, qn = F.order(), M = qn - 1, s = M / (q - 1);
  const unsigned k = prime_power(q)->second;
  Elem prod = 1;
  for (Elem z = 1; z < F.order(); ++z)
    prod = F.mul(prod, F.sub(F.add(1, F.mul(z, x)), F.mul(F.frobenius(z, k), y)));
  const Elem lhs = F.add(F.sub(F.pow(x, M), 1), prod);
  const Elem den = F.sub(F.pow(x, s), F.pow(y, s));
  if (den == 0)
    return {lhs, 0, false};
  const Elem quo = F.div(F.sub(F.pow(x, M), F.pow(y, M)), den);
  Elem S = F.pow(y, (qn - q) / (q - 1));
  std::uint64_t qi = q;
  for (unsigned i = 1; i < I.n; ++i, qi *= q)
    S = F.add(S, F.mul(F.pow(x, 1 + (qn - qi * q) / (q - 1)), F.pow(y, (qi - q) / (q - 1))));
  return {lhs, F.neg(F.mul(y, F.mul(quo, S))), true};
}

}  // namespace

TEST_CASE("delta sizes")
{
  CHECK(delta_set(2, 3).size() == 3);
  CHECK(delta_set(2, 2).size() == 1);
  CHECK(delta_set(3, 2).size() == 1);
  CHECK(delta_set(2, 1).empty());
  CHECK(delta_set(2, 2) == std::vector<Elem>{1});
  CHECK_ERRC(make_identity_instance(2, 9), SizeLimit);
  CHECK_ERRC(make_identity_instance(3, 6), SizeLimit);
  CHECK_ERRC(make_identity_instance(6, 2), BadFieldSpec);
  CHECK_ERRC(make_identity_instance(2, 0), BadFieldSpec);
}

TEST_CASE("bivariate identity over F_4 expands to Y^3 + XY")
{
  const auto I = make_identity_instance(2, 2);
  const auto lhs = thm81_lhs(I);
  DenseBiPoly expect(*I.ctx, 1, 1);
  expect.add_term(0, 3, 1);
  expect.add_term(1, 1, 1);
  CHECK(lhs == expect);
  CHECK(thm81_rhs(I) == expect);
  CHECK(verify_thm81(I));
}

TEST_CASE("bivariate identity agrees with pointwise evaluation")
{
  std::mt19937_64 rng(3);
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {4, 2}, {5, 2}, {2, 5}, {7, 1}}) {
    const auto I = make_identity_instance(q, n);
    const auto& F = *I.ctx;
    const auto lhs = thm81_lhs(I), rhs = thm81_rhs(I);
    for (int t = 0; t < 60; ++t) {
      const Elem x = static_cast<Elem>(rng() % F.order()), y = static_cast<Elem>(rng() % F.order());
      const auto ps = eval_sides(I, x, y);
      CHECK(lhs.to_sparse().eval(x, y) == ps.lhs);
      if (ps.rhs_defined) {
        CHECK(ps.lhs == ps.rhs);
        CHECK(rhs.to_sparse().eval(x, y) == ps.rhs);
      }
    }
  }
}

TEST_CASE("quotient routes agree")
{
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 4}, {3, 3}, {4, 2}, {9, 2}}) {
    const auto I = make_identity_instance(q, n);
    CHECK(power_difference_quotient(I, QuotientRoute::LongDivision) ==
          power_difference_quotient(I, QuotientRoute::GeometricSum));
  }
}

TEST_CASE("all identities on small fields")
{
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    std::uint64_t qn = q;
    for (unsigned n = 1; qn <= 81; ++n, qn *= q) {
      CAPTURE(q);
      CAPTURE(n);
      const auto I = make_identity_instance(q, n);
      CHECK(verify_thm81(I));
      CHECK(verify_lemma82(I));
      CHECK(verify_cor83(I));
      CHECK(verify_lemma84(I));
      CHECK(verify_x1_specialization(I));
    }
  }
}

TEST_CASE("degenerate n = 1")
{
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto I = make_identity_instance(q, 1);
    CHECK(I.delta.empty());
    CHECK(verify_thm81(I));
    CHECK(verify_lemma84(I));
  }
}

TEST_CASE("product over Delta as a sparse sum over F_8 and F_16")
{
  // q = 2, n = 3: 1 + Y + Y^3; q = 4, n = 2: 1 + Y
  const auto I8 = make_identity_instance(2, 3);
  CHECK(verify_lemma84(I8));
  for (Elem u : I8.delta) {
    const auto& F = *I8.ctx;
    CHECK(F.add(F.add(1, u), F.pow(u, 3)) == 0);
  }
  const auto I16 = make_identity_instance(4, 2);
  CHECK(I16.delta == std::vector<Elem>{1});
}

TEST_CASE("image size equals distinct root count")
{
  for (std::uint64_t q = 2; q <= 8; ++q) {
    if (!prime_power(q))
      continue;
    for (unsigned n = 2; n <= 3; ++n) {
      std::uint64_t qn = 1;
      for (unsigned i = 0; i < n; ++i)
        qn *= q;
      if (qn > 64)
        continue;
      const auto r = image_size_check(make_identity_instance(q, n));
      CAPTURE(q);
      CAPTURE(n);
      CHECK(r.ok());
      CHECK(r.image_size < qn);
    }
  }
}
