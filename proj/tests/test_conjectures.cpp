#include <set>

#include "ffperm/conjectures.hpp"
#include "ffperm/numtheory.hpp"
#include "test_util.hpp"

using namespace ffperm;

namespace {

constexpr Elem w = 2, w2 = 3;

CorParams params(CorId id, std::uint64_t q, std::uint64_t Q)
{
  CorParams p;
  p.id = id;
  p.q = q;
  p.Q = Q;
  return p;
}

void require_clean(const CorSweepReport& r)
{
  CHECK(r.checked > 0);
  CHECK(r.mismatches.empty());
  CHECK(r.agreements == r.checked);
}

}  // namespace

TEST_CASE("corollary ids round-trip")
{
  for (const char* s : {"9.1", "9.2", "9.3", "9.4", "9.5", "9.5b", "9.6", "9.7", "remark96", "generalized97"})
    CHECK(std::string(cor_id_name(parse_cor_id(s).value())) == s);
  CHECK_FALSE(parse_cor_id("9.8"));
}

TEST_CASE("hand-evaluated corollary points")
{
  // f = X + X^2 + X^3 on F_4: f(w) = w + w^2 + 1 = 0 = f(0)
  auto p = params(CorId::C97, 2, 2);
  p.a = 1;
  p.b = 1;
  auto v = cor_check(p);
  CHECK_FALSE(v.condition);
  CHECK_FALSE(v.oracle);

  p = params(CorId::C91, 2, 2);
  p.a = w2, p.b = 0, p.c = 1, p.d = w2;
  v = cor_check(p);
  CHECK(v.condition);
  CHECK(v.oracle);

  // e = 1 + b^3 + c^3 = 0
  p = params(CorId::C94, 2, 4);
  p.b = 1, p.c = 0;
  v = cor_check(p);
  CHECK_FALSE(v.condition);
  CHECK_FALSE(v.oracle);
  p.b = w, p.c = 0;
  CHECK(cor_check(p).agree());
}

TEST_CASE("hypothesis violations")
{
  auto p = params(CorId::C91, 4, 2);
  CHECK_ERRC(cor_check(p), HypothesisViolated);
  CHECK_FALSE(cor_admissible(p));
  p = params(CorId::C97, 2, 2);
  p.a = w, p.b = 1;  // a + b = w^2 is fine
  CHECK(cor_admissible(p));
  p.a = 0;
  CHECK_ERRC(cor_check(p), HypothesisViolated);
  p = params(CorId::C97, 4, 2);  // gcd(4, 1) = 1, admissible
  p.a = 1, p.b = 1;
  CHECK(cor_admissible(p));
  p = params(CorId::C97, 2, 4);  // gcd(2, 2) = 2
  p.a = 1, p.b = 1;
  CHECK_ERRC(cor_check(p), HypothesisViolated);
  p = params(CorId::C96, 2, 2);
  p.a = w;  // not in F_2
  CHECK_ERRC(cor_check(p), HypothesisViolated);
  CHECK_ERRC(cor95_check({8, 2, 0, 1}), HypothesisViolated);
  CHECK_ERRC(cor95_check({4, 2, 1, 1}), HypothesisViolated);  // k even
  CHECK_ERRC(cor_check(params(CorId::C92, 3, 3)), HypothesisViolated);
  CHECK_ERRC(cor_exponents(CorId::C91, 2, 2), HypothesisViolated);
}

TEST_CASE("exponents are the smallest solutions")
{
  for (std::uint64_t q : {2, 4, 8, 16})
    for (std::uint64_t Q : {2, 4, 8, 16, 32}) {
      if (gcd_u64(Q - 1, q + 1) == 1) {
        const auto e = cor_exponents(CorId::C92, q, Q);
        CHECK((e.u * (Q - 1)) % (q + 1) == q % (q + 1));
        CHECK((e.v * (Q - 1)) % (q + 1) == Q % (q + 1));
        CHECK(e.u >= 1);
        CHECK(e.u <= q + 1);
        for (std::uint64_t s = 1; s < e.u; ++s)
          CHECK((s * (Q - 1)) % (q + 1) != q % (q + 1));
      }
      if (gcd_u64(Q + 1, q + 1) == 1) {
        const auto e = cor_exponents(CorId::C93, q, Q);
        CHECK((e.u * (Q + 1)) % (q + 1) == 1 % (q + 1));
        CHECK((e.v * (Q + 1)) % (q + 1) == Q % (q + 1));
      }
    }
}

TEST_CASE("butterfly examples")
{
  const ButterflyMap m{8, 2, 1, 1};
  const auto v = cor95_check(m);
  CHECK(v.condition);
  CHECK(v.oracle);
  CHECK(cor95b_check(m).condition);
  auto F8 = field(2, 3);
  CHECK(butterfly_eval(*F8, m, 0, 0) == std::pair<Elem, Elem>{0, 0});
  // R(1, 0) = 1, R(0, 1) = 1 + 1 = 0
  CHECK(butterfly_eval(*F8, m, 1, 0) == std::pair<Elem, Elem>{1, 0});
  CHECK(butterfly_is_perm(m));

  std::size_t perms = 0;
  for (Elem al = 1; al < 8; ++al)
    for (Elem be = 1; be < 8; ++be) {
      const auto r = butterfly_report({8, 2, al, be});
      CHECK(r.consistent());
      perms += r.oracle;
    }
  CHECK(perms > 0);
  CHECK(perms < 49);
}

TEST_CASE("corollary sweeps over small fields")
{
  require_clean(cor_sweep_exhaustive(CorId::C91, 2, 2));
  require_clean(cor_sweep_exhaustive(CorId::C91, 2, 8));
  require_clean(cor_sweep_random(CorId::C91, 8, 2, 2000, 5));
  require_clean(cor_sweep_random(CorId::C91, 8, 8, 2000, 6));
  for (std::uint64_t q : {2, 4})
    for (std::uint64_t Q : {2, 4, 8, 16}) {
      CAPTURE(q);
      CAPTURE(Q);
      for (CorId id : {CorId::C92, CorId::C96}) {
        if (gcd_u64(Q - 1, q + 1) != 1)
          continue;
        require_clean(cor_sweep_exhaustive(id, q, Q));
        require_clean(cor_sweep_exhaustive(id, q, Q, 1));
      }
      for (CorId id : {CorId::C93, CorId::C94}) {
        if (gcd_u64(Q + 1, q + 1) != 1)
          continue;
        require_clean(cor_sweep_exhaustive(id, q, Q));
        require_clean(cor_sweep_exhaustive(id, q, Q, 1));
      }
    }
  require_clean(cor_sweep_exhaustive(CorId::C97, 2, 2));
  require_clean(cor_sweep_exhaustive(CorId::C97, 8, 2));
  require_clean(cor_sweep_exhaustive(CorId::C97, 8, 2, 1));
  require_clean(cor_sweep_exhaustive(CorId::C95, 8, 2));
  require_clean(cor_sweep_exhaustive(CorId::C95b, 8, 4));
  require_clean(cor_sweep_exhaustive(CorId::Gen97, 2, 2));
}

TEST_CASE("corollaries have both verdicts represented")
{
  const auto count_pos = [](CorId id, std::uint64_t q, std::uint64_t Q) {
    auto p = params(id, q, Q);
    std::size_t pos = 0, all = 0;
    const auto F = field(2, 2 * prime_power(q)->second);
    for (Elem x = 0; x < F->order(); ++x)
      for (Elem y = 0; y < F->order(); ++y) {
        p.b = x;
        p.c = y;
        ++all;
        pos += cor_check(p).oracle;
      }
    return std::pair{pos, all};
  };
  const auto [pos, all] = count_pos(CorId::C94, 4, 2);
  CHECK(pos > 0);
  CHECK(pos < all);
}

TEST_CASE("four-term family with u, v exponents")
{
  CHECK(generalized97_check(2, 2, 0, 0, 1, 0).condition);
  CHECK(generalized97_check(2, 2, 0, 0, 1, 0).oracle);
  // e = 0: a^3 + b^3 + c^3 + d^3 = 1 + 1 = 0
  const auto v = generalized97_check(2, 2, 1, 0, 1, 0);
  CHECK_FALSE(v.condition);
  CHECK_FALSE(v.oracle);
  CHECK_ERRC(generalized97_check(2, 4, 0, 0, 1, 0), HypothesisViolated);
}

TEST_CASE("lambda family")
{
  CHECK_ERRC(remark96_lambdas(2, 2), NoAdmissibleLambda);
  CHECK_ERRC(remark96_lambdas(2, 8), NoAdmissibleLambda);  // Q is a power of q
  CHECK_ERRC(remark96_lambdas(4, 2), HypothesisViolated);
  struct Case {
    std::uint64_t q, Q;
  };
  for (Case cs : {Case{8, 2}, Case{8, 32}, Case{32, 8}, Case{32, 2}}) {
    CAPTURE(cs.q);
    CAPTURE(cs.Q);
    const auto F = field(2, 2 * prime_power(cs.q)->second);
    const auto lams = remark96_lambdas(cs.q, cs.Q);
    std::set<std::pair<Elem, Elem>> distinct;
    for (Elem l : lams) {
      const auto r = remark96_family(cs.q, cs.Q, l);
      CHECK(r.permutes);
      CHECK(r.trace_nonzero);
      CHECK(F->in_subfield(r.a, prime_power(cs.q)->second));
      CHECK(F->in_subfield(r.d, prime_power(cs.q)->second));
      const auto ri = remark96_family(cs.q, cs.Q, F->inv(l));
      CHECK(ri.a == r.a);
      CHECK(ri.d == r.d);
      distinct.insert({r.a, r.d});
    }
    CHECK(distinct.size() == (cs.q + 1 - gcd_u64(cs.q + 1, cs.Q + 1)) / 2);
    CHECK_ERRC(remark96_family(cs.q, cs.Q, 1), HypothesisViolated);
  }
}

TEST_CASE("lambda family is every two-term permutation with nonzero trace term")
{
  const std::uint64_t q = 8, Q = 2;
  const auto F = field(2, 6);
  std::set<std::pair<Elem, Elem>> fam;
  for (Elem l : remark96_lambdas(q, Q)) {
    const auto r = remark96_family(q, Q, l);
    fam.insert({r.a, r.d});
  }
  std::set<std::pair<Elem, Elem>> found;
  auto p = params(CorId::C96, q, Q);
  for (Elem a : F->subfield(3))
    for (Elem d : F->subfield(3)) {
      p.a = a;
      p.d = d;
      const auto v = cor_check(p);
      REQUIRE(v.agree());
      const Elem e = F->add(1, F->add(F->mul(a, a), F->mul(d, d)));
      if (v.oracle && F->add(a, d) != 0 && F->rel_trace(F->div(d, e), 3, 1) != 0)
        found.insert({a, d});
    }
  CHECK(found == fam);
}
