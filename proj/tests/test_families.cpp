#include <algorithm>
#include <random>

#include "ffperm/criteria.hpp"
#include "ffperm/families.hpp"
#include "ffperm/numtheory.hpp"
#include "ffperm/oracle.hpp"
#include "test_util.hpp"

using namespace ffperm;

namespace {

constexpr Elem w = 2, w2 = 3;

std::vector<PackedTuple> criterion_positives(FieldPtr F, std::uint64_t q, std::uint64_t Q, std::uint64_t r)
{
  const auto pool = F->subfield(2 * prime_power(q)->second);
  std::vector<PackedTuple> out;
  for (Elem a : pool)
    for (Elem b : pool)
      for (Elem c : pool)
        for (Elem d : pool)
          if (check_main_theorem(make_input(F, q, Q, r, a, b, c, d)).verdict)
            out.push_back(pack_tuple(a, b, c, d));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("tuple packing round-trips")
{
  const auto t = pack_tuple(1, 200, 65535, 7);
  CHECK(unpack_tuple(t) == std::array<Elem, 4>{1, 200, 65535, 7});
}

TEST_CASE("gen_A0 examples")
{
  auto F4 = field(2, 2);
  CHECK(gen_A0(*F4, FamilyCase::One, w, w, 2, 2) == Poly(*F4, {w2, 1, 0, w2}));
  CHECK(gen_A0(*F4, FamilyCase::Mono3, 0, 0, 2, 2) == Poly::monomial(*F4, 1, 2));
  // q = 2, Q = 4: ord2(1) = 0 != 1 = ord2(2)
  CHECK(gen_A0(*F4, FamilyCase::Mono2, 0, 0, 2, 4) == Poly::monomial(*F4, 1, 5));
  CHECK_ERRC(gen_A0(*F4, FamilyCase::Mono2, 0, 0, 2, 2), ConstraintViolated);
  CHECK_ERRC(gen_A0(*F4, FamilyCase::Two, 0, 0, 2, 2), ConstraintViolated);
  CHECK_ERRC(gen_A0(*F4, FamilyCase::One, 1, w, 2, 2), ConstraintViolated);
  // mu_3 = F_4^*, so cases 2 and 3 only admit alpha = beta = 0 over F_4
  CHECK_ERRC(gen_A0(*F4, FamilyCase::Three, 1, 0, 2, 2), ConstraintViolated);
  CHECK(gen_A0(*F4, FamilyCase::Three, 0, 0, 2, 2) == Poly(*F4, {0, 1}));
  auto F16 = field(2, 4);
  // case 3 with q = 4, Q = 2: ord2(2) = 1 >= 0
  const Elem a = F16->exp(1);
  REQUIRE(F16->pow(a, 5) != 1);
  const Poly A0 = gen_A0(*F16, FamilyCase::Three, a, 0, 4, 2);
  const auto& F = *F16;
  CHECK(A0 == Poly::from_terms(F, {{3, F.pow(a, 8)}, {2, F.pow(a, 9)}, {1, 1}, {0, a}}));
  CHECK_ERRC(gen_A0(*F16, FamilyCase::One, a, a, 4, 2), ConstraintViolated);
}

TEST_CASE("orbit_expand")
{
  auto F16 = field(2, 4);
  const auto ox = orbit_expand(Poly::x(*F16), 4, 2);
  CHECK(ox.size() == 15);
  for (auto t : ox) {
    const auto v = unpack_tuple(t);
    CHECK(v[0] == 0);
    CHECK(v[1] == 0);
    CHECK(v[2] != 0);
    CHECK(v[3] == 0);
  }
  auto F4 = field(2, 2);
  CHECK(orbit_expand(Poly::monomial(*F4, 1, 3), 2, 2).size() == 3);
  CHECK_ERRC(orbit_expand(Poly::monomial(*F4, 1, 4), 2, 2), ConstraintViolated);

  // closed under scalars and under X -> gamma X
  const Poly A0 = gen_A0(*F16, FamilyCase::Three, F16->exp(1), F16->exp(2), 4, 2);
  const auto orb = orbit_expand(A0, 4, 2);
  const auto& F = *F16;
  for (auto t : orb) {
    const auto v = unpack_tuple(t);
    for (Elem s = 1; s < 16; ++s)
      REQUIRE(std::binary_search(orb.begin(), orb.end(),
                                 pack_tuple(F.mul(s, v[0]), F.mul(s, v[1]), F.mul(s, v[2]), F.mul(s, v[3]))));
    for (Elem g : F.mu_subgroup(4))
      REQUIRE(std::binary_search(orb.begin(), orb.end(),
                                 pack_tuple(F.mul(F.pow(g, 3), v[0]), F.mul(F.pow(g, 2), v[1]), F.mul(g, v[2]), v[3])));
  }
}

TEST_CASE("families coincide with criterion positives")
{
  struct Case {
    unsigned N;
    std::uint64_t q, Q;
  };
  for (Case cs : {Case{2, 2, 2}, Case{2, 2, 4}, Case{4, 4, 2}, Case{4, 4, 4}, Case{2, 2, 8}, Case{4, 4, 8}}) {
    auto F = field(2, cs.N);
    const std::uint64_t r = canonical_r(cs.q, cs.Q).value();
    const auto fam = enumerate_families(*F, cs.q, cs.Q, r);
    const auto pos = criterion_positives(F, cs.q, cs.Q, r);
    CHECK(!pos.empty());
    REQUIRE(fam.tuples == pos);
    std::size_t sum = 0;
    for (auto& [name, n] : fam.case_counts)
      sum += n;
    CHECK(sum >= fam.tuples.size());
  }
}

TEST_CASE("case gates select the active families")
{
  auto F4 = field(2, 2);
  // q = Q = 2: cases 1 and 3 (and X^Q)
  auto e22 = enumerate_families(*F4, 2, 2, 3);
  CHECK(e22.case_counts.count("1"));
  CHECK(e22.case_counts.count("3"));
  CHECK(e22.case_counts.count("mono_3"));
  CHECK_FALSE(e22.case_counts.count("2"));
  // q = 2, Q = 4: cases 1 and 2
  auto e24 = enumerate_families(*F4, 2, 4, 2);
  CHECK(e24.case_counts.count("1"));
  CHECK(e24.case_counts.count("2"));
  CHECK(e24.case_counts.count("mono_2"));
  CHECK_FALSE(e24.case_counts.count("3"));
  auto F9 = field(3, 2);
  CHECK(enumerate_families(*F9, 3, 3, 4).tuples.empty());
  CHECK_ERRC(enumerate_families(*F4, 2, 2, 4), BadR);
}

TEST_CASE("generated tuples permute over F_64")
{
  auto F64 = field(2, 6);
  const auto& F = *F64;
  const std::uint64_t q = 8;
  std::mt19937_64 rng(12);
  std::vector<Elem> outside_fq, outside_mu;
  for (Elem x = 0; x < 64; ++x) {
    if (!F.in_subfield(x, 3))
      outside_fq.push_back(x);
    if (x == 0 || F.pow(x, 9) != 1)
      outside_mu.push_back(x);
  }
  for (std::uint64_t Q : {2u, 4u, 8u}) {
    const std::uint64_t r = canonical_r(q, Q).value();
    const unsigned ok = 0, ol = ord2(prime_power(Q)->second);
    std::vector<std::pair<FamilyCase, const std::vector<Elem>*>> cases;
    if (ok <= ol)
      cases.emplace_back(FamilyCase::One, &outside_fq);
    if (ok != ol)
      cases.emplace_back(FamilyCase::Two, &outside_mu);
    if (ok >= ol)
      cases.emplace_back(FamilyCase::Three, &outside_mu);
    for (auto [c, pool] : cases)
      for (int t = 0; t < 40; ++t) {
        const Poly A0 = gen_A0(F, c, (*pool)[rng() % pool->size()], (*pool)[rng() % pool->size()], q, Q);
        const auto orb = orbit_expand(A0, q, Q);
        for (int s = 0; s < 3; ++s) {
          const auto v = unpack_tuple(orb[rng() % orb.size()]);
          const auto in = make_input(F64, q, Q, r, v[0], v[1], v[2], v[3]);
          REQUIRE(check_main_theorem(in).verdict);
          REQUIRE(is_perm_fq2(F, sparse_from_A(quad_A(in), r, q), q).is_permutation);
        }
      }
  }
}
