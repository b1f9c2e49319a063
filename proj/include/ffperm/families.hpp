#pragma once

// Explicit parametrization of the permutation quadrinomials: three parametric families of A_0
// plus two monomials, each expanded under A(X) = delta * A_0(gamma X).

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ffperm/field.hpp"
#include "ffperm/poly.hpp"

namespace ffperm {

enum class FamilyCase { One, Two, Three, Mono2, Mono3 };

const char* family_case_name(FamilyCase c);

// a | b << 16 | c << 32 | d << 48, for coefficient tuples over fields of order <= 2^16.
using PackedTuple = std::uint64_t;

inline PackedTuple pack_tuple(Elem a, Elem b, Elem c, Elem d)
{
  return std::uint64_t(a) | std::uint64_t(b) << 16 | std::uint64_t(c) << 32 | std::uint64_t(d) << 48;
}

inline std::array<Elem, 4> unpack_tuple(PackedTuple t)
{
  return {Elem(t & 0xFFFF), Elem(t >> 16 & 0xFFFF), Elem(t >> 32 & 0xFFFF), Elem(t >> 48 & 0xFFFF)};
}

// Case One needs alpha, beta outside F_q and ord2(k) <= ord2(l); cases Two and Three need
// alpha, beta outside mu_{q+1} and ord2(k) != ord2(l), resp. >=. The monomials X^{Q+1} (Mono2)
// and X^Q (Mono3) carry the gates of cases Two and Three and ignore alpha, beta.
// Throws ConstraintViolated.
Poly gen_A0(const FieldCtx& ctx, FamilyCase c, Elem alpha, Elem beta, std::uint64_t q, std::uint64_t Q);

// Coefficient tuples (of X^{Q+1}, X^Q, X, 1) of delta * A0(gamma X) over gamma in mu_{q+1} and
// delta in F_{q^2}^*; sorted, deduplicated. A0 must be supported on those four monomials.
std::vector<PackedTuple> orbit_expand(const Poly& A0, std::uint64_t q, std::uint64_t Q);

struct FamilyEnumeration {
  std::vector<PackedTuple> tuples;             // sorted union
  std::map<std::string, std::size_t> case_counts;  // distinct tuples per case
};

// Union of every orbit. Empty for odd characteristic (r is not checked there). Otherwise throws BadR unless r = Q+1 (mod q+1) and
// gcd(r, q-1) = 1.
FamilyEnumeration enumerate_families(const FieldCtx& ctx, std::uint64_t q, std::uint64_t Q, std::uint64_t r);

}  // namespace ffperm
