#pragma once

// Small integer helpers shared by every module.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ffperm {

// Largest i with 2^i | n. Requires n >= 1.
unsigned ord2(std::uint64_t n);

// For sign '+' decides gcd(2^i+1, 2^j+1) == 1; for '-' decides gcd(2^i-1, 2^j+1) == 1.
bool gcd_power_rule(unsigned i, unsigned j, char sign);

std::uint64_t ipow(std::uint64_t base, unsigned e);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// (p, k) with q = p^k, or nullopt if q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q);

// Nonnegative residue of x mod m.
std::uint64_t mod_floor(std::int64_t x, std::uint64_t m);
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Smallest positive r with r = Q+1 (mod q+1) and gcd(r, q-1) = 1; nullopt if the scan
// up to (q+1)(q-1)+Q+1 finds none.
std::optional<std::uint64_t> canonical_r(std::uint64_t q, std::uint64_t Q);

// Smallest positive u with u*coef = target (mod m); nullopt if none.
std::optional<std::uint64_t> smallest_congruence_solution(std::int64_t coef, std::int64_t target,
                                                          std::uint64_t m);

}  // namespace ffperm
