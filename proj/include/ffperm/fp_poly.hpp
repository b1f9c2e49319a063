#pragma once

// Polynomials over the prime field F_p, used to validate and search defining polynomials
// before any extension field exists. Coefficients low degree first, trimmed.

#include <cstdint>
#include <vector>

namespace ffperm::fp {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a);
Poly mul(const Poly& a, const Poly& b, unsigned p);
Poly mod(Poly a, const Poly& m, unsigned p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, unsigned p);
Poly powmod(Poly base, std::uint64_t e, const Poly& m, unsigned p);
Poly sub(const Poly& a, const Poly& b, unsigned p);
Poly gcd(Poly a, Poly b, unsigned p);

// x^(p^d) mod f.
Poly frobenius_x(unsigned d, const Poly& f, unsigned p);

// Rabin's irreducibility test for a polynomial of degree >= 1 (any leading coefficient).
bool is_irreducible(const Poly& f, unsigned p);

// True when x has multiplicative order p^N - 1 modulo the irreducible f of degree N.
bool is_primitive(const Poly& f, unsigned p);

}  // namespace ffperm::fp
