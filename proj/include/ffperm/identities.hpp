#pragma once

// Exact verification of a bivariate product identity over F_{q^n} and the univariate
// factorizations it specializes to. All polynomials here are small and dense.

#include <cstdint>
#include <vector>

#include "ffperm/field.hpp"
#include "ffperm/poly.hpp"

namespace ffperm {

// Dense coefficient grid, entry (i, j) is the coefficient of X^i Y^j.
class DenseBiPoly {
 public:
  DenseBiPoly() = default;
  DenseBiPoly(const FieldCtx& ctx, std::size_t nx, std::size_t ny);

  const FieldCtx& ctx() const { return *ctx_; }
  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  Elem coeff(std::size_t i, std::size_t j) const { return i < nx_ && j < ny_ ? c_[i * ny_ + j] : 0; }
  Elem& at(std::size_t i, std::size_t j) { return c_[i * ny_ + j]; }
  void add_term(std::size_t i, std::size_t j, Elem c);  // grows the grid as needed
  bool is_zero() const;

  // Y-polynomial obtained by substituting X = x.
  Poly at_x(Elem x) const;
  BiPoly to_sparse() const;

 private:
  const FieldCtx* ctx_ = nullptr;
  std::size_t nx_ = 0, ny_ = 0;
  std::vector<Elem> c_;
};

// Coefficientwise, ignoring grid shape.
bool operator==(const DenseBiPoly& a, const DenseBiPoly& b);
DenseBiPoly operator*(const DenseBiPoly& a, const DenseBiPoly& b);

struct IdentityInstance {
  std::uint64_t q = 0;
  unsigned n = 0;
  FieldPtr ctx;             // F_{q^n}
  std::vector<Elem> delta;  // distinct (w^q - w)^(q-1), w outside F_q; sorted
};

inline constexpr std::uint64_t kDenseLimit = 256;

// Throws BadFieldSpec unless q is a prime power and n >= 1, SizeLimit if q^n > limit.
IdentityInstance make_identity_instance(std::uint64_t q, unsigned n, std::uint64_t limit = kDenseLimit);

std::vector<Elem> delta_set(std::uint64_t q, unsigned n);

// X^{q^n-1} - 1 + prod_{z != 0} (1 + zX - z^q Y)
DenseBiPoly thm81_lhs(const IdentityInstance& I);

enum class QuotientRoute { LongDivision, GeometricSum };

// (X^{q^n-1} - Y^{q^n-1}) / (X^s - Y^s) with s = (q^n-1)/(q-1). Long division runs in X and
// throws NonExactDivision on a nonzero remainder.
DenseBiPoly power_difference_quotient(const IdentityInstance& I, QuotientRoute route);

// -Y * quotient * (Y^{(q^n-q)/(q-1)} + sum_{i=1}^{n-1} X^{1+(q^n-q^{i+1})/(q-1)} Y^{(q^i-q)/(q-1)})
DenseBiPoly thm81_rhs(const IdentityInstance& I, QuotientRoute route = QuotientRoute::LongDivision);

// Both quotient routes agree and lhs == rhs.
bool verify_thm81(const IdentityInstance& I);

// prod_{z != 0} (1 + z - z^q Y), expanded directly.
Poly lemma82_lhs(const IdentityInstance& I);
// -(Y^{q^n} - Y) / (Y^s - 1) * prod_{u in Delta} (Y - u)^q
Poly lemma82_rhs(const IdentityInstance& I);
// |Delta| = (q^{n-1}-1)/(q-1) and lhs == rhs.
bool verify_lemma82(const IdentityInstance& I);

// prod_{z} (Y - (z+1) z^{q-1})
Poly cor83_lhs(const IdentityInstance& I);
// Y^2 (Y^{q^n-1} - 1) / (Y^s - 1) * prod_{u in Delta} (Y - u)^q
Poly cor83_rhs(const IdentityInstance& I);
bool verify_cor83(const IdentityInstance& I);

// prod_{u in Delta} (Y - u) against sum_{i=1}^n Y^{(q^{i-1}-1)/(q-1)}
bool verify_lemma84(const IdentityInstance& I);

// Substituting X = 1 into both sides of the bivariate identity gives the two sides of the
// X = 1 factorization.
bool verify_x1_specialization(const IdentityInstance& I);

struct ImageSizeCheck {
  std::size_t image_size = 0;    // distinct values of (z+1) z^{q-1}
  std::size_t distinct_roots = 0;  // of the factored product, in F_{q^n}
  bool ok() const { return image_size == distinct_roots; }
};
ImageSizeCheck image_size_check(const IdentityInstance& I);

}  // namespace ffperm
