#pragma once

// Polynomials, rational maps on P^1 and ramification over a FieldCtx.
// A Poly stores a non-owning pointer to its field; callers keep the FieldPtr alive.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffperm/field.hpp"

namespace ffperm {

class Poly {
 public:
  Poly() = default;
  explicit Poly(const FieldCtx& ctx) : ctx_(&ctx) {}
  Poly(const FieldCtx& ctx, std::vector<Elem> coeffs);

  static Poly constant(const FieldCtx& ctx, Elem c);
  static Poly monomial(const FieldCtx& ctx, Elem c, std::size_t deg);
  static Poly x(const FieldCtx& ctx) { return monomial(ctx, 1, 1); }
  // Sum of c * X^e over (e, c) pairs; repeated exponents are added.
  static Poly from_terms(const FieldCtx& ctx, const std::vector<std::pair<std::size_t, Elem>>& terms);

  const FieldCtx& ctx() const { return *ctx_; }
  const FieldCtx* ctx_ptr() const { return ctx_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem eval(Elem x) const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

 private:
  void trim();

  const FieldCtx* ctx_ = nullptr;
  std::vector<Elem> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Elem s);
Poly shift(const Poly& a, std::size_t k);  // a * X^k
Poly poly_monic(const Poly& a);
Poly poly_pow(const Poly& a, std::uint64_t e);
Poly poly_compose(const Poly& a, const Poly& b);  // a(b(X))

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);  // monic, gcd(0,0) = 0
Poly poly_derivative(const Poly& a);
bool poly_divides(const Poly& d, const Poly& a);
// Quotient of an exact division; throws NonExactDivision otherwise.
Poly poly_exact_div(const Poly& a, const Poly& b);
Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& m);

// q-th power on every coefficient; q must be a power of the field characteristic.
Poly conj_poly(const Poly& a, std::uint64_t q);
// X^deg(A) * A^(q)(1/X).
Poly hat_poly(const Poly& a, std::uint64_t q);
// The unit u with hat(A) = u*A, when A is self-conjugate reciprocal.
std::optional<Elem> is_scr(const Poly& a, std::uint64_t q);

// Roots lying in mu_{q+1}, with multiplicities, in mu order.
std::vector<std::pair<Elem, unsigned>> roots_in_mu(const Poly& a, std::uint64_t q);

struct QuadScrReport {
  Elem trace_value = 0;
  unsigned root_count = 0;
};
// Trace Tr_{F_q/F_2}(alpha^{q+1}/beta^2) and the number of distinct mu-roots of
// alpha X^2 + beta X + alpha^q; q even, beta in F_q^*.
QuadScrReport quad_scr_mu_roots(const FieldCtx& ctx, Elem alpha, Elem beta, std::uint64_t q);

// P = lc * prod S_i^i, S_i monic squarefree and pairwise coprime; sorted by i.
std::vector<std::pair<Poly, unsigned>> squarefree_decomp(const Poly& p);
// R with R(X^p) = P when every exponent of P is divisible by p.
Poly pth_root(const Poly& p);
// Distinct roots of P that lie in the field, sorted by encoding.
std::vector<Elem> field_roots(const Poly& p);
// Multiplicity of x as a root of P (P nonzero).
unsigned root_multiplicity(const Poly& p, Elem x);

// ---------------------------------------------------------------------------
// Points and maps on P^1

struct P1Point {
  bool inf = false;
  Elem x = 0;

  static P1Point finite(Elem v) { return {false, v}; }
  static P1Point infinity() { return {true, 0}; }
  bool operator==(const P1Point& o) const { return inf == o.inf && (inf || x == o.x); }
  bool operator!=(const P1Point& o) const { return !(*this == o); }
  bool operator<(const P1Point& o) const
  {
    if (inf != o.inf)
      return !inf;
    return !inf && x < o.x;
  }
};

struct RationalMap {
  Poly num;
  Poly den;      // monic, coprime to num
  Poly removed;  // monic common factor divided out by rat_normalize

  const FieldCtx& ctx() const { return num.ctx(); }
  int degree() const { return std::max(num.degree(), den.degree()); }
  bool is_constant() const { return num.degree() <= 0 && den.degree() <= 0; }
};

RationalMap rat_normalize(const Poly& num, const Poly& den);
P1Point rat_eval(const RationalMap& g, const P1Point& x);
// f o g for rational maps.
RationalMap rat_compose(const RationalMap& f, const RationalMap& g);
bool rat_equal(const RationalMap& f, const RationalMap& g);

struct DegreeOneMap {
  Elem a = 1, b = 0, c = 0, d = 1;  // (aX + b)/(cX + d)
};

void check_nondegenerate(const FieldCtx& ctx, const DegreeOneMap& m);
DegreeOneMap deg1_inverse(const FieldCtx& ctx, const DegreeOneMap& m);
DegreeOneMap deg1_compose(const FieldCtx& ctx, const DegreeOneMap& outer, const DegreeOneMap& inner);
RationalMap deg1_as_rat(const FieldCtx& ctx, const DegreeOneMap& m);
P1Point deg1_eval(const FieldCtx& ctx, const DegreeOneMap& m, const P1Point& x);
// rho o g o sigma.
RationalMap rat_compose(const DegreeOneMap& rho, const RationalMap& g, const DegreeOneMap& sigma);

// Degree-one maps on mu_{q+1}: the closed-form shape test and a direct enumeration.
bool mu_perm_deg1_shape(const FieldCtx& ctx, const DegreeOneMap& rho, std::uint64_t q);
bool mu_perm_deg1_enum(const FieldCtx& ctx, const DegreeOneMap& rho, std::uint64_t q);
// Both routes; throws Internal if they disagree.
bool mu_perm_deg1_test(const FieldCtx& ctx, const DegreeOneMap& rho, std::uint64_t q);
bool mu_to_p1_shape(const FieldCtx& ctx, const DegreeOneMap& rho, std::uint64_t q);
bool mu_to_p1_enum(const FieldCtx& ctx, const DegreeOneMap& rho, std::uint64_t q);
bool mu_to_p1_test(const FieldCtx& ctx, const DegreeOneMap& rho, std::uint64_t q);

// ---------------------------------------------------------------------------
// Ramification

enum class SplitPolicy { Require, Report };

struct RamReport {
  P1Point target;
  std::vector<unsigned> multiset;  // sorted ascending; sum = deg g
  unsigned preimage_count = 0;     // distinct preimages realized in the field (incl. infinity)
  bool split = true;               // every preimage realized
  std::vector<std::pair<P1Point, unsigned>> points;  // realized preimages with indices
};

// Ramification multiset of g over beta. With SplitPolicy::Require a fiber whose points are
// not all realized in the field raises SplitFailure; with Report the multiset is still exact
// and `split` is false.
RamReport ramification_multiset(const RationalMap& g, const P1Point& beta,
                                SplitPolicy policy = SplitPolicy::Require);
unsigned ramification_index(const RationalMap& g, const P1Point& alpha);

// num' * den - num * den'.
Poly wronskian(const RationalMap& g);

struct SeparableSplit {
  bool separable = true;
  unsigned ell = 0;  // g = g0 o X^(p^ell)
  RationalMap g0;
};
SeparableSplit is_separable_rat(const RationalMap& g);

// ---------------------------------------------------------------------------
// Bivariate polynomials, sparse

class BiPoly {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;  // (deg X, deg Y)

  BiPoly() = default;
  explicit BiPoly(const FieldCtx& ctx) : ctx_(&ctx) {}

  static BiPoly term(const FieldCtx& ctx, Elem c, std::uint32_t i, std::uint32_t j);

  const FieldCtx& ctx() const { return *ctx_; }
  const std::map<Key, Elem>& terms() const { return t_; }
  Elem coeff(std::uint32_t i, std::uint32_t j) const;
  void add_term(std::uint32_t i, std::uint32_t j, Elem c);
  Elem eval(Elem x, Elem y) const;
  bool operator==(const BiPoly& o) const { return t_ == o.t_; }

 private:
  const FieldCtx* ctx_ = nullptr;
  std::map<Key, Elem> t_;
};

BiPoly operator+(const BiPoly& a, const BiPoly& b);
BiPoly operator-(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly scale(const BiPoly& a, Elem s);

// ---------------------------------------------------------------------------
// Text formats: "c0,c1,...,cn" and "num|den", element encodings in decimal.

std::string poly_to_text(const Poly& p);
Poly poly_from_text(const FieldCtx& ctx, const std::string& s);
std::string rat_to_text(const RationalMap& g);
RationalMap rat_from_text(const FieldCtx& ctx, const std::string& s);

}  // namespace ffperm
