#pragma once

// Brute-force permutation tests on F_{q^2}, mu_{q+1} and P^1(F_q), and the reductions
// between them.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffperm/field.hpp"
#include "ffperm/poly.hpp"

namespace ffperm {

// Sum of coeff * X^exp; exponents strictly increasing, coefficients nonzero.
struct SparsePoly {
  std::vector<std::pair<std::uint64_t, Elem>> terms;
};

SparsePoly make_sparse(const FieldCtx& ctx, std::vector<std::pair<std::uint64_t, Elem>> terms);
// X^r A(X^{q-1}).
SparsePoly sparse_from_A(const Poly& A, std::uint64_t r, std::uint64_t q);
// Nonzero arguments use exponents reduced mod |F|-1; a zero exponent is a constant term.
Elem sparse_eval(const FieldCtx& ctx, const SparsePoly& f, Elem x);
std::string sparse_to_text(const SparsePoly& f);

struct PermVerdict {
  bool is_permutation = false;
  std::optional<std::pair<P1Point, P1Point>> witness;  // first collision in encoding order
};

PermVerdict is_perm_fq2(const FieldCtx& ctx, const SparsePoly& f, std::uint64_t q);
// Any set of points of the field, in the given order.
PermVerdict is_perm_on(const FieldCtx& ctx, const SparsePoly& f, const std::vector<Elem>& domain);
// Throws MapNotStable if a point leaves mu_{q+1}.
PermVerdict is_perm_mu(const RationalMap& g, std::uint64_t q);
// Throws MapNotStable if a point leaves P^1(F_q).
PermVerdict is_perm_p1fq(const RationalMap& h, std::uint64_t q);

struct OldReduction {
  bool gcd_ok = false;
  std::vector<Elem> mu;      // mu_{q+1} in generator order
  std::vector<Elem> values;  // z^r A(z)^{q-1}; 0 where A(z) = 0
  bool g0_permutes() const;
};
OldReduction reduce_lemma_old(std::uint64_t r, const Poly& A, std::uint64_t q);

// X^s A^{(q)}(1/X) / A(X), normalized.
RationalMap build_g_from_A(const Poly& A, std::int64_t s, std::uint64_t q);
// rho o g o sigma^{-1}; throws BadConjugators unless rho and sigma map mu_{q+1} onto P^1(F_q).
RationalMap build_h_from_g(const RationalMap& g, const DegreeOneMap& rho, const DegreeOneMap& sigma,
                           std::uint64_t q);
// True when every coefficient is fixed by z -> z^{p^d}.
bool rat_in_subfield(const RationalMap& g, unsigned d);

struct BinomialReport {
  bool criterion = false;
  bool oracle = false;
};
// X^r (X^{t(q-1)} - alpha) over F_{q^2}; criterion gcd(r,q-1)=1, r = t mod q+1, alpha not in mu.
BinomialReport binomial_criterion(const FieldCtx& ctx, std::uint64_t r, std::uint64_t t, Elem alpha,
                                  std::uint64_t q);

// With g = X^r A^{(q)}(1/X)/A of ramification multiset [s, t] over gamma and gcd(t, q+1) = 1:
// g permutes mu_{q+1} iff s = 0 mod q+1 and gamma is not in mu_{q+1}.
bool lpp_check(const Poly& A, std::int64_t r, unsigned s, unsigned t, const P1Point& gamma, std::uint64_t q);
// Same test for a map given directly; throws RamMismatch if the multiset over gamma is not [s, t].
bool lpp_check_map(const RationalMap& g, unsigned s, unsigned t, const P1Point& gamma, std::uint64_t q);

struct MultEquivWitness {
  Elem alpha = 1;
  Elem beta = 1;
  std::uint64_t n = 1;
};
// g = beta f(alpha X^n) as functions on the field, gcd(n, |F|-1) = 1; first witness in order of
// increasing n, then alpha, then beta.
std::optional<MultEquivWitness> mult_equiv(const FieldCtx& ctx, const SparsePoly& f, const SparsePoly& g);

struct Table3Entry {
  std::uint64_t q;
  std::string label;      // printable form with parameter names
  std::string parameter;  // e.g. "a^3+a=1"; empty when none
  Elem parameter_value;   // root used for this instance (0 when none)
  FieldPtr ctx;           // F_q
  RationalMap h;
  bool permutes;
};

// Every sporadic degree-4 permutation rational function, instantiated for every root of its
// parameter condition.
std::vector<Table3Entry> table3_entries();
// Throws TableEntryFails on the first entry that does not permute P^1(F_q).
std::vector<Table3Entry> table3_verify();

// Degree-3 maps from the low-degree classification: q = 2 mod 3 gives X^3 up to linear
// equivalence; q = 1 mod 3 gives rho o X^3 o sigma^{-1} with mu -> P^1(F_q) conjugators;
// q = 0 mod 3 gives X^3 - aX with a a nonsquare. All maps have coefficients in F_q; ctx must
// contain F_{q^2}.
std::vector<RationalMap> degree3_permutations(const FieldCtx& ctx, std::uint64_t q);

}  // namespace ffperm
