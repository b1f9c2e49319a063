#pragma once

// Condition-versus-brute-force checkers for the characteristic-2 corollaries, the butterfly map
// on F_q x F_q, and the extra permutation family with lambda in mu_{q+1} \ mu_{Q+1}.
// Throughout q = 2^k and Q = 2^l, and m = 2^{ord2(gcd(k, l))}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffperm/field.hpp"
#include "ffperm/oracle.hpp"

namespace ffperm {

enum class CorId { C91, C92, C93, C94, C95, C95b, C96, C97, Remark96, Gen97 };

const char* cor_id_name(CorId id);
std::optional<CorId> parse_cor_id(const std::string& s);

// Coefficients are encodings in F_{q^2} except for the butterfly, whose alpha, beta are
// encodings in F_q. Fields an id does not use are ignored. By id:
//   C91, Gen97: a, b, c, d     C92: a, b, d     C93: a, b, c     C94: b, c
//   C96: a, d (in F_q)         C97: a, b        Remark96: a holds lambda
struct CorParams {
  CorId id = CorId::C91;
  std::uint64_t q = 2, Q = 2;
  Elem a = 0, b = 0, c = 0, d = 0;
  Elem alpha = 1, beta = 1;
  // Adds shift*(q+1) to the exponents u, v (shift*(q^2-1) for C97 and Gen97).
  unsigned exponent_shift = 0;
};

struct CorVerdict {
  bool condition = false;
  bool oracle = false;
  bool agree() const { return condition == oracle; }
};

// Throws HypothesisViolated on a parameter point outside the corollary's hypotheses and
// NoAdmissibleExponent if a congruence for u or v has no solution.
CorVerdict cor_check(const CorParams& p);

// Whether p satisfies the hypotheses, without evaluating anything.
bool cor_admissible(const CorParams& p);

// The polynomial whose permutation behaviour the corollary describes (not for the butterfly ids).
SparsePoly cor_polynomial(const CorParams& p);

// Smallest positive solutions of the exponent congruences mod q+1 for C92, C93/C94 and C96.
struct CorExponents {
  std::uint64_t u = 0, v = 0;
};
CorExponents cor_exponents(CorId id, std::uint64_t q, std::uint64_t Q);

// ---------------------------------------------------------------------------
// Butterfly map psi(x, y) = (R(x, y), R(y, x)), R = (X + alpha Y)^{Q+1} + (beta Y)^{Q+1}.

struct ButterflyMap {
  std::uint64_t q = 2, Q = 2;
  Elem alpha = 1, beta = 1;  // in F_q^*
};

std::pair<Elem, Elem> butterfly_eval(const FieldCtx& Fq, const ButterflyMap& m, Elem x, Elem y);
bool butterfly_is_perm(const ButterflyMap& m);
// (alpha^2 + alpha beta + beta^2 = 1, oracle)
CorVerdict cor95_check(const ButterflyMap& m);
// (beta != alpha + 1 and u^Q = e^{Q-1} v, oracle)
CorVerdict cor95b_check(const ButterflyMap& m);

struct ButterflyReport {
  bool cond95 = false, cond95b = false, oracle = false;
  // Same quantities with l replaced by k + l.
  bool cond95b_reduced = false, oracle_reduced = false;
  bool consistent() const
  {
    return cond95 == oracle && cond95b == oracle && cond95b_reduced == oracle_reduced && oracle == oracle_reduced;
  }
};
ButterflyReport butterfly_report(const ButterflyMap& m);

// ---------------------------------------------------------------------------

struct Remark96Poly {
  Elem lambda = 0;
  Elem a = 0, d = 0;  // coefficients of X^{u(q-1)+1} and X^{v(q-1)+1}, in F_q
  SparsePoly f;
  bool permutes = false;
  bool trace_nonzero = false;  // (a + d) * Tr_{F_q/F_2}(d / e) != 0, e = 1 + a^2 + d^2
};

// Needs ord2(k) = ord2(l) and lambda in mu_{q+1} \ mu_{Q+1}, else HypothesisViolated.
Remark96Poly remark96_family(std::uint64_t q, std::uint64_t Q, Elem lambda);
// All admissible lambda in F_{q^2}; throws NoAdmissibleLambda when there are none.
std::vector<Elem> remark96_lambdas(std::uint64_t q, std::uint64_t Q);

CorVerdict generalized97_check(std::uint64_t q, std::uint64_t Q, Elem a, Elem b, Elem c, Elem d);

// ---------------------------------------------------------------------------

struct CorSweepReport {
  std::uint64_t checked = 0;
  std::uint64_t agreements = 0;
  std::vector<CorParams> mismatches;
};

// Every admissible parameter point. The butterfly ids also require the reduced instance to agree.
// Throws BudgetExceeded when the domain exceeds max_points.
CorSweepReport cor_sweep_exhaustive(CorId id, std::uint64_t q, std::uint64_t Q, unsigned exponent_shift = 0,
                                    std::uint64_t max_points = 1ull << 24);
// `samples` admissible points drawn with CounterRng(seed); inadmissible draws are redrawn.
CorSweepReport cor_sweep_random(CorId id, std::uint64_t q, std::uint64_t Q, std::uint64_t samples,
                                std::uint64_t seed, unsigned exponent_shift = 0);

}  // namespace ffperm
