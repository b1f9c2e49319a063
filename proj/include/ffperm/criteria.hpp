#pragma once

// Closed-form coefficient conditions for permutation quadrinomials X^r A(X^{q-1}) with
// A = aX^{Q+1} + bX^Q + cX + d, and the geometry of g = B/A where
// B = d^q X^{Q+1} + c^q X^Q + b^q X + a^q.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffperm/field.hpp"
#include "ffperm/poly.hpp"

namespace ffperm {

struct QuadInput {
  FieldPtr ctx;  // ambient field; must contain F_{q^2}
  unsigned k = 1;
  unsigned ell = 1;
  std::uint64_t r = 0;
  Elem a = 0, b = 0, c = 0, d = 0;

  unsigned p() const { return ctx->p(); }
  std::uint64_t q() const;
  std::uint64_t Q() const;
};

// Validates that q and Q are powers of the characteristic, that ctx contains F_{q^2}, and that
// the coefficients lie in F_{q^2}.
QuadInput make_input(FieldPtr ctx, std::uint64_t q, std::uint64_t Q, std::uint64_t r, Elem a, Elem b,
                     Elem c, Elem d);

Poly quad_A(const QuadInput& in);
Poly quad_B(const QuadInput& in);
// g = B/A in lowest terms; the removed factor is gcd(A, B).
RationalMap quad_g(const QuadInput& in);

Elem compute_e(const QuadInput& in);

struct GeometryBundle {
  Elem e = 0;
  Poly A, B;
  Poly U, V, W;
  Elem delta_U = 0, delta_V = 0, delta_W = 0;
  std::vector<P1Point> Lambda;  // roots of W padded with infinity; size 2 when complete
  bool lambda_complete = false;
  Poly C;  // monic gcd(A, B)
  RationalMap g;
};

GeometryBundle compute_UVW(const QuadInput& in);

// beta^2 - 4 alpha gamma for alpha X^2 + beta X + gamma.
Elem discriminant2(const Poly& P);

bool cond_q_relation(const QuadInput& in);

struct ZetaEtaTheta {
  Elem zeta = 0;
  Elem eta = 0;
  Elem theta = 0;
};
// Requires q even, e != 0 and cond_q_relation.
ZetaEtaTheta zeta_eta_theta(const QuadInput& in);

// U | A by division, cross-checked against theta = 1. Requires {b,c,d} != {0}.
bool u_divides_A(const QuadInput& in);

// Tr_{F_q/F_{2^m}}((b^{q+1}+c^{q+1})/e) == lcm(k,l)/m mod 2, m = 2^{ord2(gcd(k,l))}.
bool cond_trace(const QuadInput& in);

// Per-tuple evaluation of the five conditions with everything that depends only on
// (ctx, q, Q, r) precomputed. Bit i of the result is condition i+1.
class MainTheoremEvaluator {
 public:
  MainTheoremEvaluator(FieldPtr ctx, std::uint64_t q, std::uint64_t Q, std::uint64_t r);

  std::uint8_t evaluate(Elem a, Elem b, Elem c, Elem d) const;
  static constexpr std::uint8_t kAll = 0x1F;

  const FieldCtx& ctx() const { return *ctx_; }

 private:
  Elem conj(Elem x) const { return conj_.empty() ? ctx_->frobenius(x, k_) : conj_[x]; }
  Elem qpow(Elem x) const { return qpow_.empty() ? ctx_->frobenius(x, ell_) : qpow_[x]; }
  Elem trace(Elem x) const;

  FieldPtr ctx_;
  unsigned k_, ell_, m_;
  Elem parity_;
  std::uint8_t fixed_bits_ = 0;  // cond1, cond2
  std::vector<Elem> conj_, qpow_, trace_;
};

struct CriterionReport {
  bool verdict = false;
  std::array<bool, 5> cond{};
  Elem e = 0;
  std::optional<ZetaEtaTheta> zet;  // present when q even, e != 0 and condition (4) holds
};

// Throws BadResidue when r is not Q+1 mod q+1.
CriterionReport check_main_theorem(const QuadInput& in);

// ---------------------------------------------------------------------------
// Geometry of g = B/A. Needs an ambient field containing F_{q^4}.

struct GeometryLabels {
  bool A1 = false;  // ramification multiset [1, Q] over some point
  bool A2 = false;  // g = rho o X^n o sigma with n in {Q-1, Q+1}
  bool A3 = false;  // g constant
  bool A4 = false;  // A has a root in mu_{q+1}
  int deg_g = 0;
  std::vector<P1Point> totally_ramified;  // branch points with a single preimage (A2 witnesses)
  std::optional<P1Point> a1_point;
  std::vector<std::string> names() const;
};

GeometryLabels classify_geometry(const QuadInput& in);

// e != 0, condition (4), and (U does not divide A or U has no roots in mu_{q+1}). q even.
bool b2_condition(const QuadInput& in);

struct CProperties {
  bool C1 = false, C2 = false, C3 = false, C4 = false;
  bool all() const { return C1 && C2 && C3 && C4; }
};

// Throws B2Violated unless q is even and b2_condition holds.
CProperties check_C_properties(const QuadInput& in);

// Re-express the input in a larger ambient field via the canonical embedding.
QuadInput lift_input(const QuadInput& in, FieldPtr bigger);

}  // namespace ffperm
