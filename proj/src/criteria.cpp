#include "ffperm/criteria.hpp"

#include <algorithm>
#include <set>

#include "ffperm/errors.hpp"
#include "ffperm/numtheory.hpp"

namespace ffperm {

namespace {

unsigned log_p(unsigned p, std::uint64_t q, const char* what)
{
  auto pp = prime_power(q);
  if (!pp || pp->first != p)
    throw Error(Errc::HypothesisViolated, std::string(what) + " must be a power of the characteristic");
  return pp->second;
}

struct Norms {
  Elem na, nb, nc, nd, e;
};

Norms norms(const QuadInput& in)
{
  const auto& F = *in.ctx;
  const auto k = in.k;
  Norms n{};
  n.na = F.mul(in.a, F.frobenius(in.a, k));
  n.nb = F.mul(in.b, F.frobenius(in.b, k));
  n.nc = F.mul(in.c, F.frobenius(in.c, k));
  n.nd = F.mul(in.d, F.frobenius(in.d, k));
  n.e = F.add(F.add(n.na, n.nb), F.add(n.nc, n.nd));
  return n;
}

// a b^q + c d^q and a c^q + b d^q.
std::pair<Elem, Elem> cross_terms(const QuadInput& in)
{
  const auto& F = *in.ctx;
  const auto k = in.k;
  const Elem t1 = F.add(F.mul(in.a, F.frobenius(in.b, k)), F.mul(in.c, F.frobenius(in.d, k)));
  const Elem t2 = F.add(F.mul(in.a, F.frobenius(in.c, k)), F.mul(in.b, F.frobenius(in.d, k)));
  return {t1, t2};
}

void require_q4(const QuadInput& in)
{
  if (in.ctx->degree() % (4 * in.k) != 0)
    throw Error(Errc::BadTower, "geometry needs an ambient field containing F_{q^4}");
}

unsigned trace_target(unsigned k, unsigned ell)
{
  return 1u << ord2(gcd_u64(k, ell));
}

Elem trace_parity(unsigned k, unsigned ell)
{
  const std::uint64_t m = trace_target(k, ell);
  return static_cast<Elem>((lcm_u64(k, ell) / m) & 1u);
}

}  // namespace

std::uint64_t QuadInput::q() const
{
  return ipow(ctx->p(), k);
}

std::uint64_t QuadInput::Q() const
{
  return ipow(ctx->p(), ell);
}

QuadInput make_input(FieldPtr ctx, std::uint64_t q, std::uint64_t Q, std::uint64_t r, Elem a, Elem b,
                     Elem c, Elem d)
{
  QuadInput in;
  in.k = log_p(ctx->p(), q, "q");
  in.ell = log_p(ctx->p(), Q, "Q");
  if (ctx->degree() % (2 * in.k) != 0)
    throw Error(Errc::BadTower, "ambient field does not contain F_{q^2}");
  for (Elem x : {a, b, c, d})
    if (x >= ctx->order() || !ctx->in_subfield(x, 2 * in.k))
      throw Error(Errc::NotInSubfield, "coefficient " + std::to_string(x) + " is not in F_{q^2}");
  in.ctx = std::move(ctx);
  in.r = r;
  in.a = a;
  in.b = b;
  in.c = c;
  in.d = d;
  return in;
}

Poly quad_A(const QuadInput& in)
{
  const std::size_t Q = in.Q();
  return Poly::from_terms(*in.ctx, {{Q + 1, in.a}, {Q, in.b}, {1, in.c}, {0, in.d}});
}

Poly quad_B(const QuadInput& in)
{
  const auto& F = *in.ctx;
  const std::size_t Q = in.Q();
  const auto k = in.k;
  return Poly::from_terms(F, {{Q + 1, F.frobenius(in.d, k)},
                              {Q, F.frobenius(in.c, k)},
                              {1, F.frobenius(in.b, k)},
                              {0, F.frobenius(in.a, k)}});
}

RationalMap quad_g(const QuadInput& in)
{
  Poly A = quad_A(in);
  if (A.is_zero())
    throw Error(Errc::ZeroPolynomial, "A is zero");
  return rat_normalize(quad_B(in), A);
}

Elem compute_e(const QuadInput& in)
{
  return norms(in).e;
}

Elem discriminant2(const Poly& P)
{
  if (P.degree() > 2)
    throw Error(Errc::DegreeTooHigh, "discriminant of a polynomial of degree > 2");
  const auto& F = P.ctx();
  const Elem b2 = F.mul(P.coeff(1), P.coeff(1));
  const Elem four_ac = F.mul(F.from_int(4), F.mul(P.coeff(2), P.coeff(0)));
  return F.sub(b2, four_ac);
}

GeometryBundle compute_UVW(const QuadInput& in)
{
  const auto& F = *in.ctx;
  const auto k = in.k;
  const unsigned N = F.degree();
  const std::uint64_t root_exp = (N - in.ell % N) % N;  // Q-th root as a Frobenius power
  auto fq = [&](Elem x) { return F.frobenius(x, k); };
  auto qroot = [&](Elem x) { return F.frobenius(x, root_exp); };
  const Norms n = norms(in);
  const Elem a = in.a, b = in.b, c = in.c, d = in.d;

  GeometryBundle G;
  G.e = n.e;
  G.A = quad_A(in);
  G.B = quad_B(in);

  const Elem w2 = F.sub(F.mul(b, c), F.mul(a, d));
  const Elem w1 = F.add(F.sub(F.sub(n.na, n.nb), n.nc), n.nd);
  G.W = Poly(F, {fq(w2), w1, w2});

  const Elem u2 = F.sub(F.mul(c, fq(d)), F.mul(a, fq(b)));
  const Elem u1 = F.add(F.sub(F.neg(n.na), n.nb), F.add(n.nc, n.nd));
  const Elem u0 = F.sub(F.mul(fq(c), d), F.mul(fq(a), b));
  G.U = Poly(F, {u0, u1, u2});

  const Elem v2 = F.sub(F.mul(b, fq(d)), F.mul(a, fq(c)));
  const Elem v1 = F.add(F.sub(n.nb, n.na), F.sub(n.nd, n.nc));
  const Elem v0 = F.sub(F.mul(fq(b), d), F.mul(fq(a), c));
  G.V = Poly(F, {qroot(v0), qroot(v1), qroot(v2)});

  G.delta_U = discriminant2(G.U);
  G.delta_V = discriminant2(G.V);
  G.delta_W = discriminant2(G.W);

  if (!G.W.is_zero()) {
    int finite = 0;
    for (Elem x : field_roots(G.W)) {
      const unsigned m = root_multiplicity(G.W, x);
      for (unsigned i = 0; i < m; ++i)
        G.Lambda.push_back(P1Point::finite(x));
      finite += static_cast<int>(m);
    }
    G.lambda_complete = finite == G.W.degree();
    for (int i = G.W.degree(); i < 2; ++i)
      G.Lambda.push_back(P1Point::infinity());
  }

  if (!G.A.is_zero()) {
    G.g = rat_normalize(G.B, G.A);
    G.C = G.g.removed;
  }
  return G;
}

bool cond_q_relation(const QuadInput& in)
{
  const auto& F = *in.ctx;
  const Elem e = compute_e(in);
  auto [t1, t2] = cross_terms(in);
  const Elem lhs = F.frobenius(t1, in.ell);
  const Elem rhs = F.mul(F.pow(e, static_cast<std::int64_t>(in.Q() - 1)), t2);
  return lhs == rhs;
}

ZetaEtaTheta zeta_eta_theta(const QuadInput& in)
{
  const auto& F = *in.ctx;
  if (F.p() != 2)
    throw Error(Errc::HypothesisViolated, "q must be even");
  const Norms n = norms(in);
  if (n.e == 0)
    throw Error(Errc::ENonzeroViolated, "e = 0");
  if (!cond_q_relation(in))
    throw Error(Errc::HypothesisViolated, "(ab^q+cd^q)^Q != e^{Q-1}(ac^q+bd^q)");
  auto [t1, t2] = cross_terms(in);
  (void)t2;
  ZetaEtaTheta z;
  z.zeta = F.div(F.mul(t1, F.frobenius(t1, in.k)), F.mul(n.e, n.e));
  z.eta = F.div(F.add(n.nb, n.nc), n.e);
  Elem s = 0;
  for (unsigned i = 0; i < in.ell; ++i)
    s = F.add(s, F.frobenius(z.zeta, i));
  z.theta = F.add(z.eta, s);
  return z;
}

bool u_divides_A(const QuadInput& in)
{
  if (in.b == 0 && in.c == 0 && in.d == 0)
    throw Error(Errc::HypothesisViolated, "{b,c,d} = {0}");
  const ZetaEtaTheta z = zeta_eta_theta(in);
  const GeometryBundle G = compute_UVW(in);
  const bool divides = poly_divides(G.U, G.A);
  if (divides != (z.theta == 1))
    throw Error(Errc::Internal, "U | A disagrees with theta");
  return divides;
}

bool cond_trace(const QuadInput& in)
{
  const auto& F = *in.ctx;
  if (F.p() != 2)
    throw Error(Errc::HypothesisViolated, "trace condition needs p = 2");
  const Norms n = norms(in);
  if (n.e == 0)
    throw Error(Errc::ENonzeroViolated, "e = 0");
  const Elem eta = F.div(F.add(n.nb, n.nc), n.e);
  return F.rel_trace(eta, in.k, trace_target(in.k, in.ell)) == trace_parity(in.k, in.ell);
}

// ---------------------------------------------------------------------------

MainTheoremEvaluator::MainTheoremEvaluator(FieldPtr ctx, std::uint64_t q, std::uint64_t Q, std::uint64_t r)
    : ctx_(std::move(ctx))
{
  const auto& F = *ctx_;
  k_ = log_p(F.p(), q, "q");
  ell_ = log_p(F.p(), Q, "Q");
  if (F.degree() % (2 * k_) != 0)
    throw Error(Errc::BadTower, "ambient field does not contain F_{q^2}");
  m_ = trace_target(k_, ell_);
  parity_ = trace_parity(k_, ell_);
  if (gcd_u64(r, q - 1) == 1)
    fixed_bits_ |= 1;
  if (F.p() == 2)
    fixed_bits_ |= 2;
  if (F.order() <= (1u << 16)) {
    conj_.resize(F.order());
    qpow_.resize(F.order());
    for (Elem x = 0; x < F.order(); ++x) {
      conj_[x] = F.frobenius(x, k_);
      qpow_[x] = F.frobenius(x, ell_);
    }
    if (F.p() == 2) {
      trace_.assign(F.order(), 0);
      for (Elem x : F.subfield(k_))
        trace_[x] = F.rel_trace(x, k_, m_);
    }
  }
}

Elem MainTheoremEvaluator::trace(Elem x) const
{
  return trace_.empty() ? ctx_->rel_trace(x, k_, m_) : trace_[x];
}

std::uint8_t MainTheoremEvaluator::evaluate(Elem a, Elem b, Elem c, Elem d) const
{
  const auto& F = *ctx_;
  const Elem bq = conj(b), cq = conj(c), dq = conj(d);
  const Elem na = F.mul(a, conj(a));
  const Elem nb = F.mul(b, bq);
  const Elem nc = F.mul(c, cq);
  const Elem nd = F.mul(d, dq);
  const Elem e = F.add(F.add(na, nb), F.add(nc, nd));
  const Elem t1 = F.add(F.mul(a, bq), F.mul(c, dq));
  const Elem t2 = F.add(F.mul(a, cq), F.mul(b, dq));
  std::uint8_t bits = fixed_bits_;
  const Elem lhs = qpow(t1);
  if (e != 0) {
    bits |= 4;
    // e^{Q-1} = e^Q / e
    if (lhs == F.mul(F.div(qpow(e), e), t2))
      bits |= 8;
    if ((fixed_bits_ & 2) && trace(F.div(F.add(nb, nc), e)) == parity_)
      bits |= 16;
  } else if (lhs == 0) {
    bits |= 8;
  }
  return bits;
}

CriterionReport check_main_theorem(const QuadInput& in)
{
  const std::uint64_t q = in.q(), Q = in.Q();
  if (in.r % (q + 1) != (Q + 1) % (q + 1))
    throw Error(Errc::BadResidue, "r is not congruent to Q+1 mod q+1");
  CriterionReport rep;
  rep.cond[0] = gcd_u64(in.r, q - 1) == 1;
  rep.cond[1] = in.p() == 2;
  rep.e = compute_e(in);
  rep.cond[2] = rep.e != 0;
  rep.cond[3] = cond_q_relation(in);
  rep.cond[4] = rep.cond[1] && rep.cond[2] && cond_trace(in);
  rep.verdict = std::all_of(rep.cond.begin(), rep.cond.end(), [](bool x) { return x; });
  if (rep.cond[1] && rep.cond[2] && rep.cond[3])
    rep.zet = zeta_eta_theta(in);
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<std::string> GeometryLabels::names() const
{
  std::vector<std::string> out;
  if (A1)
    out.push_back("A1");
  if (A2)
    out.push_back("A2");
  if (A3)
    out.push_back("A3");
  if (A4)
    out.push_back("A4");
  return out;
}

GeometryLabels classify_geometry(const QuadInput& in)
{
  require_q4(in);
  const std::uint64_t q = in.q();
  const int Q = static_cast<int>(in.Q());
  GeometryLabels L;
  const GeometryBundle G = compute_UVW(in);
  if (G.A.is_zero())
    throw Error(Errc::ZeroPolynomial, "A is zero");
  L.A4 = !roots_in_mu(G.A, q).empty();
  const RationalMap& g = G.g;
  L.A3 = g.is_constant();
  L.deg_g = L.A3 ? 0 : g.degree();
  if (L.A3)
    return L;

  std::set<P1Point> candidates;
  const Poly Wr = wronskian(g);
  if (!Wr.is_zero())
    for (Elem x : field_roots(Wr))
      candidates.insert(rat_eval(g, P1Point::finite(x)));
  candidates.insert(rat_eval(g, P1Point::infinity()));
  for (const auto& l : G.Lambda)
    candidates.insert(l);
  for (const Poly* P : {&G.U, &G.V})
    if (P->degree() >= 1)
      for (Elem x : field_roots(*P))
        candidates.insert(rat_eval(g, P1Point::finite(x)));

  const int n = L.deg_g;
  const bool cyclic_degree = n == Q + 1 || n == Q - 1;
  for (const auto& beta : candidates) {
    const RamReport rep = ramification_multiset(g, beta, SplitPolicy::Report);
    if (n == Q + 1 && rep.multiset == std::vector<unsigned>{1, static_cast<unsigned>(Q)}) {
      L.A1 = true;
      if (!L.a1_point)
        L.a1_point = beta;
    }
    if (cyclic_degree && rep.multiset == std::vector<unsigned>{static_cast<unsigned>(n)})
      L.totally_ramified.push_back(beta);
  }
  L.A2 = (n == 1 && Q == 2) || (cyclic_degree && L.totally_ramified.size() >= 2);
  return L;
}

bool b2_condition(const QuadInput& in)
{
  if (in.p() != 2)
    throw Error(Errc::HypothesisViolated, "q must be even");
  if (compute_e(in) == 0 || !cond_q_relation(in))
    return false;
  const GeometryBundle G = compute_UVW(in);
  return !poly_divides(G.U, G.A) || roots_in_mu(G.U, in.q()).empty();
}

CProperties check_C_properties(const QuadInput& in)
{
  require_q4(in);
  if (in.p() != 2 || !b2_condition(in))
    throw Error(Errc::B2Violated, "condition (B2) does not hold");
  const GeometryBundle G = compute_UVW(in);
  const RationalMap& g = G.g;
  CProperties cp;
  if (g.is_constant())
    return cp;
  auto single = [&](const P1Point& beta) {
    return ramification_multiset(g, beta, SplitPolicy::Report).multiset.size() == 1;
  };
  cp.C1 = G.lambda_complete && G.Lambda.size() == 2 &&
          std::all_of(G.Lambda.begin(), G.Lambda.end(), single);
  cp.C2 = true;
  if (G.U.degree() >= 1) {
    auto roots = field_roots(G.U);
    // U is separable here (its X coefficient is e != 0), so every root must be realized.
    if (static_cast<int>(roots.size()) != G.U.degree())
      cp.C2 = false;
    for (Elem u : roots) {
      const P1Point beta = rat_eval(g, P1Point::finite(u));
      const bool in_lambda = std::find(G.Lambda.begin(), G.Lambda.end(), beta) != G.Lambda.end();
      if (!in_lambda || !single(beta))
        cp.C2 = false;
    }
  }
  cp.C3 = poly_divides(G.C, G.U);
  const bool bcd_nonzero = !(in.b == 0 && in.c == 0 && in.d == 0);
  cp.C4 = (g.degree() == static_cast<int>(in.Q()) - 1) == (poly_divides(G.U, G.A) && bcd_nonzero);
  return cp;
}

QuadInput lift_input(const QuadInput& in, FieldPtr bigger)
{
  const auto img = embedding(*in.ctx, *bigger);
  QuadInput out = in;
  out.ctx = std::move(bigger);
  out.a = img[in.a];
  out.b = img[in.b];
  out.c = img[in.c];
  out.d = img[in.d];
  return out;
}

}  // namespace ffperm
