#include "ffperm/conjectures.hpp"

#include <algorithm>
#include <functional>

#include "ffperm/criteria.hpp"
#include "ffperm/errors.hpp"
#include "ffperm/numtheory.hpp"
#include "ffperm/rng.hpp"

namespace ffperm {

namespace {

struct Tower {
  unsigned k = 0, ell = 0, m = 1;
  std::uint64_t q = 0, Q = 0;
  FieldPtr F;  // F_{q^2}
};

[[noreturn]] void violated(const char* what)
{
  throw Error(Errc::HypothesisViolated, what);
}

Tower tower(std::uint64_t q, std::uint64_t Q, bool need_field = true)
{
  auto pq = prime_power(q), pQ = prime_power(Q);
  if (!pq || !pQ || pq->first != 2 || pQ->first != 2)
    violated("q and Q must be powers of 2");
  Tower t;
  t.k = pq->second;
  t.ell = pQ->second;
  t.m = 1u << ord2(gcd_u64(t.k, t.ell));
  t.q = q;
  t.Q = Q;
  if (need_field)
    t.F = field(2, 2 * t.k);
  return t;
}

bool in_fq2(const Tower& t, Elem x)
{
  return x < t.F->order();
}

bool in_fq(const Tower& t, Elem x)
{
  return in_fq2(t, x) && t.F->in_subfield(x, t.k);
}

Elem fq(const Tower& t, Elem x)
{
  return t.F->frobenius(x, t.k);
}

Elem fQ(const FieldCtx& F, unsigned ell, Elem x)
{
  return F.frobenius(x, ell);
}

Elem norm(const Tower& t, Elem x)  // x^{q+1}
{
  return t.F->mul(fq(t, x), x);
}

// e^{Q-1}, with 0^{Q-1} = 0 since Q >= 2.
Elem pow_Qm1(const FieldCtx& F, unsigned ell, Elem e)
{
  return e == 0 ? 0 : F.div(fQ(F, ell, e), e);
}

Elem trace_to_m(const Tower& t, Elem z)
{
  return t.F->rel_trace(z, t.k, t.m);
}

std::uint64_t solve(std::uint64_t coef, std::uint64_t target, std::uint64_t mod)
{
  auto s = smallest_congruence_solution(static_cast<std::int64_t>(coef % mod), static_cast<std::int64_t>(target % mod),
                                        mod);
  if (!s)
    throw Error(Errc::NoAdmissibleExponent, "exponent congruence has no solution");
  return *s;
}

// sum_{i<n} Q^i reduced into [1, mod]
std::uint64_t geometric_mod(std::uint64_t Q, unsigned n, std::uint64_t mod)
{
  std::uint64_t s = 0, p = 1 % mod;
  for (unsigned i = 0; i < n; ++i) {
    s = (s + p) % mod;
    p = mulmod_u64(p, Q % mod, mod);
  }
  return s == 0 ? mod : s;
}

void require_gates(CorId id, const Tower& t)
{
  switch (id) {
    case CorId::C91:
      if (t.k % 2 == 0 || t.ell % 2 == 0)
        violated("k and l must be odd");
      break;
    case CorId::C92:
    case CorId::C96:
      if (gcd_u64(t.Q - 1, t.q + 1) != 1)
        violated("need gcd(Q-1, q+1) = 1");
      break;
    case CorId::C93:
    case CorId::C94:
      if (gcd_u64(t.Q + 1, t.q + 1) != 1)
        violated("need gcd(Q+1, q+1) = 1");
      break;
    case CorId::C95:
    case CorId::C95b:
      if (t.k % 2 == 0 || gcd_u64(t.k, t.ell) != 1)
        violated("need k odd and gcd(k, l) = 1");
      break;
    case CorId::C97:
    case CorId::Gen97:
      if (gcd_u64(2 * t.k, t.ell) != 1)
        violated("need gcd(2k, l) = 1");
      break;
    case CorId::Remark96:
      if (ord2(t.k) != ord2(t.ell))
        violated("need ord2(k) = ord2(l)");
      break;
  }
}

void require_hypotheses(const CorParams& p, const Tower& t)
{
  require_gates(p.id, t);
  auto need = [&](bool ok, const char* what) {
    if (!ok)
      violated(what);
  };
  switch (p.id) {
    case CorId::C91:
    case CorId::Gen97:
      need(in_fq2(t, p.a) && in_fq2(t, p.b) && in_fq2(t, p.c) && in_fq2(t, p.d), "coefficients must lie in F_{q^2}");
      break;
    case CorId::C92:
      need(in_fq2(t, p.a) && in_fq2(t, p.b) && in_fq2(t, p.d), "coefficients must lie in F_{q^2}");
      break;
    case CorId::C93:
      need(in_fq2(t, p.a) && in_fq2(t, p.b) && in_fq2(t, p.c), "coefficients must lie in F_{q^2}");
      break;
    case CorId::C94:
      need(in_fq2(t, p.b) && in_fq2(t, p.c), "coefficients must lie in F_{q^2}");
      break;
    case CorId::C96:
      need(in_fq(t, p.a) && in_fq(t, p.d), "a and d must lie in F_q");
      break;
    case CorId::C97:
      need(in_fq2(t, p.a) && p.a != 0, "a must lie in F_{q^2}^*");
      need(in_fq(t, p.b) && p.b != 0, "b must lie in F_q^*");
      need(t.F->add(p.a, p.b) != 1, "need a + b != 1");
      break;
    case CorId::C95:
    case CorId::C95b:
      need(p.alpha != 0 && p.beta != 0 && p.alpha < t.q && p.beta < t.q, "alpha and beta must lie in F_q^*");
      break;
    case CorId::Remark96:
      break;
  }
}

SparsePoly x_times_A(const FieldCtx& F, std::uint64_t q, std::vector<std::pair<std::uint64_t, Elem>> A_terms)
{
  for (auto& [e, c] : A_terms)
    e = e * (q - 1) + 1;
  return make_sparse(F, std::move(A_terms));
}

bool cond91(const CorParams& p, const Tower& t)
{
  const auto& F = *t.F;
  const Elem e = F.add(F.add(norm(t, p.a), norm(t, p.b)), F.add(norm(t, p.c), norm(t, p.d)));
  if (e == 0)
    return false;
  const Elem l = fQ(F, t.ell, F.add(F.mul(fq(t, p.a), p.b), F.mul(fq(t, p.c), p.d)));
  const Elem r = F.mul(pow_Qm1(F, t.ell, e), F.add(F.mul(fq(t, p.a), p.c), F.mul(fq(t, p.b), p.d)));
  if (l != r)
    return false;
  return F.rel_trace(F.div(F.add(norm(t, p.b), norm(t, p.c)), e), t.k, 1) == 1;
}

bool cond92(const CorParams& p, const Tower& t)
{
  const auto& F = *t.F;
  const Elem e = F.add(F.add(1, norm(t, p.a)), F.add(norm(t, p.b), norm(t, p.d)));
  if (e == 0)
    return false;
  const Elem l = fQ(F, t.ell, F.add(F.mul(p.a, fq(t, p.b)), fq(t, p.d)));
  const Elem r = F.mul(pow_Qm1(F, t.ell, e), F.add(p.a, F.mul(p.b, fq(t, p.d))));
  if (l != r)
    return false;
  return trace_to_m(t, F.div(F.add(norm(t, p.a), norm(t, p.d)), e)) == 0;
}

bool cond93(const CorParams& p, const Tower& t)
{
  const auto& F = *t.F;
  const Elem e = F.add(F.add(1, norm(t, p.a)), F.add(norm(t, p.b), norm(t, p.c)));
  if (e == 0)
    return false;
  const Elem l = fQ(F, t.ell, F.add(F.mul(fq(t, p.a), p.b), fq(t, p.c)));
  const Elem r = F.mul(pow_Qm1(F, t.ell, e), F.add(F.mul(fq(t, p.a), p.c), fq(t, p.b)));
  if (l != r)
    return false;
  return trace_to_m(t, F.div(F.add(norm(t, p.b), norm(t, p.c)), e)) == 0;
}

bool cond94(const CorParams& p, const Tower& t)
{
  const auto& F = *t.F;
  const Elem e = F.add(1, F.add(norm(t, p.b), norm(t, p.c)));
  if (e == 0)
    return false;
  if (fQ(F, t.ell, p.c) != F.mul(pow_Qm1(F, t.ell, e), p.b))
    return false;
  return trace_to_m(t, F.inv(e)) == (t.k / t.m) % 2;
}

bool cond96(const CorParams& p, const Tower& t)
{
  const auto& F = *t.F;
  const Elem a2 = F.mul(p.a, p.a), d2 = F.mul(p.d, p.d);
  const Elem e = F.add(1, F.add(a2, d2));
  if (e == 0)
    return false;
  if (fQ(F, t.ell, p.d) != F.mul(pow_Qm1(F, t.ell, e), p.a))
    return false;
  return trace_to_m(t, F.div(F.add(a2, d2), e)) == 0;
}

bool cond97(const CorParams& p, const Tower& t)
{
  const auto& F = *t.F;
  for (Elem lam : F.subfield(t.k)) {
    if (F.pow(lam, static_cast<std::int64_t>(t.Q - 1)) != p.b)
      continue;
    Elem s = 0;
    for (unsigned i = 1; i <= t.ell; ++i)
      s = F.add(s, F.pow(lam, static_cast<std::int64_t>(t.Q - (std::uint64_t(1) << i))));
    const Elem lamQ = fQ(F, t.ell, lam);
    for (Elem eps : {Elem(0), Elem(1)}) {
      if (F.add(F.mul(eps, lamQ), s) != p.a)
        continue;
      // a + b + 1 != 0 by hypothesis, and a lies in F_q here
      if (F.rel_trace(F.div(p.a, F.add(F.add(p.a, p.b), 1)), t.k, 1) == 0)
        return true;
    }
  }
  return false;
}

}  // namespace

const char* cor_id_name(CorId id)
{
  switch (id) {
    case CorId::C91: return "9.1";
    case CorId::C92: return "9.2";
    case CorId::C93: return "9.3";
    case CorId::C94: return "9.4";
    case CorId::C95: return "9.5";
    case CorId::C95b: return "9.5b";
    case CorId::C96: return "9.6";
    case CorId::C97: return "9.7";
    case CorId::Remark96: return "remark96";
    case CorId::Gen97: return "generalized97";
  }
  return "?";
}

std::optional<CorId> parse_cor_id(const std::string& s)
{
  for (CorId id : {CorId::C91, CorId::C92, CorId::C93, CorId::C94, CorId::C95, CorId::C95b, CorId::C96, CorId::C97,
                   CorId::Remark96, CorId::Gen97})
    if (s == cor_id_name(id))
      return id;
  return std::nullopt;
}

CorExponents cor_exponents(CorId id, std::uint64_t q, std::uint64_t Q)
{
  const std::uint64_t m = q + 1;
  switch (id) {
    case CorId::C92:
      return {solve(Q - 1, q, m), solve(Q - 1, Q, m)};
    case CorId::C93:
    case CorId::C94:
      return {solve(Q + 1, 1, m), solve(Q + 1, Q, m)};
    case CorId::C96:
    case CorId::Remark96:
      return {solve(Q - 1, Q, m), solve(Q - 1, q, m)};
    default:
      throw Error(Errc::HypothesisViolated, "corollary has no u, v congruences");
  }
}

SparsePoly cor_polynomial(const CorParams& p)
{
  const Tower t = tower(p.q, p.Q);
  const auto& F = *t.F;
  const std::uint64_t q = p.q, n1 = F.order() - 1;
  switch (p.id) {
    case CorId::C91: {
      const std::uint64_t r = p.Q + 1;
      return make_sparse(F, {{r + (p.Q + 1) * (q - 1), p.a}, {r + p.Q * (q - 1), p.b}, {r + (q - 1), p.c}, {r, p.d}});
    }
    case CorId::C92:
    case CorId::C93:
    case CorId::C94:
    case CorId::C96: {
      auto [u, v] = cor_exponents(p.id, q, p.Q);
      u += std::uint64_t(p.exponent_shift) * (q + 1);
      v += std::uint64_t(p.exponent_shift) * (q + 1);
      if (p.id == CorId::C92)
        return x_times_A(F, q, {{0, 1}, {1, p.b}, {v, p.a}, {u, p.d}});
      if (p.id == CorId::C93)
        return x_times_A(F, q, {{0, 1}, {1, p.a}, {v, p.b}, {u, p.c}});
      if (p.id == CorId::C94)
        return x_times_A(F, q, {{0, 1}, {v, p.b}, {u, p.c}});
      return x_times_A(F, q, {{0, 1}, {u, p.a}, {v, p.d}});
    }
    case CorId::C97:
    case CorId::Gen97: {
      const std::uint64_t shift = std::uint64_t(p.exponent_shift) * n1;
      const std::uint64_t u = geometric_mod(p.Q, t.k + 1, n1) + shift;
      if (p.id == CorId::C97)
        return make_sparse(F, {{1, 1}, {q, p.b}, {u, p.a}});
      const std::uint64_t v = (1 + mulmod_u64(q, geometric_mod(p.Q, t.k, n1), n1)) % n1;
      return make_sparse(F, {{u, p.a}, {q, p.b}, {1, p.c}, {(v == 0 ? n1 : v) + shift, p.d}});
    }
    default:
      throw Error(Errc::HypothesisViolated, "no single polynomial for this corollary");
  }
}

bool cor_admissible(const CorParams& p)
{
  try {
    const Tower t = tower(p.q, p.Q);
    require_hypotheses(p, t);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::HypothesisViolated)
      return false;
    throw;
  }
}

CorVerdict cor_check(const CorParams& p)
{
  if (p.id == CorId::C95 || p.id == CorId::C95b) {
    const ButterflyMap m{p.q, p.Q, p.alpha, p.beta};
    return p.id == CorId::C95 ? cor95_check(m) : cor95b_check(m);
  }
  if (p.id == CorId::Remark96) {
    const auto r = remark96_family(p.q, p.Q, p.a);
    return {true, r.permutes && r.trace_nonzero};
  }
  if (p.id == CorId::Gen97)
    return generalized97_check(p.q, p.Q, p.a, p.b, p.c, p.d);

  const Tower t = tower(p.q, p.Q);
  require_hypotheses(p, t);
  CorVerdict v;
  switch (p.id) {
    case CorId::C91: v.condition = cond91(p, t); break;
    case CorId::C92: v.condition = cond92(p, t); break;
    case CorId::C93: v.condition = cond93(p, t); break;
    case CorId::C94: v.condition = cond94(p, t); break;
    case CorId::C96: v.condition = cond96(p, t); break;
    case CorId::C97: v.condition = cond97(p, t); break;
    default: break;
  }
  v.oracle = is_perm_fq2(*t.F, cor_polynomial(p), p.q).is_permutation;
  return v;
}

// ---------------------------------------------------------------------------

namespace {

Tower butterfly_tower(const ButterflyMap& m)
{
  Tower t = tower(m.q, m.Q, false);
  require_gates(CorId::C95, t);
  t.F = field(2, t.k);
  if (m.alpha == 0 || m.beta == 0 || m.alpha >= m.q || m.beta >= m.q)
    violated("alpha and beta must lie in F_q^*");
  return t;
}

bool cond95b_value(const FieldCtx& F, unsigned ell, Elem al, Elem be)
{
  auto pQ1 = [&](Elem x) { return F.mul(fQ(F, ell, x), x); };  // x^{Q+1}
  const Elem a1 = F.add(al, 1);
  const Elem A = F.mul(pQ1(a1), pQ1(a1));  // (alpha+1)^{2Q+2}
  const Elem Bt = F.mul(pQ1(be), pQ1(be));  // beta^{2Q+2}
  const Elem aQ = fQ(F, ell, al), bQ1 = pQ1(be);
  const Elem e = F.add(A, Bt);
  const Elem u = F.add(F.add(A, F.mul(F.mul(aQ, aQ), al)), F.add(F.add(al, F.mul(aQ, bQ1)), Bt));
  const Elem v = F.add(F.add(A, F.mul(aQ, F.mul(al, al))), F.add(F.add(aQ, F.mul(al, bQ1)), Bt));
  if (be == a1)
    return false;
  return fQ(F, ell, u) == F.mul(pow_Qm1(F, ell, e), v);
}

bool butterfly_perm_on(const FieldCtx& F, const ButterflyMap& m, unsigned ell)
{
  const std::uint64_t q = m.q;
  std::vector<bool> seen(q * q, false);
  auto R = [&](Elem x, Elem y) {
    const Elem s = F.add(x, F.mul(m.alpha, y)), t = F.mul(m.beta, y);
    return F.add(F.mul(fQ(F, ell, s), s), F.mul(fQ(F, ell, t), t));
  };
  for (Elem x = 0; x < q; ++x)
    for (Elem y = 0; y < q; ++y) {
      const std::uint64_t key = std::uint64_t(R(x, y)) * q + R(y, x);
      if (seen[key])
        return false;
      seen[key] = true;
    }
  return true;
}

}  // namespace

std::pair<Elem, Elem> butterfly_eval(const FieldCtx& F, const ButterflyMap& m, Elem x, Elem y)
{
  const unsigned ell = prime_power(m.Q)->second;
  auto R = [&](Elem s0, Elem s1) {
    const Elem s = F.add(s0, F.mul(m.alpha, s1)), t = F.mul(m.beta, s1);
    return F.add(F.mul(fQ(F, ell, s), s), F.mul(fQ(F, ell, t), t));
  };
  return {R(x, y), R(y, x)};
}

bool butterfly_is_perm(const ButterflyMap& m)
{
  const Tower t = butterfly_tower(m);
  return butterfly_perm_on(*t.F, m, t.ell);
}

CorVerdict cor95_check(const ButterflyMap& m)
{
  const Tower t = butterfly_tower(m);
  const auto& F = *t.F;
  const Elem s = F.add(F.add(F.mul(m.alpha, m.alpha), F.mul(m.alpha, m.beta)), F.mul(m.beta, m.beta));
  return {s == 1, butterfly_perm_on(F, m, t.ell)};
}

CorVerdict cor95b_check(const ButterflyMap& m)
{
  const Tower t = butterfly_tower(m);
  return {cond95b_value(*t.F, t.ell, m.alpha, m.beta), butterfly_perm_on(*t.F, m, t.ell)};
}

ButterflyReport butterfly_report(const ButterflyMap& m)
{
  const Tower t = butterfly_tower(m);
  const auto& F = *t.F;
  ButterflyReport r;
  const auto v95 = cor95_check(m);
  r.cond95 = v95.condition;
  r.oracle = v95.oracle;
  r.cond95b = cond95b_value(F, t.ell, m.alpha, m.beta);
  const unsigned ell2 = t.k + t.ell;
  r.cond95b_reduced = cond95b_value(F, ell2, m.alpha, m.beta);
  r.oracle_reduced = butterfly_perm_on(F, m, ell2);
  return r;
}

// ---------------------------------------------------------------------------

std::vector<Elem> remark96_lambdas(std::uint64_t q, std::uint64_t Q)
{
  const Tower t = tower(q, Q);
  require_gates(CorId::Remark96, t);
  std::vector<Elem> out;
  for (Elem l : t.F->mu_subgroup(q))
    if (t.F->pow(l, static_cast<std::int64_t>((Q + 1) % (t.F->order() - 1))) != 1)
      out.push_back(l);
  if (out.empty())
    throw Error(Errc::NoAdmissibleLambda, "mu_{q+1} lies inside mu_{Q+1}");
  std::sort(out.begin(), out.end());
  return out;
}

Remark96Poly remark96_family(std::uint64_t q, std::uint64_t Q, Elem lambda)
{
  const Tower t = tower(q, Q);
  require_gates(CorId::Remark96, t);
  const auto& F = *t.F;
  const auto P = [&](std::uint64_t e) { return F.pow(lambda, static_cast<std::int64_t>(e % (F.order() - 1))); };
  if (lambda == 0 || lambda >= F.order() || P(q + 1) != 1 || P(Q + 1) == 1)
    violated("lambda must lie in mu_{q+1} \\ mu_{Q+1}");
  Remark96Poly r;
  r.lambda = lambda;
  r.a = F.div(F.add(P(Q - 2), P(Q)), F.add(1, P(2 * Q - 2)));
  r.d = F.div(F.add(1, P(2 * Q)), F.add(lambda, P(2 * Q - 1)));
  const auto [u, v] = cor_exponents(CorId::C96, q, Q);
  r.f = make_sparse(F, {{1, 1}, {u * (q - 1) + 1, r.a}, {v * (q - 1) + 1, r.d}});
  r.permutes = is_perm_fq2(F, r.f, q).is_permutation;
  const Elem e = F.add(1, F.add(F.mul(r.a, r.a), F.mul(r.d, r.d)));
  r.trace_nonzero = e != 0 && F.add(r.a, r.d) != 0 && F.in_subfield(F.div(r.d, e), t.k) &&
                    F.rel_trace(F.div(r.d, e), t.k, 1) != 0;
  return r;
}

CorVerdict generalized97_check(std::uint64_t q, std::uint64_t Q, Elem a, Elem b, Elem c, Elem d)
{
  CorParams p;
  p.id = CorId::Gen97;
  p.q = q;
  p.Q = Q;
  p.a = a;
  p.b = b;
  p.c = c;
  p.d = d;
  const Tower t = tower(q, Q);
  require_hypotheses(p, t);
  const std::uint64_t r = canonical_r(q, Q).value();
  CorVerdict v;
  v.condition = check_main_theorem(make_input(t.F, q, Q, r, a, b, c, d)).verdict;
  v.oracle = is_perm_fq2(*t.F, cor_polynomial(p), q).is_permutation;
  return v;
}

// ---------------------------------------------------------------------------

namespace {

// Parameter space as a list of digit ranges plus a decoder into CorParams.
struct Domain {
  std::vector<std::uint64_t> radix;
  std::function<CorParams(const std::vector<std::uint64_t>&)> decode;
};

Domain domain_for(CorId id, std::uint64_t q, std::uint64_t Q, unsigned shift)
{
  const Tower t = tower(q, Q);
  require_gates(id, t);
  const std::uint64_t q2 = t.F->order();
  CorParams base;
  base.id = id;
  base.q = q;
  base.Q = Q;
  base.exponent_shift = shift;
  Domain dm;
  switch (id) {
    case CorId::C91:
    case CorId::Gen97:
      dm.radix = {q2, q2, q2, q2};
      dm.decode = [base](const std::vector<std::uint64_t>& x) {
        CorParams p = base;
        p.a = Elem(x[0]), p.b = Elem(x[1]), p.c = Elem(x[2]), p.d = Elem(x[3]);
        return p;
      };
      break;
    case CorId::C92:
    case CorId::C93:
      dm.radix = {q2, q2, q2};
      dm.decode = [base](const std::vector<std::uint64_t>& x) {
        CorParams p = base;
        p.a = Elem(x[0]), p.b = Elem(x[1]);
        (base.id == CorId::C92 ? p.d : p.c) = Elem(x[2]);
        return p;
      };
      break;
    case CorId::C94:
      dm.radix = {q2, q2};
      dm.decode = [base](const std::vector<std::uint64_t>& x) {
        CorParams p = base;
        p.b = Elem(x[0]), p.c = Elem(x[1]);
        return p;
      };
      break;
    case CorId::C96: {
      const auto fq = t.F->subfield(t.k);
      dm.radix = {q, q};
      dm.decode = [base, fq](const std::vector<std::uint64_t>& x) {
        CorParams p = base;
        p.a = fq[x[0]], p.d = fq[x[1]];
        return p;
      };
      break;
    }
    case CorId::C97: {
      auto fq = t.F->subfield(t.k);
      fq.erase(fq.begin());  // drop 0
      dm.radix = {q2 - 1, q - 1};
      dm.decode = [base, fq](const std::vector<std::uint64_t>& x) {
        CorParams p = base;
        p.a = Elem(x[0] + 1), p.b = fq[x[1]];
        return p;
      };
      break;
    }
    case CorId::C95:
    case CorId::C95b:
      dm.radix = {q - 1, q - 1};
      dm.decode = [base](const std::vector<std::uint64_t>& x) {
        CorParams p = base;
        p.alpha = Elem(x[0] + 1), p.beta = Elem(x[1] + 1);
        return p;
      };
      break;
    case CorId::Remark96: {
      const auto lams = remark96_lambdas(q, Q);
      dm.radix = {lams.size()};
      dm.decode = [base, lams](const std::vector<std::uint64_t>& x) {
        CorParams p = base;
        p.a = lams[x[0]];
        return p;
      };
      break;
    }
  }
  return dm;
}

void record(CorSweepReport& rep, const CorParams& p)
{
  bool ok;
  if (p.id == CorId::C95 || p.id == CorId::C95b)
    ok = butterfly_report({p.q, p.Q, p.alpha, p.beta}).consistent();
  else
    ok = cor_check(p).agree();
  ++rep.checked;
  if (ok)
    ++rep.agreements;
  else
    rep.mismatches.push_back(p);
}

}  // namespace

CorSweepReport cor_sweep_exhaustive(CorId id, std::uint64_t q, std::uint64_t Q, unsigned shift,
                                    std::uint64_t max_points)
{
  const Domain dm = domain_for(id, q, Q, shift);
  std::uint64_t total = 1;
  for (auto r : dm.radix) {
    if (r != 0 && total > max_points / r)
      throw Error(Errc::BudgetExceeded, "exhaustive corollary sweep exceeds the point budget");
    total *= r;
  }
  if (total > max_points)
    throw Error(Errc::BudgetExceeded, "exhaustive corollary sweep exceeds the point budget");
  CorSweepReport rep;
  std::vector<std::uint64_t> x(dm.radix.size());
  for (std::uint64_t i = 0; i < total; ++i) {
    std::uint64_t r = i;
    for (std::size_t j = dm.radix.size(); j-- > 0;) {
      x[j] = r % dm.radix[j];
      r /= dm.radix[j];
    }
    const CorParams p = dm.decode(x);
    if (cor_admissible(p))
      record(rep, p);
  }
  return rep;
}

CorSweepReport cor_sweep_random(CorId id, std::uint64_t q, std::uint64_t Q, std::uint64_t samples, std::uint64_t seed,
                                unsigned shift)
{
  const Domain dm = domain_for(id, q, Q, shift);
  CounterRng rng(seed);
  CorSweepReport rep;
  std::vector<std::uint64_t> x(dm.radix.size());
  std::uint64_t misses = 0;
  while (rep.checked < samples) {
    for (std::size_t j = 0; j < x.size(); ++j)
      x[j] = rng.below(dm.radix[j]);
    const CorParams p = dm.decode(x);
    if (!cor_admissible(p)) {
      if (++misses > 64 * (samples + 16))
        throw Error(Errc::HypothesisViolated, "parameter space has too few admissible points");
      continue;
    }
    record(rep, p);
  }
  return rep;
}

}  // namespace ffperm
