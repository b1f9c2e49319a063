#include "ffperm/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ffperm/errors.hpp"
#include "ffperm/numtheory.hpp"

namespace ffperm {

namespace {

// Exponent e with q = p^e.
std::uint64_t frob_exponent(const FieldCtx& ctx, std::uint64_t q)
{
  std::uint64_t e = 0;
  std::uint64_t v = 1;
  while (v < q) {
    v *= ctx.p();
    ++e;
  }
  if (v != q)
    throw Error(Errc::BadTower, "q is not a power of the characteristic");
  return e;
}

void require_same(const Poly& a, const Poly& b)
{
  if (a.ctx_ptr() != b.ctx_ptr())
    throw Error(Errc::Internal, "polynomials over different fields");
}

}  // namespace

Poly::Poly(const FieldCtx& ctx, std::vector<Elem> coeffs) : ctx_(&ctx), c_(std::move(coeffs))
{
  trim();
}

void Poly::trim()
{
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

Poly Poly::constant(const FieldCtx& ctx, Elem c)
{
  return Poly(ctx, {c});
}

Poly Poly::monomial(const FieldCtx& ctx, Elem c, std::size_t deg)
{
  std::vector<Elem> v(deg + 1, 0);
  v[deg] = c;
  return Poly(ctx, std::move(v));
}

Poly Poly::from_terms(const FieldCtx& ctx, const std::vector<std::pair<std::size_t, Elem>>& terms)
{
  std::size_t top = 0;
  for (auto& t : terms)
    top = std::max(top, t.first);
  std::vector<Elem> v(top + 1, 0);
  for (auto& [e, c] : terms)
    v[e] = ctx.add(v[e], c);
  return Poly(ctx, std::move(v));
}

Elem Poly::eval(Elem x) const
{
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = ctx_->add(ctx_->mul(acc, x), c_[i]);
  return acc;
}

Poly operator+(const Poly& a, const Poly& b)
{
  require_same(a, b);
  const auto& F = a.ctx();
  std::vector<Elem> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(r));
}

Poly operator-(const Poly& a, const Poly& b)
{
  require_same(a, b);
  const auto& F = a.ctx();
  std::vector<Elem> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(r));
}

Poly operator-(const Poly& a)
{
  const auto& F = a.ctx();
  std::vector<Elem> r(a.coeffs());
  for (auto& c : r)
    c = F.neg(c);
  return Poly(F, std::move(r));
}

Poly operator*(const Poly& a, const Poly& b)
{
  require_same(a, b);
  const auto& F = a.ctx();
  if (a.is_zero() || b.is_zero())
    return Poly(F);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Elem> r(ac.size() + bc.size() - 1, 0);
  if (F.p() == 2 && F.has_tables()) {
    const std::uint32_t* lg = F.log_table();
    const std::uint32_t* ex = F.exp_table();
    std::vector<std::uint32_t> lb(bc.size());
    for (std::size_t j = 0; j < bc.size(); ++j)
      lb[j] = bc[j] ? lg[bc[j]] : 0xFFFFFFFFu;
    for (std::size_t i = 0; i < ac.size(); ++i) {
      if (ac[i] == 0)
        continue;
      const std::uint32_t la = lg[ac[i]];
      for (std::size_t j = 0; j < bc.size(); ++j)
        if (lb[j] != 0xFFFFFFFFu)
          r[i + j] ^= ex[la + lb[j]];
    }
  } else {
    for (std::size_t i = 0; i < ac.size(); ++i) {
      if (ac[i] == 0)
        continue;
      for (std::size_t j = 0; j < bc.size(); ++j)
        r[i + j] = F.add(r[i + j], F.mul(ac[i], bc[j]));
    }
  }
  return Poly(F, std::move(r));
}

Poly scale(const Poly& a, Elem s)
{
  const auto& F = a.ctx();
  std::vector<Elem> r(a.coeffs());
  for (auto& c : r)
    c = F.mul(c, s);
  return Poly(F, std::move(r));
}

Poly shift(const Poly& a, std::size_t k)
{
  if (a.is_zero())
    return a;
  std::vector<Elem> r(k, 0);
  r.insert(r.end(), a.coeffs().begin(), a.coeffs().end());
  return Poly(a.ctx(), std::move(r));
}

Poly poly_monic(const Poly& a)
{
  if (a.is_zero())
    return a;
  return scale(a, a.ctx().inv(a.lead()));
}

Poly poly_pow(const Poly& a, std::uint64_t e)
{
  Poly r = Poly::constant(a.ctx(), 1);
  Poly b = a;
  while (e > 0) {
    if (e & 1)
      r = r * b;
    e >>= 1;
    if (e)
      b = b * b;
  }
  return r;
}

Poly poly_compose(const Poly& a, const Poly& b)
{
  Poly r(a.ctx());
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    r = r * b + Poly::constant(a.ctx(), a.coeffs()[i]);
  return r;
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b)
{
  require_same(a, b);
  if (b.is_zero())
    throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
  const auto& F = a.ctx();
  if (a.degree() < b.degree())
    return {Poly(F), a};
  std::vector<Elem> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Elem> q(r.size() - db, 0);
  const Elem linv = F.inv(b.lead());
  for (std::size_t i = r.size(); i-- > db;) {
    const Elem c = r[i];
    if (c == 0)
      continue;
    const Elem t = F.mul(c, linv);
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j)
      r[i - db + j] = F.sub(r[i - db + j], F.mul(t, bc[j]));
  }
  r.resize(db);
  return {Poly(F, std::move(q)), Poly(F, std::move(r))};
}

Poly poly_gcd(const Poly& a, const Poly& b)
{
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = poly_divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return poly_monic(x);
}

Poly poly_derivative(const Poly& a)
{
  const auto& F = a.ctx();
  if (a.coeffs().size() <= 1)
    return Poly(F);
  std::vector<Elem> r(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i)
    r[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i % F.p())), a.coeffs()[i]);
  return Poly(F, std::move(r));
}

bool poly_divides(const Poly& d, const Poly& a)
{
  if (d.is_zero())
    return a.is_zero();
  return poly_divrem(a, d).second.is_zero();
}

Poly poly_exact_div(const Poly& a, const Poly& b)
{
  auto [q, r] = poly_divrem(a, b);
  if (!r.is_zero())
    throw Error(Errc::NonExactDivision, "nonzero remainder");
  return q;
}

Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& m)
{
  Poly r = poly_divrem(Poly::constant(base.ctx(), 1), m).second;
  Poly b = poly_divrem(base, m).second;
  while (e > 0) {
    if (e & 1)
      r = poly_divrem(r * b, m).second;
    e >>= 1;
    if (e)
      b = poly_divrem(b * b, m).second;
  }
  return r;
}

// ---------------------------------------------------------------------------

Poly conj_poly(const Poly& a, std::uint64_t q)
{
  const auto& F = a.ctx();
  const std::uint64_t e = frob_exponent(F, q);
  std::vector<Elem> r(a.coeffs());
  for (auto& c : r)
    c = F.frobenius(c, e);
  return Poly(F, std::move(r));
}

Poly hat_poly(const Poly& a, std::uint64_t q)
{
  if (a.is_zero())
    throw Error(Errc::ZeroPolynomial, "hat of the zero polynomial");
  Poly c = conj_poly(a, q);
  std::vector<Elem> r(c.coeffs().rbegin(), c.coeffs().rend());
  return Poly(a.ctx(), std::move(r));
}

std::optional<Elem> is_scr(const Poly& a, std::uint64_t q)
{
  Poly h = hat_poly(a, q);
  if (h.degree() != a.degree())
    return std::nullopt;
  const auto& F = a.ctx();
  const Elem u = F.div(h.lead(), a.lead());
  if (scale(a, u) != h)
    return std::nullopt;
  return u;
}

unsigned root_multiplicity(const Poly& p, Elem x)
{
  if (p.is_zero())
    throw Error(Errc::ZeroPolynomial, "multiplicity in the zero polynomial");
  const auto& F = p.ctx();
  const Poly lin(F, {F.neg(x), 1});
  Poly cur = p;
  unsigned m = 0;
  while (cur.degree() >= 1) {
    auto [q, r] = poly_divrem(cur, lin);
    if (!r.is_zero())
      break;
    cur = std::move(q);
    ++m;
  }
  return m;
}

std::vector<std::pair<Elem, unsigned>> roots_in_mu(const Poly& a, std::uint64_t q)
{
  std::vector<std::pair<Elem, unsigned>> out;
  if (a.is_zero())
    throw Error(Errc::ZeroPolynomial, "mu-roots of the zero polynomial");
  for (Elem z : a.ctx().mu_subgroup(q))
    if (a.eval(z) == 0)
      out.emplace_back(z, root_multiplicity(a, z));
  return out;
}

QuadScrReport quad_scr_mu_roots(const FieldCtx& F, Elem alpha, Elem beta, std::uint64_t q)
{
  const std::uint64_t k = frob_exponent(F, q);
  if (F.p() != 2)
    throw Error(Errc::HypothesisViolated, "q must be even");
  if (beta == 0 || !F.in_subfield(beta, static_cast<unsigned>(k)))
    throw Error(Errc::BetaNotInFqStar, "beta must lie in F_q^*");
  QuadScrReport rep;
  const Elem t = F.div(F.pow(alpha, static_cast<std::int64_t>(q + 1)), F.mul(beta, beta));
  rep.trace_value = F.rel_trace(t, static_cast<unsigned>(k), 1);
  const Poly A(F, {F.frobenius(alpha, k), beta, alpha});
  for (Elem z : F.mu_subgroup(q))
    if (A.eval(z) == 0)
      ++rep.root_count;
  return rep;
}

// ---------------------------------------------------------------------------
// Squarefree decomposition and roots

Poly pth_root(const Poly& a)
{
  const auto& F = a.ctx();
  const unsigned p = F.p();
  const auto& c = a.coeffs();
  std::vector<Elem> r(c.empty() ? 0 : (c.size() - 1) / p + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0)
      continue;
    if (i % p != 0)
      throw Error(Errc::Internal, "pth_root of a polynomial with exponent not divisible by p");
    r[i / p] = F.frobenius(c[i], F.degree() - 1);
  }
  return Poly(F, std::move(r));
}

namespace {

void sqf_rec(const Poly& f, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out)
{
  if (f.degree() <= 0)
    return;
  const unsigned p = f.ctx().p();
  const Poly d = poly_derivative(f);
  if (d.is_zero()) {
    sqf_rec(pth_root(f), mult * p, out);
    return;
  }
  Poly c = poly_gcd(f, d);
  Poly w = poly_exact_div(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = poly_gcd(w, c);
    Poly z = poly_exact_div(w, y);
    if (z.degree() > 0)
      out.emplace_back(poly_monic(z), i * mult);
    ++i;
    w = std::move(y);
    c = poly_exact_div(c, w);
  }
  if (c.degree() > 0)
    sqf_rec(pth_root(c), mult * p, out);
}

// Distinct roots of a monic squarefree polynomial that splits completely over the field.
void split_roots(const Poly& g, std::vector<Elem>& out)
{
  const auto& F = g.ctx();
  if (g.degree() <= 0)
    return;
  if (g.degree() == 1) {
    out.push_back(F.neg(F.div(g.coeff(0), g.coeff(1))));
    return;
  }
  const Poly X = Poly::x(F);
  for (std::uint64_t trial = 0; trial < 2ull * F.order(); ++trial) {
    Poly t(F);
    if (F.p() == 2) {
      const Elem delta = F.exp(trial);
      Poly term = poly_divrem(scale(X, delta), g).second;
      for (unsigned i = 0; i < F.degree(); ++i) {
        t = t + term;
        term = poly_divrem(term * term, g).second;
      }
    } else {
      const Elem delta = static_cast<Elem>(trial % F.order());
      Poly base(F, {delta, 1});
      t = poly_powmod(base, (F.order() - 1) / 2, g) - Poly::constant(F, 1);
    }
    Poly d = poly_gcd(g, t);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_roots(d, out);
      split_roots(poly_exact_div(g, d), out);
      return;
    }
  }
  throw Error(Errc::Internal, "root splitting did not terminate");
}

// gcd(P, X^{p^N} - X): the product of the distinct linear factors of P over the field.
Poly split_part(const Poly& p)
{
  const auto& F = p.ctx();
  const Poly m = poly_monic(p);
  if (m.degree() <= 0)
    return Poly::constant(F, 1);
  Poly h = poly_divrem(Poly::x(F), m).second;
  for (unsigned i = 0; i < F.degree(); ++i)
    h = poly_powmod(h, F.p(), m);
  return poly_gcd(m, h - Poly::x(F));
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> squarefree_decomp(const Poly& p)
{
  if (p.is_zero())
    throw Error(Errc::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<std::pair<Poly, unsigned>> out;
  sqf_rec(poly_monic(p), 1, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

std::vector<Elem> field_roots(const Poly& p)
{
  if (p.is_zero())
    throw Error(Errc::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Elem> out;
  split_roots(split_part(p), out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Rational maps

RationalMap rat_normalize(const Poly& num, const Poly& den)
{
  if (num.is_zero() && den.is_zero())
    throw Error(Errc::BothZero, "numerator and denominator both zero");
  if (den.is_zero())
    throw Error(Errc::DivisionByZeroPoly, "zero denominator");
  const auto& F = den.ctx();
  RationalMap g;
  if (num.is_zero()) {
    g.num = Poly(F);
    g.den = Poly::constant(F, 1);
    g.removed = poly_monic(den);
    return g;
  }
  Poly c = poly_gcd(num, den);
  Poly n0 = poly_exact_div(num, c);
  Poly d0 = poly_exact_div(den, c);
  const Elem li = F.inv(d0.lead());
  g.num = scale(n0, li);
  g.den = scale(d0, li);
  g.removed = std::move(c);
  return g;
}

P1Point rat_eval(const RationalMap& g, const P1Point& x)
{
  const auto& F = g.ctx();
  if (x.inf) {
    const int dn = g.num.degree();
    const int dd = g.den.degree();
    if (dn > dd)
      return P1Point::infinity();
    if (dn < dd)
      return P1Point::finite(0);
    return P1Point::finite(F.div(g.num.lead(), g.den.lead()));
  }
  const Elem d = g.den.eval(x.x);
  if (d == 0)
    return P1Point::infinity();
  return P1Point::finite(F.div(g.num.eval(x.x), d));
}

RationalMap rat_compose(const RationalMap& f, const RationalMap& g)
{
  const auto& F = f.ctx();
  const int n = std::max(0, f.degree());
  // Homogenize: f(N/D) = sum f_i N^i D^{n-i} / sum h_i N^i D^{n-i}.
  std::vector<Poly> npow{Poly::constant(F, 1)};
  std::vector<Poly> dpow{Poly::constant(F, 1)};
  for (int i = 1; i <= n; ++i) {
    npow.push_back(npow.back() * g.num);
    dpow.push_back(dpow.back() * g.den);
  }
  Poly top(F), bot(F);
  for (int i = 0; i <= n; ++i) {
    const Poly t = npow[i] * dpow[n - i];
    top = top + scale(t, f.num.coeff(i));
    bot = bot + scale(t, f.den.coeff(i));
  }
  return rat_normalize(top, bot);
}

bool rat_equal(const RationalMap& f, const RationalMap& g)
{
  return f.num == g.num && f.den == g.den;
}

void check_nondegenerate(const FieldCtx& F, const DegreeOneMap& m)
{
  if (F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c)) == 0)
    throw Error(Errc::DegenerateMap, "ad - bc = 0");
}

DegreeOneMap deg1_inverse(const FieldCtx& F, const DegreeOneMap& m)
{
  check_nondegenerate(F, m);
  return {m.d, F.neg(m.b), F.neg(m.c), m.a};
}

DegreeOneMap deg1_compose(const FieldCtx& F, const DegreeOneMap& o, const DegreeOneMap& i)
{
  check_nondegenerate(F, o);
  check_nondegenerate(F, i);
  return {F.add(F.mul(o.a, i.a), F.mul(o.b, i.c)), F.add(F.mul(o.a, i.b), F.mul(o.b, i.d)),
          F.add(F.mul(o.c, i.a), F.mul(o.d, i.c)), F.add(F.mul(o.c, i.b), F.mul(o.d, i.d))};
}

RationalMap deg1_as_rat(const FieldCtx& F, const DegreeOneMap& m)
{
  check_nondegenerate(F, m);
  return rat_normalize(Poly(F, {m.b, m.a}), Poly(F, {m.d, m.c}));
}

P1Point deg1_eval(const FieldCtx& F, const DegreeOneMap& m, const P1Point& x)
{
  if (x.inf)
    return m.c == 0 ? P1Point::infinity() : P1Point::finite(F.div(m.a, m.c));
  const Elem den = F.add(F.mul(m.c, x.x), m.d);
  const Elem num = F.add(F.mul(m.a, x.x), m.b);
  if (den == 0)
    return P1Point::infinity();
  return P1Point::finite(F.div(num, den));
}

RationalMap rat_compose(const DegreeOneMap& rho, const RationalMap& g, const DegreeOneMap& sigma)
{
  const auto& F = g.ctx();
  return rat_compose(rat_compose(deg1_as_rat(F, rho), g), deg1_as_rat(F, sigma));
}

bool mu_perm_deg1_shape(const FieldCtx& F, const DegreeOneMap& r, std::uint64_t q)
{
  check_nondegenerate(F, r);
  const std::uint64_t k = frob_exponent(F, q);
  const Elem dq = F.frobenius(r.d, k);
  const Elem cq = F.frobenius(r.c, k);
  // (aX+b)/(cX+d) = lambda (beta^q X + alpha^q)/(alpha X + beta): a = u d^q, b = u c^q, u in mu.
  const Elem u = r.d != 0 ? F.div(r.a, dq) : F.div(r.b, cq);
  if (u == 0 || F.pow(u, static_cast<std::int64_t>(q + 1)) != 1)
    return false;
  if (F.mul(u, dq) != r.a || F.mul(u, cq) != r.b)
    return false;
  const auto nq1 = static_cast<std::int64_t>(q + 1);
  return F.pow(r.c, nq1) != F.pow(r.d, nq1);
}

bool mu_perm_deg1_enum(const FieldCtx& F, const DegreeOneMap& r, std::uint64_t q)
{
  check_nondegenerate(F, r);
  const auto mu = F.mu_subgroup(q);
  std::vector<P1Point> img;
  for (Elem z : mu) {
    P1Point w = deg1_eval(F, r, P1Point::finite(z));
    if (w.inf || F.pow(w.x, static_cast<std::int64_t>(q + 1)) != 1 || w.x == 0)
      return false;
    img.push_back(w);
  }
  std::sort(img.begin(), img.end());
  return std::adjacent_find(img.begin(), img.end()) == img.end();
}

bool mu_perm_deg1_test(const FieldCtx& F, const DegreeOneMap& r, std::uint64_t q)
{
  const bool s = mu_perm_deg1_shape(F, r, q);
  if (s != mu_perm_deg1_enum(F, r, q))
    throw Error(Errc::Internal, "degree-one mu permutation: shape and enumeration disagree");
  return s;
}

bool mu_to_p1_shape(const FieldCtx& F, const DegreeOneMap& r, std::uint64_t q)
{
  check_nondegenerate(F, r);
  if (r.c == 0)
    return false;
  const std::uint64_t k = frob_exponent(F, q);
  const Elem delta = F.div(r.a, r.c);
  const Elem gamma = F.div(r.d, r.c);
  if (F.pow(gamma, static_cast<std::int64_t>(q + 1)) != 1 || gamma == 0)
    return false;
  if (F.in_subfield(delta, static_cast<unsigned>(k)))
    return false;
  return F.div(r.b, r.c) == F.mul(gamma, F.frobenius(delta, k));
}

bool mu_to_p1_enum(const FieldCtx& F, const DegreeOneMap& r, std::uint64_t q)
{
  check_nondegenerate(F, r);
  const std::uint64_t k = frob_exponent(F, q);
  std::vector<P1Point> img;
  for (Elem z : F.mu_subgroup(q)) {
    P1Point w = deg1_eval(F, r, P1Point::finite(z));
    if (!w.inf && !F.in_subfield(w.x, static_cast<unsigned>(k)))
      return false;
    img.push_back(w);
  }
  std::sort(img.begin(), img.end());
  return std::adjacent_find(img.begin(), img.end()) == img.end();
}

bool mu_to_p1_test(const FieldCtx& F, const DegreeOneMap& r, std::uint64_t q)
{
  const bool s = mu_to_p1_shape(F, r, q);
  if (s != mu_to_p1_enum(F, r, q))
    throw Error(Errc::Internal, "degree-one mu -> P^1(F_q): shape and enumeration disagree");
  return s;
}

// ---------------------------------------------------------------------------
// Ramification

RamReport ramification_multiset(const RationalMap& g, const P1Point& beta, SplitPolicy policy)
{
  if (g.is_constant())
    throw Error(Errc::ConstantMap, "ramification of a constant map");
  const auto& F = g.ctx();
  const int n = g.degree();
  RamReport rep;
  rep.target = beta;
  Poly P = beta.inf ? g.den : g.num - scale(g.den, beta.x);
  unsigned inf_index = 0;
  if (beta.inf) {
    if (g.num.degree() > g.den.degree())
      inf_index = static_cast<unsigned>(g.num.degree() - g.den.degree());
  } else if (P.degree() < n) {
    inf_index = static_cast<unsigned>(n - std::max(P.degree(), 0));
  }
  if (P.degree() > 0) {
    for (auto& [S, i] : squarefree_decomp(P)) {
      for (int c = 0; c < S.degree(); ++c)
        rep.multiset.push_back(i);
      auto roots = field_roots(S);
      for (Elem r : roots)
        rep.points.emplace_back(P1Point::finite(r), i);
      if (static_cast<int>(roots.size()) != S.degree())
        rep.split = false;
    }
  }
  if (inf_index > 0) {
    rep.multiset.push_back(inf_index);
    rep.points.emplace_back(P1Point::infinity(), inf_index);
  }
  std::sort(rep.multiset.begin(), rep.multiset.end());
  std::sort(rep.points.begin(), rep.points.end());
  rep.preimage_count = static_cast<unsigned>(rep.points.size());
  unsigned total = 0;
  for (auto m : rep.multiset)
    total += m;
  if (total != static_cast<unsigned>(n))
    throw Error(Errc::Internal, "ramification multiset does not sum to the degree");
  if (!rep.split && policy == SplitPolicy::Require)
    throw Error(Errc::SplitFailure, "fiber not realized in F_" + std::to_string(F.order()));
  return rep;
}

unsigned ramification_index(const RationalMap& g, const P1Point& alpha)
{
  if (g.is_constant())
    throw Error(Errc::ConstantMap, "ramification of a constant map");
  const P1Point beta = rat_eval(g, alpha);
  const int n = g.degree();
  if (alpha.inf) {
    if (beta.inf)
      return static_cast<unsigned>(g.num.degree() - g.den.degree());
    const Poly P = g.num - scale(g.den, beta.x);
    return static_cast<unsigned>(n - std::max(P.degree(), 0));
  }
  if (beta.inf)
    return root_multiplicity(g.den, alpha.x);
  return root_multiplicity(g.num - scale(g.den, beta.x), alpha.x);
}

Poly wronskian(const RationalMap& g)
{
  return poly_derivative(g.num) * g.den - g.num * poly_derivative(g.den);
}

SeparableSplit is_separable_rat(const RationalMap& g)
{
  if (g.is_constant())
    throw Error(Errc::ConstantMap, "separability of a constant map");
  const auto& F = g.ctx();
  const unsigned p = F.p();
  std::uint64_t common = 0;
  for (const Poly* P : {&g.num, &g.den})
    for (std::size_t i = 0; i < P->coeffs().size(); ++i)
      if (P->coeffs()[i] != 0)
        common = gcd_u64(common, i);
  SeparableSplit s;
  unsigned ell = 0;
  std::uint64_t step = 1;
  while (common != 0 && common % (step * p) == 0) {
    step *= p;
    ++ell;
  }
  s.ell = ell;
  s.separable = ell == 0;
  auto squeeze = [&](const Poly& P) {
    std::vector<Elem> r;
    for (std::size_t i = 0; i < P.coeffs().size(); i += step)
      r.push_back(P.coeffs()[i]);
    return Poly(F, std::move(r));
  };
  s.g0 = rat_normalize(squeeze(g.num), squeeze(g.den));
  return s;
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly BiPoly::term(const FieldCtx& ctx, Elem c, std::uint32_t i, std::uint32_t j)
{
  BiPoly b(ctx);
  b.add_term(i, j, c);
  return b;
}

Elem BiPoly::coeff(std::uint32_t i, std::uint32_t j) const
{
  auto it = t_.find({i, j});
  return it == t_.end() ? 0 : it->second;
}

void BiPoly::add_term(std::uint32_t i, std::uint32_t j, Elem c)
{
  if (c == 0)
    return;
  auto [it, fresh] = t_.emplace(Key{i, j}, c);
  if (!fresh) {
    it->second = ctx_->add(it->second, c);
    if (it->second == 0)
      t_.erase(it);
  }
}

Elem BiPoly::eval(Elem x, Elem y) const
{
  Elem acc = 0;
  for (auto& [k, c] : t_)
    acc = ctx_->add(acc, ctx_->mul(c, ctx_->mul(ctx_->pow(x, k.first), ctx_->pow(y, k.second))));
  return acc;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b)
{
  BiPoly r = a;
  for (auto& [k, c] : b.terms())
    r.add_term(k.first, k.second, c);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b)
{
  BiPoly r = a;
  for (auto& [k, c] : b.terms())
    r.add_term(k.first, k.second, a.ctx().neg(c));
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
  BiPoly r(a.ctx());
  for (auto& [ka, ca] : a.terms())
    for (auto& [kb, cb] : b.terms())
      r.add_term(ka.first + kb.first, ka.second + kb.second, a.ctx().mul(ca, cb));
  return r;
}

BiPoly scale(const BiPoly& a, Elem s)
{
  BiPoly r(a.ctx());
  for (auto& [k, c] : a.terms())
    r.add_term(k.first, k.second, a.ctx().mul(c, s));
  return r;
}

// ---------------------------------------------------------------------------
// Text formats

std::string poly_to_text(const Poly& p)
{
  if (p.is_zero())
    return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    os << (i ? "," : "") << p.coeffs()[i];
  return os.str();
}

Poly poly_from_text(const FieldCtx& ctx, const std::string& s)
{
  std::vector<Elem> c;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad coefficient '" + tok + "'");
    }
    if (used != tok.size() || v >= ctx.order())
      throw Error(Errc::ParseError, "bad coefficient '" + tok + "'");
    c.push_back(static_cast<Elem>(v));
  }
  return Poly(ctx, std::move(c));
}

std::string rat_to_text(const RationalMap& g)
{
  return poly_to_text(g.num) + "|" + poly_to_text(g.den);
}

RationalMap rat_from_text(const FieldCtx& ctx, const std::string& s)
{
  auto bar = s.find('|');
  if (bar == std::string::npos)
    return rat_normalize(poly_from_text(ctx, s), Poly::constant(ctx, 1));
  return rat_normalize(poly_from_text(ctx, s.substr(0, bar)), poly_from_text(ctx, s.substr(bar + 1)));
}

}  // namespace ffperm
