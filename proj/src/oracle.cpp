#include "ffperm/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ffperm/errors.hpp"
#include "ffperm/numtheory.hpp"

namespace ffperm {

namespace {

unsigned log_q(const FieldCtx& F, std::uint64_t q)
{
  auto pp = prime_power(q);
  if (!pp || pp->first != F.p())
    throw Error(Errc::HypothesisViolated, "q must be a power of the characteristic");
  return pp->second;
}

bool in_mu(const FieldCtx& F, Elem x, std::uint64_t q)
{
  return x != 0 && F.pow(x, static_cast<std::int64_t>(q + 1)) == 1;
}

// First collision over `points` of `values`, or a verdict of injectivity.
PermVerdict collision_scan(const std::vector<P1Point>& points, const std::vector<P1Point>& values)
{
  PermVerdict v;
  std::map<P1Point, P1Point> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto [it, fresh] = seen.emplace(values[i], points[i]);
    if (!fresh) {
      v.witness = std::make_pair(it->second, points[i]);
      return v;
    }
  }
  v.is_permutation = true;
  return v;
}

}  // namespace

SparsePoly make_sparse(const FieldCtx& ctx, std::vector<std::pair<std::uint64_t, Elem>> terms)
{
  std::map<std::uint64_t, Elem> acc;
  for (auto& [e, c] : terms)
    acc[e] = ctx.add(acc[e], c);
  SparsePoly f;
  for (auto& [e, c] : acc)
    if (c != 0)
      f.terms.emplace_back(e, c);
  return f;
}

SparsePoly sparse_from_A(const Poly& A, std::uint64_t r, std::uint64_t q)
{
  std::vector<std::pair<std::uint64_t, Elem>> t;
  for (std::size_t i = 0; i < A.coeffs().size(); ++i)
    if (A.coeffs()[i] != 0)
      t.emplace_back(r + i * (q - 1), A.coeffs()[i]);
  return make_sparse(A.ctx(), std::move(t));
}

Elem sparse_eval(const FieldCtx& F, const SparsePoly& f, Elem x)
{
  Elem acc = 0;
  if (x == 0) {
    for (auto& [e, c] : f.terms)
      if (e == 0)
        acc = F.add(acc, c);
    return acc;
  }
  const std::uint64_t n1 = F.order() - 1;
  for (auto& [e, c] : f.terms)
    acc = F.add(acc, F.mul(c, F.pow(x, static_cast<std::int64_t>(e % n1))));
  return acc;
}

std::string sparse_to_text(const SparsePoly& f)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < f.terms.size(); ++i)
    os << (i ? "+" : "") << f.terms[i].second << "*X^" << f.terms[i].first;
  return f.terms.empty() ? "0" : os.str();
}

PermVerdict is_perm_on(const FieldCtx& F, const SparsePoly& f, const std::vector<Elem>& domain)
{
  std::vector<Elem> sorted(domain);
  std::sort(sorted.begin(), sorted.end());
  std::vector<P1Point> pts, vals;
  for (Elem x : domain) {
    const Elem y = sparse_eval(F, f, x);
    if (!std::binary_search(sorted.begin(), sorted.end(), y))
      throw Error(Errc::MapNotStable, "value " + std::to_string(y) + " leaves the domain");
    pts.push_back(P1Point::finite(x));
    vals.push_back(P1Point::finite(y));
  }
  return collision_scan(pts, vals);
}

PermVerdict is_perm_fq2(const FieldCtx& F, const SparsePoly& f, std::uint64_t q)
{
  return is_perm_on(F, f, F.subfield(2 * log_q(F, q)));
}

PermVerdict is_perm_mu(const RationalMap& g, std::uint64_t q)
{
  const auto& F = g.ctx();
  auto mu = F.mu_subgroup(q);
  std::sort(mu.begin(), mu.end());
  std::vector<P1Point> pts, vals;
  for (Elem z : mu) {
    const P1Point w = rat_eval(g, P1Point::finite(z));
    if (w.inf || !in_mu(F, w.x, q))
      throw Error(Errc::MapNotStable, "image leaves mu_{q+1}");
    pts.push_back(P1Point::finite(z));
    vals.push_back(w);
  }
  return collision_scan(pts, vals);
}

PermVerdict is_perm_p1fq(const RationalMap& h, std::uint64_t q)
{
  const auto& F = h.ctx();
  const unsigned k = log_q(F, q);
  std::vector<P1Point> pts;
  for (Elem x : F.subfield(k))
    pts.push_back(P1Point::finite(x));
  pts.push_back(P1Point::infinity());
  std::vector<P1Point> vals;
  for (const auto& x : pts) {
    const P1Point w = rat_eval(h, x);
    if (!w.inf && !F.in_subfield(w.x, k))
      throw Error(Errc::MapNotStable, "image leaves P^1(F_q)");
    vals.push_back(w);
  }
  return collision_scan(pts, vals);
}

bool OldReduction::g0_permutes() const
{
  std::vector<Elem> v(values);
  std::sort(v.begin(), v.end());
  return (v.empty() || v.front() != 0) && std::adjacent_find(v.begin(), v.end()) == v.end();
}

OldReduction reduce_lemma_old(std::uint64_t r, const Poly& A, std::uint64_t q)
{
  if (A.is_zero())
    throw Error(Errc::ZeroPolynomial, "A is zero");
  const auto& F = A.ctx();
  OldReduction red;
  red.gcd_ok = gcd_u64(r, q - 1) == 1;
  red.mu = F.mu_subgroup(q);
  for (Elem z : red.mu) {
    const Elem av = A.eval(z);
    red.values.push_back(av == 0 ? 0
                                 : F.mul(F.pow(z, static_cast<std::int64_t>(r % (q + 1))),
                                         F.pow(av, static_cast<std::int64_t>(q - 1))));
  }
  return red;
}

RationalMap build_g_from_A(const Poly& A, std::int64_t s, std::uint64_t q)
{
  const Poly hat = hat_poly(A, q);
  const std::int64_t n = A.degree();
  if (s >= n)
    return rat_normalize(shift(hat, static_cast<std::size_t>(s - n)), A);
  return rat_normalize(hat, shift(A, static_cast<std::size_t>(n - s)));
}

RationalMap build_h_from_g(const RationalMap& g, const DegreeOneMap& rho, const DegreeOneMap& sigma,
                           std::uint64_t q)
{
  const auto& F = g.ctx();
  if (!mu_to_p1_test(F, rho, q) || !mu_to_p1_test(F, sigma, q))
    throw Error(Errc::BadConjugators, "conjugators must map mu_{q+1} onto P^1(F_q)");
  return rat_compose(rho, g, deg1_inverse(F, sigma));
}

bool rat_in_subfield(const RationalMap& g, unsigned d)
{
  const auto& F = g.ctx();
  for (const Poly* P : {&g.num, &g.den})
    for (Elem c : P->coeffs())
      if (!F.in_subfield(c, d))
        return false;
  return true;
}

BinomialReport binomial_criterion(const FieldCtx& F, std::uint64_t r, std::uint64_t t, Elem alpha,
                                  std::uint64_t q)
{
  if (r < 1 || t < 1 || gcd_u64(t, q + 1) != 1)
    throw Error(Errc::HypothesisViolated, "need r, t >= 1 and gcd(t, q+1) = 1");
  if (alpha == 0)
    throw Error(Errc::HypothesisViolated, "alpha must be nonzero");
  BinomialReport rep;
  rep.criterion = gcd_u64(r, q - 1) == 1 && r % (q + 1) == t % (q + 1) && !in_mu(F, alpha, q);
  const SparsePoly f = make_sparse(F, {{r + t * (q - 1), 1}, {r, F.neg(alpha)}});
  rep.oracle = is_perm_fq2(F, f, q).is_permutation;
  return rep;
}

bool lpp_check_map(const RationalMap& g, unsigned s, unsigned t, const P1Point& gamma, std::uint64_t q)
{
  const auto& F = g.ctx();
  const unsigned k = log_q(F, q);
  if (gcd_u64(t, q + 1) != 1)
    throw Error(Errc::HypothesisViolated, "gcd(t, q+1) must be 1");
  const RamReport rep = ramification_multiset(g, gamma, SplitPolicy::Require);
  std::vector<unsigned> expect{s, t};
  std::sort(expect.begin(), expect.end());
  if (rep.multiset != expect)
    throw Error(Errc::RamMismatch, "ramification multiset over gamma is not [s, t]");
  const bool gamma_ok = gamma.inf || (F.in_subfield(gamma.x, 2 * k) && !in_mu(F, gamma.x, q));
  return s % (q + 1) == 0 && gamma_ok;
}

bool lpp_check(const Poly& A, std::int64_t r, unsigned s, unsigned t, const P1Point& gamma, std::uint64_t q)
{
  if (!roots_in_mu(A, q).empty())
    throw Error(Errc::HypothesisViolated, "A has a root in mu_{q+1}");
  return lpp_check_map(build_g_from_A(A, r, q), s, t, gamma, q);
}

std::optional<MultEquivWitness> mult_equiv(const FieldCtx& F, const SparsePoly& f, const SparsePoly& g)
{
  const Elem n = F.order();
  std::vector<Elem> tf(n), tg(n), comp(n);
  for (Elem x = 0; x < n; ++x) {
    tf[x] = sparse_eval(F, f, x);
    tg[x] = sparse_eval(F, g, x);
  }
  for (std::uint64_t e = 1; e <= n - 1; ++e) {
    if (gcd_u64(e, n - 1) != 1)
      continue;
    std::vector<Elem> xe(n);
    for (Elem x = 0; x < n; ++x)
      xe[x] = F.pow(x, static_cast<std::int64_t>(e));
    for (Elem alpha = 1; alpha < n; ++alpha) {
      for (Elem x = 0; x < n; ++x)
        comp[x] = tf[F.mul(alpha, xe[x])];
      Elem beta = 1;
      for (Elem x = 0; x < n; ++x)
        if (comp[x] != 0) {
          beta = F.div(tg[x], comp[x]);
          break;
        }
      if (beta == 0)
        continue;
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x)
        ok = tg[x] == F.mul(beta, comp[x]);
      if (ok)
        return MultEquivWitness{alpha, beta, e};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

struct Table3Spec {
  std::uint64_t q;
  unsigned p, k;
  std::string label;
  std::string parameter;
  std::vector<int> param_poly;  // condition polynomial in the parameter, low degree first
  // Coefficients; -1 stands for the parameter, -2 for its square.
  std::vector<int> num, den;
};

Elem table_coeff(const FieldCtx& F, int c, Elem param)
{
  if (c == -1)
    return param;
  if (c == -2)
    return F.mul(param, param);
  return F.from_int(c);
}

}  // namespace

std::vector<Table3Entry> table3_entries()
{
  const std::vector<Table3Spec> specs{
      {8, 2, 3, "(X^4+aX^3+X)/(X^2+X+1)", "a^3+a=1", {1, 1, 0, 1}, {0, 1, 0, -1, 1}, {1, 1, 1}},
      {7, 7, 1, "X^4+3X", "", {}, {0, 3, 0, 0, 1}, {1}},
      {5, 5, 1, "(X^4+X+1)/(X^2+2)", "", {}, {1, 1, 0, 0, 1}, {2, 0, 1}},
      {5, 5, 1, "(X^4+X^3+1)/(X^2+2)", "", {}, {1, 0, 0, 1, 1}, {2, 0, 1}},
      {4, 2, 2, "(X^4+wX)/(X^3+w^2)", "w^2+w=1", {1, 1, 1}, {0, -1, 0, 0, 1}, {-2, 0, 0, 1}},
      {4, 2, 2, "(X^4+X^2+X)/(X^3+w)", "w^2+w=1", {1, 1, 1}, {0, 1, 1, 0, 1}, {-1, 0, 0, 1}},
      {4, 2, 2, "(X^4+wX^2+X)/(X^3+X+1)", "w^2+w=1", {1, 1, 1}, {0, 1, -1, 0, 1}, {1, 1, 0, 1}},
      {3, 3, 1, "X^4-X^2+X", "", {}, {0, 1, -3, 0, 1}, {1}},
      {3, 3, 1, "(X^4+X+1)/(X^2+1)", "", {}, {1, 1, 0, 0, 1}, {1, 0, 1}},
      {3, 3, 1, "(X^4+X^3+1)/(X^2+1)", "", {}, {1, 0, 0, 1, 1}, {1, 0, 1}},
      {2, 2, 1, "X^4+X^3+X", "", {}, {0, 1, 0, 1, 1}, {1}},
      {2, 2, 1, "(X^4+X^3+X)/(X^2+X+1)", "", {}, {0, 1, 0, 1, 1}, {1, 1, 1}},
  };
  std::vector<Table3Entry> out;
  for (const auto& s : specs) {
    FieldPtr F = field(s.p, s.k);
    std::vector<Elem> params{0};
    if (!s.param_poly.empty()) {
      std::vector<Elem> pc;
      for (int c : s.param_poly)
        pc.push_back(F->from_int(c));
      params = field_roots(Poly(*F, pc));
    }
    for (Elem par : params) {
      auto build = [&](const std::vector<int>& cs) {
        std::vector<Elem> v;
        for (int c : cs)
          v.push_back(c == -3 ? F->neg(1) : table_coeff(*F, c, par));
        return Poly(*F, v);
      };
      Table3Entry e;
      e.q = s.q;
      e.label = s.label;
      e.parameter = s.parameter;
      e.parameter_value = par;
      e.ctx = F;
      e.h = rat_normalize(build(s.num), build(s.den));
      e.permutes = e.h.degree() == 4 && is_perm_p1fq(e.h, s.q).is_permutation;
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<Table3Entry> table3_verify()
{
  auto entries = table3_entries();
  for (const auto& e : entries)
    if (!e.permutes)
      throw Error(Errc::TableEntryFails, e.label + " over F_" + std::to_string(e.q));
  return entries;
}

std::vector<RationalMap> degree3_permutations(const FieldCtx& F, std::uint64_t q)
{
  const unsigned k = log_q(F, q);
  if (F.degree() % (2 * k) != 0)
    throw Error(Errc::BadTower, "ambient field must contain F_{q^2}");
  const auto fq = F.subfield(k);
  const auto fq2 = F.subfield(2 * k);
  const RationalMap cube = rat_normalize(Poly::monomial(F, 1, 3), Poly::constant(F, 1));
  // A few degree-one maps over F_q, scanned in encoding order.
  std::vector<DegreeOneMap> lin;
  for (Elem a : fq)
    for (Elem b : fq)
      for (Elem c : {Elem(0), Elem(1)}) {
        const Elem d = c == 0 ? 1 : 0;
        if (a == 0 && c == 0)
          continue;
        if (F.sub(F.mul(a, d), F.mul(b, c)) == 0)
          continue;
        if (lin.size() < 6)
          lin.push_back({a, b, c, d});
      }
  std::vector<RationalMap> out;
  if (q % 3 == 2) {
    for (std::size_t i = 0; i < lin.size(); ++i)
      out.push_back(rat_compose(lin[i], cube, lin[lin.size() - 1 - i]));
  } else if (q % 3 == 1) {
    std::vector<DegreeOneMap> conj;
    for (Elem gamma : F.mu_subgroup(q))
      for (Elem delta : fq2) {
        if (F.in_subfield(delta, k) || conj.size() >= 4)
          continue;
        const DegreeOneMap m{delta, F.neg(F.mul(gamma, F.frobenius(delta, k))), 1, F.neg(gamma)};
        if (mu_to_p1_test(F, m, q))
          conj.push_back(m);
      }
    for (std::size_t i = 0; i < conj.size(); ++i)
      for (std::size_t j = 0; j < conj.size(); ++j)
        out.push_back(rat_compose(conj[i], cube, deg1_inverse(F, conj[j])));
  } else {
    for (Elem a : fq) {
      if (a == 0)
        continue;
      bool square = false;
      for (Elem x : fq)
        square = square || F.mul(x, x) == a;
      if (square)
        continue;
      const RationalMap h = rat_normalize(Poly(F, {0, F.neg(a), 0, 1}), Poly::constant(F, 1));
      out.push_back(h);
      out.push_back(rat_compose(lin[0], h, lin.back()));
    }
  }
  return out;
}

}  // namespace ffperm
