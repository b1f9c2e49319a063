#include "ffperm/identities.hpp"

#include <algorithm>
#include <set>

#include "ffperm/errors.hpp"
#include "ffperm/numtheory.hpp"

namespace ffperm {

DenseBiPoly::DenseBiPoly(const FieldCtx& ctx, std::size_t nx, std::size_t ny)
    : ctx_(&ctx), nx_(nx), ny_(ny), c_(nx * ny, 0)
{
}

void DenseBiPoly::add_term(std::size_t i, std::size_t j, Elem c)
{
  if (c == 0)
    return;
  if (i >= nx_ || j >= ny_) {
    const std::size_t nx = std::max(nx_, i + 1), ny = std::max(ny_, j + 1);
    std::vector<Elem> g(nx * ny, 0);
    for (std::size_t a = 0; a < nx_; ++a)
      std::copy_n(c_.begin() + a * ny_, ny_, g.begin() + a * ny);
    c_.swap(g);
    nx_ = nx;
    ny_ = ny;
  }
  Elem& e = at(i, j);
  e = ctx_->add(e, c);
}

bool DenseBiPoly::is_zero() const
{
  return std::all_of(c_.begin(), c_.end(), [](Elem e) { return e == 0; });
}

Poly DenseBiPoly::at_x(Elem x) const
{
  const auto& F = *ctx_;
  std::vector<Elem> out(ny_, 0);
  Elem xi = 1;
  for (std::size_t i = 0; i < nx_; ++i, xi = F.mul(xi, x))
    for (std::size_t j = 0; j < ny_; ++j)
      out[j] = F.add(out[j], F.mul(xi, c_[i * ny_ + j]));
  return Poly(F, std::move(out));
}

BiPoly DenseBiPoly::to_sparse() const
{
  BiPoly b(*ctx_);
  for (std::size_t i = 0; i < nx_; ++i)
    for (std::size_t j = 0; j < ny_; ++j)
      if (c_[i * ny_ + j] != 0)
        b.add_term(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), c_[i * ny_ + j]);
  return b;
}

bool operator==(const DenseBiPoly& a, const DenseBiPoly& b)
{
  const std::size_t nx = std::max(a.nx(), b.nx()), ny = std::max(a.ny(), b.ny());
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      if (a.coeff(i, j) != b.coeff(i, j))
        return false;
  return true;
}

DenseBiPoly operator*(const DenseBiPoly& a, const DenseBiPoly& b)
{
  const auto& F = a.ctx();
  DenseBiPoly out(F, a.nx() + b.nx() - 1, a.ny() + b.ny() - 1);
  for (std::size_t i = 0; i < a.nx(); ++i)
    for (std::size_t j = 0; j < a.ny(); ++j) {
      const Elem x = a.coeff(i, j);
      if (x == 0)
        continue;
      for (std::size_t k = 0; k < b.nx(); ++k)
        for (std::size_t l = 0; l < b.ny(); ++l)
          if (Elem y = b.coeff(k, l))
            out.at(i + k, j + l) = F.add(out.at(i + k, j + l), F.mul(x, y));
    }
  return out;
}

namespace {

struct Sizes {
  std::uint64_t qn, M, s;
};

Sizes sizes(const IdentityInstance& I)
{
  const std::uint64_t qn = I.ctx->order();
  return {qn, qn - 1, (qn - 1) / (I.q - 1)};
}

Elem qpow(const IdentityInstance& I, Elem z)
{
  return I.ctx->frobenius(z, prime_power(I.q)->second);
}

Poly prod_linear_over_delta_pow(const IdentityInstance& I, unsigned e)
{
  const auto& F = *I.ctx;
  Poly out = Poly::constant(F, 1);
  for (Elem u : I.delta)
    out = out * poly_pow(Poly(F, {F.neg(u), 1}), e);
  return out;
}

// Y^a - c as a polynomial
Poly binom(const FieldCtx& F, std::uint64_t a, Elem c)
{
  return Poly::monomial(F, 1, a) - Poly::constant(F, c);
}

}  // namespace

std::vector<Elem> delta_set(std::uint64_t q, unsigned n)
{
  return make_identity_instance(q, n).delta;
}

IdentityInstance make_identity_instance(std::uint64_t q, unsigned n, std::uint64_t limit)
{
  const auto pk = prime_power(q);
  if (!pk || n == 0)
    throw Error(Errc::BadFieldSpec, "need a prime power q and n >= 1");
  std::uint64_t qn = 1;
  for (unsigned i = 0; i < n; ++i) {
    qn *= q;
    if (qn > limit)
      throw Error(Errc::SizeLimit, "q^n exceeds the dense limit");
  }
  IdentityInstance I;
  I.q = q;
  I.n = n;
  I.ctx = field(static_cast<unsigned>(pk->first), pk->second * n);
  const auto& F = *I.ctx;
  std::set<Elem> d;
  for (Elem w = 0; w < F.order(); ++w)
    if (!F.in_subfield(w, pk->second)) {
      const Elem t = F.sub(qpow(I, w), w);
      d.insert(F.pow(t, static_cast<std::int64_t>(q - 1)));
    }
  I.delta.assign(d.begin(), d.end());
  return I;
}

DenseBiPoly thm81_lhs(const IdentityInstance& I)
{
  const auto& F = *I.ctx;
  const auto [qn, M, s] = sizes(I);
  (void)qn;
  (void)s;
  DenseBiPoly g(F, M + 1, M + 1);
  g.at(0, 0) = 1;
  std::size_t t = 0;  // current total degree
  for (Elem z = 1; z < F.order(); ++z) {
    const Elem zq = F.neg(qpow(I, z));
    ++t;
    // multiply by 1 + zX - z^q Y in place; descending order reads only untouched entries
    for (std::size_t i = t + 1; i-- > 0;)
      for (std::size_t j = t - i + 1; j-- > 0;) {
        Elem v = g.at(i, j);
        if (i > 0)
          v = F.add(v, F.mul(z, g.at(i - 1, j)));
        if (j > 0)
          v = F.add(v, F.mul(zq, g.at(i, j - 1)));
        g.at(i, j) = v;
      }
  }
  g.add_term(M, 0, 1);
  g.add_term(0, 0, F.neg(1));
  return g;
}

DenseBiPoly power_difference_quotient(const IdentityInstance& I, QuotientRoute route)
{
  const auto& F = *I.ctx;
  const auto [qn, M, s] = sizes(I);
  (void)qn;
  DenseBiPoly quo(F, M - s + 1, M - s + 1);
  if (route == QuotientRoute::GeometricSum) {
    for (std::uint64_t i = 0; i + 2 <= I.q; ++i)
      quo.add_term(s * i, s * (I.q - 2 - i), 1);
    return quo;
  }
  DenseBiPoly rem(F, M + 1, M + 1);
  rem.at(M, 0) = 1;
  rem.at(0, M) = F.neg(1);
  // rem -= c X^{i-s} Y^j (X^s - Y^s) for the leading X-row
  for (std::size_t i = M + 1; i-- > s;)
    for (std::size_t j = 0; j <= M; ++j) {
      const Elem c = rem.at(i, j);
      if (c == 0)
        continue;
      if (j > M - s)
        throw Error(Errc::NonExactDivision, "quotient row exceeds the expected Y-degree");
      quo.add_term(i - s, j, c);
      rem.at(i, j) = 0;
      rem.at(i - s, j + s) = F.add(rem.at(i - s, j + s), c);
    }
  if (!rem.is_zero())
    throw Error(Errc::NonExactDivision, "X^s - Y^s does not divide X^M - Y^M");
  return quo;
}

DenseBiPoly thm81_rhs(const IdentityInstance& I, QuotientRoute route)
{
  const auto& F = *I.ctx;
  const auto [qn, M, s] = sizes(I);
  (void)M;
  (void)s;
  const std::uint64_t q = I.q;
  DenseBiPoly S(F, 1, 1);
  S.add_term(0, (qn - q) / (q - 1), 1);
  std::uint64_t qi = q;  // q^i
  for (unsigned i = 1; i < I.n; ++i, qi *= q)
    S.add_term(1 + (qn - qi * q) / (q - 1), (qi - q) / (q - 1), 1);
  DenseBiPoly negY(F, 1, 2);
  negY.at(0, 1) = F.neg(1);
  return negY * power_difference_quotient(I, route) * S;
}

bool verify_thm81(const IdentityInstance& I)
{
  const auto qa = power_difference_quotient(I, QuotientRoute::LongDivision);
  const auto qb = power_difference_quotient(I, QuotientRoute::GeometricSum);
  if (!(qa == qb))
    return false;
  return thm81_lhs(I) == thm81_rhs(I, QuotientRoute::LongDivision);
}

Poly lemma82_lhs(const IdentityInstance& I)
{
  const auto& F = *I.ctx;
  Poly out = Poly::constant(F, 1);
  for (Elem z = 1; z < F.order(); ++z)
    out = out * Poly(F, {F.add(1, z), F.neg(qpow(I, z))});
  return out;
}

Poly lemma82_rhs(const IdentityInstance& I)
{
  const auto& F = *I.ctx;
  const auto [qn, M, s] = sizes(I);
  (void)M;
  const Poly num = Poly::monomial(F, 1, qn) - Poly::x(F);
  return -(poly_exact_div(num, binom(F, s, 1)) * prod_linear_over_delta_pow(I, static_cast<unsigned>(I.q)));
}

bool verify_lemma82(const IdentityInstance& I)
{
  std::uint64_t qn1 = 1;
  for (unsigned i = 1; i < I.n; ++i)
    qn1 *= I.q;
  if (I.delta.size() != (qn1 - 1) / (I.q - 1))
    return false;
  return lemma82_lhs(I) == lemma82_rhs(I);
}

Poly cor83_lhs(const IdentityInstance& I)
{
  const auto& F = *I.ctx;
  Poly out = Poly::constant(F, 1);
  for (Elem z = 0; z < F.order(); ++z) {
    const Elem v = F.mul(F.add(z, 1), F.pow(z, static_cast<std::int64_t>(I.q - 1)));
    out = out * Poly(F, {F.neg(v), 1});
  }
  return out;
}

Poly cor83_rhs(const IdentityInstance& I)
{
  const auto& F = *I.ctx;
  const auto [qn, M, s] = sizes(I);
  (void)qn;
  const Poly ratio = poly_exact_div(binom(F, M, 1), binom(F, s, 1));
  return Poly::monomial(F, 1, 2) * ratio * prod_linear_over_delta_pow(I, static_cast<unsigned>(I.q));
}

bool verify_cor83(const IdentityInstance& I)
{
  return cor83_lhs(I) == cor83_rhs(I);
}

bool verify_lemma84(const IdentityInstance& I)
{
  const auto& F = *I.ctx;
  Poly sum(F);
  std::uint64_t qi = 1;  // q^{i-1}
  for (unsigned i = 1; i <= I.n; ++i, qi *= I.q)
    sum = sum + Poly::monomial(F, 1, (qi - 1) / (I.q - 1));
  return prod_linear_over_delta_pow(I, 1) == sum;
}

bool verify_x1_specialization(const IdentityInstance& I)
{
  return thm81_lhs(I).at_x(1) == lemma82_lhs(I) && thm81_rhs(I).at_x(1) == lemma82_rhs(I);
}

ImageSizeCheck image_size_check(const IdentityInstance& I)
{
  const auto& F = *I.ctx;
  std::set<Elem> img;
  for (Elem z = 0; z < F.order(); ++z)
    img.insert(F.mul(F.add(z, 1), F.pow(z, static_cast<std::int64_t>(I.q - 1))));
  const Poly split = Poly::monomial(F, 1, F.order()) - Poly::x(F);
  ImageSizeCheck out;
  out.image_size = img.size();
  out.distinct_roots = static_cast<std::size_t>(poly_gcd(cor83_rhs(I), split).degree());
  return out;
}

}  // namespace ffperm
