#include "ffperm/fp_poly.hpp"

#include "ffperm/numtheory.hpp"

namespace ffperm::fp {

namespace {

std::uint32_t inv_mod(std::uint32_t a, unsigned p)
{
  return static_cast<std::uint32_t>(powmod_u64(a, p - 2, p));
}

}  // namespace

void trim(Poly& a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

Poly mul(const Poly& a, const Poly& b, unsigned p)
{
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  trim(r);
  return r;
}

Poly mod(Poly a, const Poly& m, unsigned p)
{
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t linv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = std::uint64_t(a.back()) * linv % p;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, unsigned p)
{
  return mod(mul(a, b, p), m, p);
}

Poly powmod(Poly base, std::uint64_t e, const Poly& m, unsigned p)
{
  Poly r{1};
  r = mod(r, m, p);
  base = mod(base, m, p);
  while (e > 0) {
    if (e & 1)
      r = mulmod(r, base, m, p);
    base = mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly sub(const Poly& a, const Poly& b, unsigned p)
{
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint32_t x = i < a.size() ? a[i] : 0;
    const std::uint32_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

Poly gcd(Poly a, Poly b, unsigned p)
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint32_t linv = inv_mod(a.back(), p);
    for (auto& c : a)
      c = static_cast<std::uint32_t>(std::uint64_t(c) * linv % p);
  }
  return a;
}

Poly frobenius_x(unsigned d, const Poly& f, unsigned p)
{
  Poly x = mod(Poly{0, 1}, f, p);
  for (unsigned i = 0; i < d; ++i)
    x = powmod(x, p, f, p);
  return x;
}

bool is_irreducible(const Poly& f, unsigned p)
{
  Poly g = f;
  trim(g);
  if (g.size() < 2)
    return false;
  const unsigned n = static_cast<unsigned>(g.size() - 1);
  const Poly x = mod(Poly{0, 1}, g, p);
  if (frobenius_x(n, g, p) != x)
    return false;
  for (auto r : prime_factors(n)) {
    Poly t = sub(frobenius_x(n / static_cast<unsigned>(r), g, p), Poly{0, 1}, p);
    if (gcd(g, t, p).size() != 1)
      return false;
  }
  return true;
}

bool is_primitive(const Poly& f, unsigned p)
{
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  const std::uint64_t order = ipow(p, n) - 1;
  const Poly one{1};
  if (powmod(Poly{0, 1}, order, f, p) != mod(one, f, p))
    return false;
  for (auto r : prime_factors(order))
    if (powmod(Poly{0, 1}, order / r, f, p) == mod(one, f, p))
      return false;
  return true;
}

}  // namespace ffperm::fp
