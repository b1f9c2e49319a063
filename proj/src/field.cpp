#include "ffperm/field.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "ffperm/errors.hpp"
#include "ffperm/fp_poly.hpp"
#include "ffperm/numtheory.hpp"

namespace ffperm {

namespace {

const char kBuiltinTable[] =
#include "field_table_data.inc"
    ;

constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

}  // namespace

// ---------------------------------------------------------------------------
// FieldTable

FieldTable FieldTable::parse(const std::string& text)
{
  FieldTable t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    FieldSpec s;
    std::string coeffs;
    if (!(ls >> s.p))
      continue;
    if (!(ls >> s.N >> coeffs))
      throw Error(Errc::ParseError, "field table line " + std::to_string(lineno));
    std::istringstream cs(coeffs);
    std::string tok;
    while (std::getline(cs, tok, ',')) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw Error(Errc::ParseError, "field table line " + std::to_string(lineno) + ": bad coefficient");
      s.irred.push_back(static_cast<unsigned>(std::stoul(tok)));
    }
    if (s.irred.size() != s.N + 1)
      throw Error(Errc::ParseError, "field table line " + std::to_string(lineno) + ": expected N+1 coefficients");
    t.entries_.push_back(std::move(s));
  }
  return t;
}

FieldTable FieldTable::load(const std::string& path)
{
  std::ifstream f(path);
  if (!f)
    throw Error(Errc::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

const FieldTable& FieldTable::builtin()
{
  static const FieldTable table = parse(kBuiltinTable);
  return table;
}

std::optional<std::vector<unsigned>> FieldTable::lookup(unsigned p, unsigned N) const
{
  for (const auto& e : entries_)
    if (e.p == p && e.N == N)
      return e.irred;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx::FieldCtx(FieldSpec spec) : spec_(std::move(spec))
{
  const unsigned p = spec_.p;
  const unsigned N = spec_.N;
  if (!is_prime(p) || N < 1)
    throw Error(Errc::BadFieldSpec, "p must be prime and N >= 1");
  const std::uint64_t order = ipow(p, N);
  if (order > kOrderLimit)
    throw Error(Errc::BadFieldSpec, "field order exceeds 2^24");
  if (spec_.irred.size() != N + 1 || spec_.irred.back() != 1)
    throw Error(Errc::BadFieldSpec, "defining polynomial must be monic of degree N");
  fp::Poly f(spec_.irred.begin(), spec_.irred.end());
  for (auto c : f)
    if (c >= p)
      throw Error(Errc::BadFieldSpec, "coefficient out of range");
  if (!fp::is_irreducible(f, p))
    throw Error(Errc::NotIrreducible, "defining polynomial factors over F_" + std::to_string(p));
  order_ = static_cast<std::uint32_t>(order);
  if (p == 2)
    for (unsigned i = 0; i < N; ++i)
      irred_low_ |= spec_.irred[i] << i;

  frob_exp_.resize(N);
  for (unsigned e = 0; e < N; ++e)
    frob_exp_[e] = order_ == 2 ? 1 : powmod_u64(p, e, order_ - 1);

  // Smallest encoding of full multiplicative order.
  const std::uint32_t n1 = order_ - 1;
  const auto factors = prime_factors(n1);
  for (Elem z = 1; z < order_; ++z) {
    bool full = true;
    for (auto r : factors)
      if (pow_basis(z, n1 / r) == 1) {
        full = false;
        break;
      }
    if (full) {
      primitive_ = z;
      break;
    }
  }
  if (order_ <= kTableLimit)
    build_tables();
}

void FieldCtx::build_tables()
{
  const std::uint32_t n1 = order_ - 1;
  exp_.assign(2 * std::size_t(n1) + 1, 0);
  log_.assign(order_, kNoLog);
  Elem x = 1;
  for (std::uint32_t i = 0; i < n1; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = mul_basis(x, primitive_);
  }
  for (std::uint32_t i = n1; i < exp_.size(); ++i)
    exp_[i] = exp_[i - n1];
  if (spec_.p != 2) {
    zech_.assign(n1, kNoLog);
    for (std::uint32_t i = 0; i < n1; ++i) {
      Elem s = add_digits(1, exp_[i]);
      zech_[i] = s == 0 ? kNoLog : log_[s];
    }
  }
}

Elem FieldCtx::add_digits(Elem a, Elem b) const
{
  const unsigned p = spec_.p;
  Elem r = 0;
  Elem place = 1;
  while (a != 0 || b != 0) {
    r += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return r;
}

Elem FieldCtx::add_odd(Elem a, Elem b) const
{
  if (a == 0)
    return b;
  if (b == 0)
    return a;
  if (zech_.empty())
    return add_digits(a, b);
  const std::uint32_t n1 = order_ - 1;
  const std::uint32_t la = log_[a];
  std::uint32_t d = log_[b] + n1 - la;
  if (d >= n1)
    d -= n1;
  const std::uint32_t z = zech_[d];
  if (z == kNoLog)
    return 0;
  return exp_[la + z];
}

Elem FieldCtx::neg(Elem a) const
{
  if (spec_.p == 2 || a == 0)
    return a;
  const unsigned p = spec_.p;
  Elem r = 0;
  Elem place = 1;
  while (a != 0) {
    r += ((p - a % p) % p) * place;
    a /= p;
    place *= p;
  }
  return r;
}

Elem FieldCtx::mul_basis(Elem a, Elem b) const
{
  if (a == 0 || b == 0)
    return 0;
  const unsigned N = spec_.N;
  if (spec_.p == 2) {
    std::uint64_t prod = 0;
    for (unsigned i = 0; i < N; ++i)
      if ((b >> i) & 1)
        prod ^= std::uint64_t(a) << i;
    for (int i = 2 * static_cast<int>(N) - 2; i >= static_cast<int>(N); --i)
      if ((prod >> i) & 1)
        prod ^= (std::uint64_t(irred_low_) | (std::uint64_t(1) << N)) << (i - N);
    return static_cast<Elem>(prod);
  }
  const unsigned p = spec_.p;
  auto da = digits(a);
  auto db = digits(b);
  std::vector<std::uint64_t> prod(2 * N - 1, 0);
  for (unsigned i = 0; i < N; ++i)
    if (da[i])
      for (unsigned j = 0; j < N; ++j)
        prod[i + j] += std::uint64_t(da[i]) * db[j];
  for (auto& c : prod)
    c %= p;
  for (int i = 2 * static_cast<int>(N) - 2; i >= static_cast<int>(N); --i) {
    const std::uint64_t c = prod[i];
    if (c == 0)
      continue;
    // x^N = -sum irred_j x^j
    for (unsigned j = 0; j < N; ++j)
      prod[i - N + j] = (prod[i - N + j] + (p - c) * spec_.irred[j]) % p;
    prod[i] = 0;
  }
  std::vector<unsigned> out(N);
  for (unsigned i = 0; i < N; ++i)
    out[i] = static_cast<unsigned>(prod[i]);
  return encode(out);
}

Elem FieldCtx::pow_basis(Elem a, std::uint64_t e) const
{
  Elem r = 1;
  while (e > 0) {
    if (e & 1)
      r = mul_basis(r, a);
    a = mul_basis(a, a);
    e >>= 1;
  }
  return r;
}

Elem FieldCtx::inv(Elem a) const
{
  if (a == 0)
    throw Error(Errc::DivisionByZero, "inverse of zero");
  const std::uint32_t n1 = order_ - 1;
  if (!exp_.empty())
    return exp_[(n1 - log_[a]) % n1];
  return pow_basis(a, n1 - 1);
}

Elem FieldCtx::pow(Elem a, std::int64_t e) const
{
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  if (e == 0)
    return 1;
  if (a == 0)
    return 0;
  const std::uint32_t n1 = order_ - 1;
  const std::uint64_t r = static_cast<std::uint64_t>(e) % n1;
  if (!exp_.empty())
    return exp_[mulmod_u64(log_[a], r, n1)];
  return pow_basis(a, r == 0 ? n1 : r);
}

Elem FieldCtx::from_int(std::int64_t n) const
{
  return static_cast<Elem>(mod_floor(n, spec_.p));
}

Elem FieldCtx::frobenius(Elem z, std::uint64_t e) const
{
  if (z == 0)
    return 0;
  e %= spec_.N;
  if (e == 0)
    return z;
  const std::uint32_t n1 = order_ - 1;
  if (!exp_.empty())
    return exp_[mulmod_u64(log_[z], frob_exp_[e], n1)];
  return pow_basis(z, ipow(spec_.p, static_cast<unsigned>(e)));
}

bool FieldCtx::in_subfield(Elem z, unsigned d) const
{
  return frobenius(z, d) == z;
}

Elem FieldCtx::rel_trace(Elem z, unsigned d, unsigned m) const
{
  if (m == 0 || d == 0 || d % m != 0 || spec_.N % d != 0)
    throw Error(Errc::BadTower, "need m | d | N");
  if (!in_subfield(z, d))
    throw Error(Errc::NotInSubfield, "element not in F_{p^" + std::to_string(d) + "}");
  Elem s = 0;
  for (unsigned i = 0; i < d / m; ++i)
    s = add(s, frobenius(z, std::uint64_t(m) * i));
  return s;
}

std::vector<Elem> FieldCtx::subfield(unsigned d) const
{
  if (d == 0 || spec_.N % d != 0)
    throw Error(Errc::BadTower, "subfield degree must divide N");
  std::vector<Elem> out;
  if (d == spec_.N) {
    out.resize(order_);
    for (Elem z = 0; z < order_; ++z)
      out[z] = z;
    return out;
  }
  const std::uint32_t n1 = order_ - 1;
  const std::uint64_t sub = ipow(spec_.p, d) - 1;
  const std::uint64_t step = n1 / sub;
  const Elem g = pow(primitive_, static_cast<std::int64_t>(step));
  out.push_back(0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < sub; ++i) {
    out.push_back(x);
    x = mul(x, g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> FieldCtx::mu_subgroup(std::uint64_t q) const
{
  const std::uint32_t n1 = order_ - 1;
  if (n1 % (q + 1) != 0)
    throw Error(Errc::BadOrder, "q+1 does not divide p^N-1");
  const Elem zeta = pow(primitive_, static_cast<std::int64_t>(n1 / (q + 1)));
  std::vector<Elem> out;
  out.reserve(q + 1);
  Elem x = 1;
  for (std::uint64_t i = 0; i <= q; ++i) {
    out.push_back(x);
    x = mul(x, zeta);
  }
  return out;
}

std::uint32_t FieldCtx::log(Elem a) const
{
  if (a == 0)
    throw Error(Errc::DivisionByZero, "log of zero");
  if (exp_.empty())
    throw Error(Errc::SizeLimit, "no log tables for this field");
  return log_[a];
}

Elem FieldCtx::exp(std::uint64_t i) const
{
  const std::uint32_t n1 = order_ - 1;
  if (!exp_.empty())
    return exp_[i % n1];
  return pow_basis(primitive_, i % n1);
}

std::vector<unsigned> FieldCtx::digits(Elem a) const
{
  std::vector<unsigned> d(spec_.N, 0);
  for (unsigned i = 0; i < spec_.N; ++i) {
    d[i] = a % spec_.p;
    a /= spec_.p;
  }
  return d;
}

Elem FieldCtx::encode(const std::vector<unsigned>& d) const
{
  Elem r = 0;
  for (std::size_t i = d.size(); i-- > 0;)
    r = r * spec_.p + d[i];
  return r;
}

std::string FieldCtx::to_string(Elem a) const
{
  if (a == 0)
    return "0";
  if (a == 1)
    return "1";
  if (exp_.empty())
    return std::to_string(a);
  const auto l = log_[a];
  return l == 1 ? "w" : "w^" + std::to_string(l);
}

// ---------------------------------------------------------------------------

FieldPtr build_field(unsigned p, unsigned N, std::optional<std::vector<unsigned>> irred)
{
  if (!is_prime(p) || N < 1)
    throw Error(Errc::BadFieldSpec, "p must be prime and N >= 1");
  if (!irred) {
    irred = FieldTable::builtin().lookup(p, N);
    if (!irred)
      throw Error(Errc::NoTableEntry, "no default polynomial for p=" + std::to_string(p) +
                                          " N=" + std::to_string(N));
  }
  return std::make_shared<const FieldCtx>(FieldSpec{p, N, *irred});
}

FieldPtr build_field(unsigned p, unsigned N, const FieldTable& table)
{
  auto irred = table.lookup(p, N);
  if (!irred)
    return build_field(p, N);
  return build_field(p, N, irred);
}

namespace {

struct FieldCache {
  std::mutex mu;
  std::map<std::pair<unsigned, unsigned>, FieldPtr> fields;
  std::optional<FieldTable> table;
};

FieldCache& field_cache()
{
  static FieldCache c;
  return c;
}

}  // namespace

FieldPtr field(unsigned p, unsigned N)
{
  auto& c = field_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto& slot = c.fields[{p, N}];
  if (!slot)
    slot = c.table ? build_field(p, N, *c.table) : build_field(p, N);
  return slot;
}

void use_field_table(std::optional<FieldTable> table)
{
  auto& c = field_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  c.fields.clear();
  c.table = std::move(table);
}

std::vector<Elem> embedding(const FieldCtx& small, const FieldCtx& big)
{
  if (small.p() != big.p() || big.degree() % small.degree() != 0)
    throw Error(Errc::BadTower, "field does not embed");
  const auto& irred = small.spec().irred;
  auto eval = [&](Elem x) {
    Elem acc = 0;
    for (std::size_t i = irred.size(); i-- > 0;)
      acc = big.add(big.mul(acc, x), big.from_int(irred[i]));
    return acc;
  };
  Elem root = 0;
  bool found = false;
  for (Elem x = 0; x < big.order(); ++x)
    if (eval(x) == 0) {
      root = x;
      found = true;
      break;
    }
  if (!found)
    throw Error(Errc::Internal, "defining polynomial has no root in the larger field");
  std::vector<Elem> image(small.order());
  for (Elem a = 0; a < small.order(); ++a) {
    auto d = small.digits(a);
    Elem acc = 0;
    for (std::size_t i = d.size(); i-- > 0;)
      acc = big.add(big.mul(acc, root), big.from_int(d[i]));
    image[a] = acc;
  }
  return image;
}

}  // namespace ffperm
