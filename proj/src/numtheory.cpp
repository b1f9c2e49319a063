#include "ffperm/numtheory.hpp"

#include "ffperm/errors.hpp"

namespace ffperm {

const char* errc_name(Errc c)
{
  switch (c) {
  case Errc::NotIrreducible: return "NotIrreducible";
  case Errc::NoTableEntry: return "NoTableEntry";
  case Errc::BadFieldSpec: return "BadFieldSpec";
  case Errc::DivisionByZero: return "DivisionByZero";
  case Errc::NotInSubfield: return "NotInSubfield";
  case Errc::BadTower: return "BadTower";
  case Errc::BadOrder: return "BadOrder";
  case Errc::ZeroPolynomial: return "ZeroPolynomial";
  case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
  case Errc::BothZero: return "BothZero";
  case Errc::DegenerateMap: return "DegenerateMap";
  case Errc::SplitFailure: return "SplitFailure";
  case Errc::ConstantMap: return "ConstantMap";
  case Errc::DegreeTooHigh: return "DegreeTooHigh";
  case Errc::BetaNotInFqStar: return "BetaNotInFqStar";
  case Errc::ENonzeroViolated: return "ENonzeroViolated";
  case Errc::HypothesisViolated: return "HypothesisViolated";
  case Errc::BadResidue: return "BadResidue";
  case Errc::B2Violated: return "B2Violated";
  case Errc::MapNotStable: return "MapNotStable";
  case Errc::BadConjugators: return "BadConjugators";
  case Errc::RamMismatch: return "RamMismatch";
  case Errc::TableEntryFails: return "TableEntryFails";
  case Errc::ConstraintViolated: return "ConstraintViolated";
  case Errc::BadR: return "BadR";
  case Errc::NonExactDivision: return "NonExactDivision";
  case Errc::SizeLimit: return "SizeLimit";
  case Errc::NoAdmissibleExponent: return "NoAdmissibleExponent";
  case Errc::NoAdmissibleLambda: return "NoAdmissibleLambda";
  case Errc::BudgetExceeded: return "BudgetExceeded";
  case Errc::ParseError: return "ParseError";
  case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

unsigned ord2(std::uint64_t n)
{
  unsigned i = 0;
  while (n != 0 && (n & 1) == 0) {
    n >>= 1;
    ++i;
  }
  return i;
}

bool gcd_power_rule(unsigned i, unsigned j, char sign)
{
  if (sign == '+')
    return ord2(i) != ord2(j);
  return ord2(i) <= ord2(j);
}

std::uint64_t ipow(std::uint64_t base, unsigned e)
{
  std::uint64_t r = 1;
  while (e-- > 0)
    r *= base;
  return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b)
{
  return a / gcd_u64(a, b) * b;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q)
{
  if (q < 2)
    return std::nullopt;
  auto f = prime_factors(q);
  if (f.size() != 1)
    return std::nullopt;
  unsigned k = 0;
  while (q > 1) {
    q /= f[0];
    ++k;
  }
  return std::make_pair(static_cast<unsigned>(f[0]), k);
}

std::uint64_t mod_floor(std::int64_t x, std::uint64_t m)
{
  std::int64_t r = x % static_cast<std::int64_t>(m);
  if (r < 0)
    r += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
  if (m == 1)
    return 0;
  std::uint64_t r = 1;
  a %= m;
  while (e > 0) {
    if (e & 1)
      r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> canonical_r(std::uint64_t q, std::uint64_t Q)
{
  std::uint64_t r = (Q + 1) % (q + 1);
  if (r == 0)
    r = q + 1;
  const std::uint64_t limit = (q + 1) * (q - 1) + Q + 1;
  for (; r <= limit; r += q + 1)
    if (gcd_u64(r, q - 1) == 1)
      return r;
  return std::nullopt;
}

std::optional<std::uint64_t> smallest_congruence_solution(std::int64_t coef, std::int64_t target,
                                                          std::uint64_t m)
{
  const std::uint64_t c = mod_floor(coef, m);
  const std::uint64_t t = mod_floor(target, m);
  for (std::uint64_t u = 1; u <= m; ++u)
    if (mulmod_u64(u, c, m) == t)
      return u;
  return std::nullopt;
}

}  // namespace ffperm
