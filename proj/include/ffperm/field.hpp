#pragma once

// Finite fields F_{p^N} in a polynomial basis. An element is the integer sum(digit_i * p^i)
// of its coefficient digits; 0 and 1 encode the field's zero and one.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ffperm {

using Elem = std::uint32_t;

struct FieldSpec {
  unsigned p = 2;
  unsigned N = 1;
  std::vector<unsigned> irred;  // length N+1, monic, low degree first
};

// Default defining polynomials, parsed from the shipped data file or a user override.
class FieldTable {
 public:
  static const FieldTable& builtin();
  static FieldTable parse(const std::string& text);
  static FieldTable load(const std::string& path);

  std::optional<std::vector<unsigned>> lookup(unsigned p, unsigned N) const;
  const std::vector<FieldSpec>& entries() const { return entries_; }

 private:
  std::vector<FieldSpec> entries_;
};

class FieldCtx {
 public:
  // Log/antilog tables are built up to this order; larger fields use basis arithmetic.
  static constexpr std::uint32_t kTableLimit = 1u << 20;
  static constexpr std::uint32_t kOrderLimit = 1u << 24;

  explicit FieldCtx(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  unsigned p() const { return spec_.p; }
  unsigned degree() const { return spec_.N; }
  std::uint32_t order() const { return order_; }
  Elem primitive() const { return primitive_; }
  bool has_tables() const { return !exp_.empty(); }

  Elem add(Elem a, Elem b) const
  {
    if (spec_.p == 2)
      return a ^ b;
    return add_odd(a, b);
  }
  Elem sub(Elem a, Elem b) const { return spec_.p == 2 ? (a ^ b) : add_odd(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const
  {
    if (a == 0 || b == 0)
      return 0;
    if (!exp_.empty())
      return exp_[log_[a] + log_[b]];
    return mul_basis(a, b);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;
  Elem from_int(std::int64_t n) const;

  // z^(p^e); e may exceed N.
  Elem frobenius(Elem z, std::uint64_t e) const;
  // Sum of z^(p^(m*i)) for 0 <= i < d/m; z must lie in F_{p^d}, m | d | N.
  Elem rel_trace(Elem z, unsigned d, unsigned m) const;
  bool in_subfield(Elem z, unsigned d) const;
  // All elements of F_{p^d} in increasing encoding order.
  std::vector<Elem> subfield(unsigned d) const;
  // The q+1 elements zeta^0, ..., zeta^q with zeta = primitive^((p^N-1)/(q+1)).
  std::vector<Elem> mu_subgroup(std::uint64_t q) const;

  // Discrete log base primitive(); requires tables and a != 0.
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t i) const;
  const std::uint32_t* exp_table() const { return exp_.data(); }
  const std::uint32_t* log_table() const { return log_.data(); }

  std::vector<unsigned> digits(Elem a) const;
  Elem encode(const std::vector<unsigned>& digits) const;
  std::string to_string(Elem a) const;  // omega-power notation "w^i" or "0"

 private:
  Elem add_odd(Elem a, Elem b) const;
  Elem add_digits(Elem a, Elem b) const;
  Elem mul_basis(Elem a, Elem b) const;
  Elem pow_basis(Elem a, std::uint64_t e) const;
  void build_tables();

  FieldSpec spec_;
  std::uint32_t order_ = 0;
  std::uint32_t irred_low_ = 0;  // p = 2: x^N reduction mask
  Elem primitive_ = 0;
  std::vector<std::uint32_t> exp_;   // size 2*(order-1)
  std::vector<std::uint32_t> log_;   // size order
  std::vector<std::uint32_t> zech_;  // odd p: log(1 + g^i), kNoLog when zero
  std::vector<std::uint64_t> frob_exp_;  // p^e mod (order-1)
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

// Builds F_{p^N}; irred defaults to the builtin table entry.
FieldPtr build_field(unsigned p, unsigned N, std::optional<std::vector<unsigned>> irred = std::nullopt);
FieldPtr build_field(unsigned p, unsigned N, const FieldTable& table);

// Process-wide cache of default-table fields; safe to call from several threads.
FieldPtr field(unsigned p, unsigned N);
// Entries of `table` take precedence over the builtin ones for fields requested through field()
// afterwards; nullopt restores the builtin table. Clears the cache.
void use_field_table(std::optional<FieldTable> table);

// Image of every element of `small` inside `big`, indexed by encoding. The generator x of
// `small` is sent to the smallest-encoded root of its defining polynomial in `big`.
std::vector<Elem> embedding(const FieldCtx& small, const FieldCtx& big);

}  // namespace ffperm
