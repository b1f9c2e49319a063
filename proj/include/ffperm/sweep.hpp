#pragma once

// Criterion-versus-oracle sweeps over coefficient tuples (a, b, c, d) in F_{q^2}^4.
//
// The oracle decides whether X^r A(X^{q-1}) permutes F_{q^2} through its restriction to
// mu_{q+1}: it needs gcd(r, q-1) = 1 and z -> z^r A(z)^{q-1} injective on mu_{q+1}. Writing
// mu_{q+1} = {zeta^j}, each point contributes the bit (r j + log_zeta A(zeta^j)^{q-1}) mod (q+1),
// and the map is injective exactly when all q+1 bits appear. A sample of tuples is also run
// through the direct F_{q^2} permutation test.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ffperm/families.hpp"
#include "ffperm/field.hpp"
#include "ffperm/kernels.hpp"

namespace ffperm {

struct SweepRow {
  Elem a, b, c, d;
  bool criterion, oracle;
};

struct SweepOptions {
  unsigned jobs = 1;
  // Upper bound on |F_{q^2}|^4 * (q+1) for exhaustive runs.
  std::uint64_t budget = 1ull << 28;
  // Every n-th tuple (by global index) also goes through the direct test; 0 disables.
  std::uint64_t direct_every = 4099;
  std::size_t max_recorded_mismatches = 16;
  kernels::Isa isa = kernels::detect_isa();
  // Called for every tuple in index order; forces a single worker.
  std::function<void(const SweepRow&)> on_row;
};

struct SweepReport {
  std::uint64_t q = 0, Q = 0, r = 0;
  std::string mode;  // "exhaustive" or "random"
  std::uint64_t seed = 0;
  std::uint64_t tuples = 0;
  std::uint64_t criterion_positive = 0;
  std::uint64_t oracle_positive = 0;
  std::uint64_t mismatches = 0;
  std::vector<SweepRow> mismatch_examples;  // first few in index order
  std::uint64_t direct_checked = 0;
  std::uint64_t direct_disagreements = 0;  // mask oracle vs direct test
  std::uint64_t digest = 0;  // order-independent sum of per-tuple hashes
  std::string isa;
  double seconds = 0;
};

// r = 0 selects canonical_r(q, Q), or for odd p the smallest r = Q+1 mod q+1.
std::uint64_t default_sweep_r(std::uint64_t q, std::uint64_t Q);

// Throws BudgetExceeded when the work estimate is over budget, SizeLimit when q^2 > 2^16.
SweepReport sweep_exhaustive(std::uint64_t q, std::uint64_t Q, std::uint64_t r, const SweepOptions& opt = {});
// Tuple i has coordinates drawn from splitmix64_at(seed, i), 16 bits each, reduced mod q^2.
SweepReport sweep_random(std::uint64_t q, std::uint64_t Q, std::uint64_t r, std::uint64_t n, std::uint64_t seed,
                         const SweepOptions& opt = {});

// Number of tuples over F_{q^2} (odd q) for which A has no root in mu_{q+1} and B/A permutes
// mu_{q+1}, counted pointwise. Also reports how many tuples were scanned.
struct OddCharScan {
  std::uint64_t scanned = 0;
  std::uint64_t root_free = 0;
  std::uint64_t permuting = 0;
};
OddCharScan odd_char_scan(std::uint64_t q, std::uint64_t Q);

}  // namespace ffperm
