#include "ffperm/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "ffperm/criteria.hpp"
#include "ffperm/errors.hpp"
#include "ffperm/numtheory.hpp"
#include "ffperm/oracle.hpp"
#include "ffperm/rng.hpp"

namespace ffperm {

namespace {

constexpr std::uint32_t kNoPos = 0xFFFFFFFFu;

struct Setup {
  FieldPtr F;
  std::uint64_t q = 0, Q = 0, r = 0;
  std::uint32_t N = 0;     // |F_{q^2}|
  std::size_t npts = 0;    // q + 1
  bool gcd_ok = false;
  bool use_xor = false;    // characteristic 2 and q + 1 <= 32
  std::uint32_t full = 0;  // all q+1 bits
  std::vector<Elem> zQ1, zQ, z;
  std::vector<std::uint32_t> pos;   // pos[j*N + y] = (r j + log_zeta y^{q-1}) mod (q+1)
  std::vector<std::uint32_t> bits;  // 1 << pos, 0 for y = 0
};

Setup make_setup(std::uint64_t q, std::uint64_t Q, std::uint64_t r)
{
  const auto pq = prime_power(q), pQ = prime_power(Q);
  if (!pq || !pQ || pq->first != pQ->first)
    throw Error(Errc::BadFieldSpec, "q and Q must be powers of one prime");
  if (q * q > (1u << 16))
    throw Error(Errc::SizeLimit, "sweeps need q^2 <= 2^16");
  if (r % (q + 1) != (Q + 1) % (q + 1))
    throw Error(Errc::BadResidue, "r is not congruent to Q+1 mod q+1");
  Setup s;
  s.F = field(static_cast<unsigned>(pq->first), 2 * pq->second);
  const auto& F = *s.F;
  s.q = q;
  s.Q = Q;
  s.r = r;
  s.N = F.order();
  s.npts = q + 1;
  s.gcd_ok = gcd_u64(r, q - 1) == 1;
  s.use_xor = F.p() == 2 && s.npts <= 32;
  s.full = s.npts >= 32 ? 0xFFFFFFFFu : (1u << s.npts) - 1;

  const auto mu = F.mu_subgroup(q);
  std::vector<std::uint32_t> idx(s.N, kNoPos);
  for (std::size_t j = 0; j < mu.size(); ++j)
    idx[mu[j]] = static_cast<std::uint32_t>(j);
  std::vector<std::uint32_t> P(s.N, kNoPos);
  for (Elem y = 1; y < s.N; ++y)
    P[y] = idx[F.pow(y, static_cast<std::int64_t>(q - 1))];
  s.pos.assign(s.npts * s.N, kNoPos);
  const std::uint64_t rr = r % (q + 1);
  for (std::size_t j = 0; j < s.npts; ++j)
    for (Elem y = 1; y < s.N; ++y)
      s.pos[j * s.N + y] = static_cast<std::uint32_t>((rr * j + P[y]) % (q + 1));
  if (s.use_xor) {
    s.bits.resize(s.pos.size());
    for (std::size_t i = 0; i < s.pos.size(); ++i)
      s.bits[i] = s.pos[i] == kNoPos ? 0 : (1u << s.pos[i]);
  }
  for (Elem zj : mu) {
    const Elem zq = F.pow(zj, static_cast<std::int64_t>(Q % (q + 1)));
    s.zQ.push_back(zq);
    s.zQ1.push_back(F.mul(zq, zj));
    s.z.push_back(zj);
  }
  return s;
}

std::uint64_t tuple_hash(PackedTuple t, bool crit, bool orac)
{
  return splitmix64_mix(t ^ (std::uint64_t(1 + crit + 2 * orac) * 0x9E3779B97F4A7C15ull));
}

struct Worker {
  const Setup& s;
  const SweepOptions& opt;
  MainTheoremEvaluator ev;
  std::vector<std::uint32_t> partial, masks;
  std::vector<std::uint8_t> seen;
  SweepReport part;

  Worker(const Setup& st, const SweepOptions& o)
      : s(st), opt(o), ev(st.F, st.q, st.Q, st.r), partial(st.npts), masks(st.N), seen(st.npts)
  {
  }

  void set_abc(Elem a, Elem b, Elem c)
  {
    const auto& F = *s.F;
    for (std::size_t j = 0; j < s.npts; ++j)
      partial[j] = F.add(F.add(F.mul(a, s.zQ1[j]), F.mul(b, s.zQ[j])), F.mul(c, s.z[j]));
  }

  // Injectivity on mu via the position tables, for any characteristic.
  bool generic_oracle(Elem d)
  {
    const auto& F = *s.F;
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < s.npts; ++j) {
      const std::uint32_t p = s.pos[j * s.N + F.add(partial[j], d)];
      if (p == kNoPos || seen[p])
        return false;
      seen[p] = 1;
    }
    return true;
  }

  void fill_masks(std::uint32_t d0, std::size_t n)
  {
    kernels::mu_mask_xor(opt.isa, s.bits.data(), s.N, partial.data(), s.npts, d0, n, masks.data());
  }

  bool direct(Elem a, Elem b, Elem c, Elem d) const
  {
    const auto& F = *s.F;
    const Poly A = Poly::from_terms(F, {{s.Q + 1, a}, {s.Q, b}, {1, c}, {0, d}});
    if (A.is_zero())
      return false;
    return is_perm_fq2(F, sparse_from_A(A, s.r, s.q), s.q).is_permutation;
  }

  void record(std::uint64_t index, Elem a, Elem b, Elem c, Elem d, bool orac)
  {
    const bool crit = ev.evaluate(a, b, c, d) == MainTheoremEvaluator::kAll;
    ++part.tuples;
    part.criterion_positive += crit;
    part.oracle_positive += orac;
    part.digest += tuple_hash(pack_tuple(a, b, c, d), crit, orac);
    if (crit != orac) {
      ++part.mismatches;
      if (part.mismatch_examples.size() < opt.max_recorded_mismatches)
        part.mismatch_examples.push_back({a, b, c, d, crit, orac});
    }
    if (opt.direct_every && index % opt.direct_every == 0) {
      ++part.direct_checked;
      if (direct(a, b, c, d) != orac)
        ++part.direct_disagreements;
    }
    if (opt.on_row)
      opt.on_row({a, b, c, d, crit, orac});
  }

  void run_exhaustive(Elem a_lo, Elem a_hi)
  {
    const std::uint64_t N = s.N;
    for (Elem a = a_lo; a < a_hi; ++a)
      for (Elem b = 0; b < N; ++b)
        for (Elem c = 0; c < N; ++c) {
          set_abc(a, b, c);
          if (s.use_xor)
            fill_masks(0, N);
          const std::uint64_t base = ((a * N + b) * N + c) * N;
          for (Elem d = 0; d < N; ++d) {
            const bool m = s.use_xor ? masks[d] == s.full : generic_oracle(d);
            record(base + d, a, b, c, d, s.gcd_ok && m);
          }
        }
  }

  void run_random(std::uint64_t seed, std::uint64_t lo, std::uint64_t hi)
  {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::uint64_t v = splitmix64_at(seed, i);
      const Elem a = Elem((v & 0xFFFF) % s.N), b = Elem((v >> 16 & 0xFFFF) % s.N);
      const Elem c = Elem((v >> 32 & 0xFFFF) % s.N), d = Elem((v >> 48) % s.N);
      set_abc(a, b, c);
      bool m;
      if (s.use_xor) {
        fill_masks(d, 1);
        m = masks[0] == s.full;
      } else {
        m = generic_oracle(d);
      }
      record(i, a, b, c, d, s.gcd_ok && m);
    }
  }
};

void merge(SweepReport& into, const SweepReport& p, std::size_t max_examples)
{
  into.tuples += p.tuples;
  into.criterion_positive += p.criterion_positive;
  into.oracle_positive += p.oracle_positive;
  into.mismatches += p.mismatches;
  into.direct_checked += p.direct_checked;
  into.direct_disagreements += p.direct_disagreements;
  into.digest += p.digest;
  for (const auto& row : p.mismatch_examples)
    if (into.mismatch_examples.size() < max_examples)
      into.mismatch_examples.push_back(row);
}

// Runs fn(worker, lo, hi) over [0, total) split into contiguous ranges.
template <class Fn>
SweepReport run_parallel(const Setup& s, const SweepOptions& opt, std::uint64_t total, Fn fn)
{
  if (opt.isa == kernels::Isa::Avx2 && !kernels::isa_available(kernels::Isa::Avx2))
    throw Error(Errc::Internal, "AVX2 kernel requested on a CPU without AVX2");
  unsigned jobs = opt.on_row ? 1u : std::max(1u, opt.jobs);
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(total, 1)));
  std::vector<Worker> workers;
  workers.reserve(jobs);
  for (unsigned i = 0; i < jobs; ++i)
    workers.emplace_back(s, opt);
  auto bound = [&](unsigned i) { return total * i / jobs; };
  if (jobs == 1) {
    fn(workers[0], 0, total);
  } else {
    std::vector<std::thread> th;
    std::vector<std::exception_ptr> errs(jobs);
    for (unsigned i = 0; i < jobs; ++i)
      th.emplace_back([&, i] {
        try {
          fn(workers[i], bound(i), bound(i + 1));
        } catch (...) {
          errs[i] = std::current_exception();
        }
      });
    for (auto& t : th)
      t.join();
    for (auto& e : errs)
      if (e)
        std::rethrow_exception(e);
  }
  SweepReport rep;
  rep.q = s.q;
  rep.Q = s.Q;
  rep.r = s.r;
  rep.isa = s.use_xor ? kernels::isa_name(opt.isa) : "generic";
  for (auto& w : workers)
    merge(rep, w.part, opt.max_recorded_mismatches);
  return rep;
}

double since(std::chrono::steady_clock::time_point t0)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::uint64_t default_sweep_r(std::uint64_t q, std::uint64_t Q)
{
  if (auto r = canonical_r(q, Q))
    return *r;
  const std::uint64_t r = (Q + 1) % (q + 1);
  return r == 0 ? q + 1 : r;
}

SweepReport sweep_exhaustive(std::uint64_t q, std::uint64_t Q, std::uint64_t r, const SweepOptions& opt)
{
  const auto t0 = std::chrono::steady_clock::now();
  if (r == 0)
    r = default_sweep_r(q, Q);
  if (q * q > (1u << 16))
    throw Error(Errc::SizeLimit, "sweeps need q^2 <= 2^16");
  const std::uint64_t N = q * q;
  const std::uint64_t tuples = N * N * N * N;
  if (tuples > opt.budget / (q + 1))
    throw Error(Errc::BudgetExceeded, "exhaustive sweep exceeds the work budget");
  const Setup s = make_setup(q, Q, r);
  auto rep = run_parallel(s, opt, N, [](Worker& w, std::uint64_t lo, std::uint64_t hi) {
    w.run_exhaustive(static_cast<Elem>(lo), static_cast<Elem>(hi));
  });
  rep.mode = "exhaustive";
  rep.seconds = since(t0);
  return rep;
}

SweepReport sweep_random(std::uint64_t q, std::uint64_t Q, std::uint64_t r, std::uint64_t n, std::uint64_t seed,
                         const SweepOptions& opt)
{
  const auto t0 = std::chrono::steady_clock::now();
  if (r == 0)
    r = default_sweep_r(q, Q);
  const Setup s = make_setup(q, Q, r);
  auto rep = run_parallel(s, opt, n, [seed](Worker& w, std::uint64_t lo, std::uint64_t hi) {
    w.run_random(seed, lo, hi);
  });
  rep.mode = "random";
  rep.seed = seed;
  rep.seconds = since(t0);
  return rep;
}

OddCharScan odd_char_scan(std::uint64_t q, std::uint64_t Q)
{
  const auto pq = prime_power(q), pQ = prime_power(Q);
  if (!pq || !pQ || pq->first != pQ->first || pq->first == 2)
    throw Error(Errc::BadFieldSpec, "need odd q and Q, powers of one prime");
  if (q * q > 256)
    throw Error(Errc::SizeLimit, "odd-characteristic scan limited to q^2 <= 256");
  const FieldPtr Fp = field(static_cast<unsigned>(pq->first), 2 * pq->second);
  const auto& F = *Fp;
  const auto mu = F.mu_subgroup(q);
  const unsigned k = pq->second;
  const std::uint64_t eQ = Q % (q + 1);
  std::vector<Elem> zQ1, zQ;
  for (Elem z : mu) {
    zQ.push_back(F.pow(z, static_cast<std::int64_t>(eQ)));
    zQ1.push_back(F.mul(zQ.back(), z));
  }
  OddCharScan out;
  const Elem N = F.order();
  std::vector<Elem> vals(mu.size());
  for (Elem a = 0; a < N; ++a)
    for (Elem b = 0; b < N; ++b)
      for (Elem c = 0; c < N; ++c)
        for (Elem d = 0; d < N; ++d) {
          ++out.scanned;
          const Elem aq = F.frobenius(a, k), bq = F.frobenius(b, k), cq = F.frobenius(c, k), dq = F.frobenius(d, k);
          bool ok = true;
          for (std::size_t j = 0; j < mu.size() && ok; ++j) {
            const Elem A = F.add(F.add(F.mul(a, zQ1[j]), F.mul(b, zQ[j])), F.add(F.mul(c, mu[j]), d));
            if (A == 0) {
              ok = false;
              break;
            }
            const Elem B = F.add(F.add(F.mul(dq, zQ1[j]), F.mul(cq, zQ[j])), F.add(F.mul(bq, mu[j]), aq));
            vals[j] = F.div(B, A);
            ok = F.pow(vals[j], static_cast<std::int64_t>(q + 1)) == 1;
          }
          if (!ok)
            continue;  // a root of A on mu, or (impossible for root-free A) a value off mu
          ++out.root_free;
          std::vector<Elem> sorted(vals);
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
            ++out.permuting;
        }
  return out;
}

}  // namespace ffperm
