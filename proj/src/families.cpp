#include "ffperm/families.hpp"

#include <algorithm>

#include "ffperm/errors.hpp"
#include "ffperm/numtheory.hpp"

namespace ffperm {

namespace {

struct Gates {
  unsigned k, ell;
  bool le, ne, ge;
};

Gates gates(const FieldCtx& F, std::uint64_t q, std::uint64_t Q)
{
  auto pq = prime_power(q), pQ = prime_power(Q);
  if (!pq || !pQ || pq->first != F.p() || pQ->first != F.p())
    throw Error(Errc::ConstraintViolated, "q and Q must be powers of the characteristic");
  Gates g{pq->second, pQ->second, false, false, false};
  if (F.degree() % (2 * g.k) != 0)
    throw Error(Errc::BadTower, "ambient field does not contain F_{q^2}");
  const unsigned ok = ord2(g.k), ol = ord2(g.ell);
  g.le = ok <= ol;
  g.ne = ok != ol;
  g.ge = ok >= ol;
  return g;
}

bool in_mu(const FieldCtx& F, Elem x, std::uint64_t q)
{
  return x != 0 && F.pow(x, static_cast<std::int64_t>(q + 1)) == 1;
}

void sort_unique(std::vector<PackedTuple>& v)
{
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

const char* family_case_name(FamilyCase c)
{
  switch (c) {
    case FamilyCase::One: return "1";
    case FamilyCase::Two: return "2";
    case FamilyCase::Three: return "3";
    case FamilyCase::Mono2: return "mono_2";
    case FamilyCase::Mono3: return "mono_3";
  }
  return "?";
}

Poly gen_A0(const FieldCtx& F, FamilyCase c, Elem alpha, Elem beta, std::uint64_t q, std::uint64_t Q)
{
  const Gates g = gates(F, q, Q);
  const std::size_t Qd = Q;
  switch (c) {
    case FamilyCase::Mono2:
      if (!g.ne)
        throw Error(Errc::ConstraintViolated, "X^{Q+1} needs ord2(k) != ord2(l)");
      return Poly::monomial(F, 1, Qd + 1);
    case FamilyCase::Mono3:
      if (!g.ge)
        throw Error(Errc::ConstraintViolated, "X^Q needs ord2(k) >= ord2(l)");
      return Poly::monomial(F, 1, Qd);
    default:
      break;
  }
  for (Elem x : {alpha, beta})
    if (x >= F.order() || !F.in_subfield(x, 2 * g.k))
      throw Error(Errc::ConstraintViolated, "parameters must lie in F_{q^2}");

  auto fq = [&](Elem x) { return F.frobenius(x, g.k); };
  auto fQ = [&](Elem x) { return F.frobenius(x, g.ell); };
  const Elem aQ = fQ(alpha), aq = fq(alpha);
  const Elem aQ1 = F.mul(aQ, alpha);         // alpha^{Q+1}
  const Elem aqQ = fq(aQ);                   // alpha^{qQ}
  const Elem aqQ1 = F.mul(aqQ, alpha);       // alpha^{qQ+1}
  const Elem aqQq = fq(aQ1);                 // alpha^{qQ+q}
  const Elem aqpQ = F.mul(aq, aQ);           // alpha^{q+Q}

  std::vector<std::pair<std::size_t, Elem>> t;
  switch (c) {
    case FamilyCase::One:
      if (!g.le)
        throw Error(Errc::ConstraintViolated, "case 1 needs ord2(k) <= ord2(l)");
      if (F.in_subfield(alpha, g.k) || F.in_subfield(beta, g.k))
        throw Error(Errc::ConstraintViolated, "case 1 needs alpha, beta outside F_q");
      t = {{Qd + 1, F.add(aQ1, beta)}, {Qd, F.add(aqpQ, beta)}, {1, F.add(aqQ1, beta)}, {0, F.add(aqQq, beta)}};
      break;
    case FamilyCase::Two:
      if (!g.ne)
        throw Error(Errc::ConstraintViolated, "case 2 needs ord2(k) != ord2(l)");
      if (in_mu(F, alpha, q) || in_mu(F, beta, q))
        throw Error(Errc::ConstraintViolated, "case 2 needs alpha, beta outside mu_{q+1}");
      t = {{Qd + 1, F.add(aqQq, beta)},
           {Qd, F.add(aqQ, F.mul(alpha, beta))},
           {1, F.add(aq, F.mul(aQ, beta))},
           {0, F.add(1, F.mul(aQ1, beta))}};
      break;
    case FamilyCase::Three:
      if (!g.ge)
        throw Error(Errc::ConstraintViolated, "case 3 needs ord2(k) >= ord2(l)");
      if (in_mu(F, alpha, q) || in_mu(F, beta, q))
        throw Error(Errc::ConstraintViolated, "case 3 needs alpha, beta outside mu_{q+1}");
      t = {{Qd + 1, F.add(aqQ, F.mul(aq, beta))},
           {Qd, F.add(aqQ1, beta)},
           {1, F.add(1, F.mul(aqpQ, beta))},
           {0, F.add(alpha, F.mul(aQ, beta))}};
      break;
    default:
      break;
  }
  Poly A0 = Poly::from_terms(F, t);
  if (A0.is_zero())
    throw Error(Errc::ConstraintViolated, "parameters give A_0 = 0");
  return A0;
}

std::vector<PackedTuple> orbit_expand(const Poly& A0, std::uint64_t q, std::uint64_t Q)
{
  const auto& F = A0.ctx();
  if (A0.is_zero())
    throw Error(Errc::ZeroPolynomial, "A_0 is zero");
  if (F.order() > (1u << 16))
    throw Error(Errc::SizeLimit, "packed tuples need a field of order <= 2^16");
  for (int i = 0; i <= A0.degree(); ++i)
    if (A0.coeff(i) != 0 && i != 0 && i != 1 && static_cast<std::uint64_t>(i) != Q &&
        static_cast<std::uint64_t>(i) != Q + 1)
      throw Error(Errc::ConstraintViolated, "A_0 has a term outside X^{Q+1}, X^Q, X, 1");
  const Elem a0 = A0.coeff(Q + 1), b0 = A0.coeff(Q), c0 = A0.coeff(1), d0 = A0.coeff(0);
  auto pq = prime_power(q);
  const auto units = F.subfield(2 * pq->second);
  const auto mu = F.mu_subgroup(q);
  const auto eQ = static_cast<std::int64_t>(Q % (q + 1));
  std::vector<PackedTuple> out;
  out.reserve(mu.size() * units.size());
  for (Elem g : mu) {
    const Elem gQ = F.pow(g, eQ);
    const Elem a1 = F.mul(a0, F.mul(gQ, g)), b1 = F.mul(b0, gQ), c1 = F.mul(c0, g);
    for (Elem dl : units)
      if (dl != 0)
        out.push_back(pack_tuple(F.mul(a1, dl), F.mul(b1, dl), F.mul(c1, dl), F.mul(d0, dl)));
  }
  sort_unique(out);
  return out;
}

FamilyEnumeration enumerate_families(const FieldCtx& F, std::uint64_t q, std::uint64_t Q, std::uint64_t r)
{
  FamilyEnumeration out;
  // For odd p, r = Q+1 (mod q+1) is even while q-1 is even, so no admissible r exists.
  if (F.p() != 2)
    return out;
  if (r % (q + 1) != (Q + 1) % (q + 1) || gcd_u64(r, q - 1) != 1)
    throw Error(Errc::BadR, "need r = Q+1 (mod q+1) and gcd(r, q-1) = 1");
  const Gates g = gates(F, q, Q);
  const auto fq2 = F.subfield(2 * g.k);
  std::vector<Elem> outside_fq, outside_mu;
  for (Elem x : fq2) {
    if (!F.in_subfield(x, g.k))
      outside_fq.push_back(x);
    if (!in_mu(F, x, q))
      outside_mu.push_back(x);
  }

  auto run = [&](FamilyCase c, const std::vector<Elem>& params) {
    std::vector<PackedTuple> acc;
    if (c == FamilyCase::Mono2 || c == FamilyCase::Mono3) {
      acc = orbit_expand(gen_A0(F, c, 0, 0, q, Q), q, Q);
    } else {
      // Orbits partition the tuples, so an A_0 already covered contributes nothing new.
      for (Elem al : params)
        for (Elem be : params) {
          const Poly A0 = gen_A0(F, c, al, be, q, Q);
          const PackedTuple key = pack_tuple(A0.coeff(Q + 1), A0.coeff(Q), A0.coeff(1), A0.coeff(0));
          if (std::binary_search(acc.begin(), acc.end(), key))
            continue;
          auto orb = orbit_expand(A0, q, Q);
          std::vector<PackedTuple> merged;
          merged.reserve(acc.size() + orb.size());
          std::set_union(acc.begin(), acc.end(), orb.begin(), orb.end(), std::back_inserter(merged));
          acc.swap(merged);
        }
    }
    out.case_counts[family_case_name(c)] = acc.size();
    std::vector<PackedTuple> merged;
    std::set_union(out.tuples.begin(), out.tuples.end(), acc.begin(), acc.end(), std::back_inserter(merged));
    out.tuples.swap(merged);
  };

  if (g.le)
    run(FamilyCase::One, outside_fq);
  if (g.ne) {
    run(FamilyCase::Two, outside_mu);
    run(FamilyCase::Mono2, {});
  }
  if (g.ge) {
    run(FamilyCase::Three, outside_mu);
    run(FamilyCase::Mono3, {});
  }
  return out;
}

}  // namespace ffperm
