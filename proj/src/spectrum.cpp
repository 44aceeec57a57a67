#include "ringlab/spectrum.hpp"

#include <algorithm>

#include "ringlab/errors.hpp"
#include "ringlab/finite_ops.hpp"
#include "ringlab/zalgebra_ops.hpp"

namespace ringlab {

std::string to_string(PrimeCertificate c) {
  return c == PrimeCertificate::finite_scan ? "finite-scan" : "quotient-domain-test";
}

Verdict is_prime(const Ideal& I) {
  const RingHandle& R = I.ring();
  if (R.is_algebra()) return Verdict::of(zal::is_prime(R.algebra(), I.lattice()));
  return Verdict::of(fin::is_prime(R.table(), I.members()));
}

Verdict is_maximal(const Ideal& I) {
  const RingHandle& R = I.ring();
  if (R.is_algebra()) return Verdict::of(zal::is_maximal(R.algebra(), I.lattice()));
  return Verdict::of(fin::is_maximal(R.table(), I.members()));
}

Verdict is_primary_ideal(const Ideal& I) {
  const RingHandle& R = I.ring();
  if (I.is_whole()) return Verdict::no();
  if (R.is_algebra()) return Verdict::of(zal::is_primary_ideal(R.algebra(), I.lattice()));
  FiniteRingPtr q = finite::quotient(R.table_ptr(), I.members());
  return Verdict::of(!fin::primary_refuter(*q));
}

std::vector<PrimeIdeal> minimal_primes(const RingHandle& R) {
  std::vector<PrimeIdeal> out;
  if (R.is_algebra()) {
    for (const Lattice& P : zal::minimal_primes(R.algebra()))
      out.push_back({Ideal(R, P), PrimeCertificate::quotient_domain_test});
  } else {
    for (IdxSet& P : fin::minimal_primes(R.table()))
      out.push_back({Ideal(R, std::move(P)), PrimeCertificate::finite_scan});
  }
  std::sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) { return a.ideal < b.ideal; });
  return out;
}

std::vector<Ideal> maximal_ideals(const RingHandle& R) {
  std::vector<Ideal> out;
  if (R.is_algebra()) {
    const ZAlgebra& A = R.algebra();
    if (!A.is_finite()) throw InfiniteRing(R.name() + " has infinitely many maximal ideals");
    for (Lattice& m : zal::maximal_over(A, A.relations())) out.push_back(Ideal(R, std::move(m)));
  } else {
    // In a finite ring every prime is maximal and minimal.
    for (IdxSet& m : fin::minimal_primes(R.table())) out.push_back(Ideal(R, std::move(m)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ideal> prime_ideals(const RingHandle& R) { return maximal_ideals(R); }

MpResult is_mp(const RingHandle& R) {
  const auto mins = minimal_primes(R);
  for (std::size_t i = 0; i < mins.size(); ++i)
    for (std::size_t j = i + 1; j < mins.size(); ++j)
      if (!ideal_algebra(IdealOp::sum, mins[i].ideal, mins[j].ideal).is_whole())
        return {Verdict::no(), std::make_pair(mins[i].ideal, mins[j].ideal)};
  return {Verdict::yes(), std::nullopt};
}

Ideal ker_pi(const Ideal& p) {
  const RingHandle& R = p.ring();
  if (R.is_algebra()) return Ideal(R, zal::ker_pi(R.algebra(), p.lattice()));
  return Ideal(R, fin::ker_pi(R.table(), p.members()));
}

RingHandle localization_at_prime(const Ideal& p) {
  const RingHandle& R = p.ring();
  if (!R.is_finite()) throw InfiniteRing("localization of " + R.name() + " is not a finite ring");
  RingHandle L = quotient_ring(R, ker_pi(p));
  return L;
}

namespace {

TotalRingReport finite_total_ring(const FiniteRing& F) {
  TotalRingReport rep;
  rep.route = "finite-scan";
  bool all_units = true;
  for (Idx a = 0; a < F.size(); ++a)
    if (!F.is_zero_divisor(a) && !F.is_unit(a)) all_units = false;
  if (!all_units) throw VerificationError("finite ring has a non-zero-divisor that is not a unit");
  rep.tr_equals_r = Verdict::yes();
  bool flat = true;
  for (Idx f = 0; f < F.size() && flat; ++f) {
    const Idx f2 = F.mul(f, f);
    bool found = false;
    for (Idx g = 0; g < F.size() && !found; ++g) found = F.mul(f2, g) == f;
    flat = found;
  }
  rep.absolutely_flat = Verdict::of(flat);
  rep.zero_dimensional = Verdict::yes();
  return rep;
}

}  // namespace

TotalRingReport total_ring_report(const RingHandle& R) {
  if (!R.is_algebra()) return finite_total_ring(R.table());
  const ZAlgebra& A = R.algebra();
  if (A.is_finite()) return finite_total_ring(*A.to_finite());
  // Free rank >= 1: p * 1 for a prime p not dividing the torsion exponent is
  // a non-zero-divisor without an inverse. T(R) is the semilocal ring of the
  // associated primes that are minimal, so it is zero-dimensional exactly
  // when no embedded prime exists and absolutely flat exactly when R is
  // reduced.
  TotalRingReport rep;
  rep.route = "associated-primes";
  rep.tr_equals_r = Verdict::no();
  rep.absolutely_flat = Verdict::of(zal::is_reduced(A));
  rep.zero_dimensional = Verdict::of(zal::embedded_primes(A).empty());
  return rep;
}

ZariskiSets zariski_sets(const RingHandle& R, const Element& f) {
  ZariskiSets out;
  for (Ideal& P : prime_ideals(R)) (P.contains(f) ? out.basic_closed : out.basic_open).push_back(std::move(P));
  return out;
}

std::vector<std::pair<Ideal, Ideal>> gamma_retraction(const RingHandle& R) {
  if (!is_mp(R).verdict.is_true()) throw NotMpRing(R.name() + " is not an mp-ring");
  const auto mins = minimal_primes(R);
  std::vector<std::pair<Ideal, Ideal>> out;
  for (Ideal& P : prime_ideals(R)) {
    std::optional<Ideal> below;
    for (const PrimeIdeal& q : mins)
      if (is_subset(q.ideal, P)) {
        if (below) throw VerificationError("prime contains two minimal primes in an mp-ring");
        below = q.ideal;
      }
    if (!below) throw VerificationError("prime contains no minimal prime");
    out.emplace_back(std::move(P), std::move(*below));
  }
  return out;
}

SpectrumReport spectrum_report(const RingHandle& R) {
  SpectrumReport rep;
  rep.minimal_primes = minimal_primes(R);
  if (R.is_finite()) rep.maximal_ideals = maximal_ideals(R);
  rep.mp = is_mp(R).verdict;
  rep.min_compact = Verdict::yes();
  rep.min_compact_reason = "finitely many minimal primes";
  return rep;
}

}  // namespace ringlab
