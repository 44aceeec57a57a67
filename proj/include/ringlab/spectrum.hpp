#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/ideals.hpp"
#include "ringlab/verdict.hpp"

namespace ringlab {

enum class PrimeCertificate { finite_scan, quotient_domain_test };
std::string to_string(PrimeCertificate c);

struct PrimeIdeal {
  Ideal ideal;
  PrimeCertificate certified = PrimeCertificate::finite_scan;
};

Verdict is_prime(const Ideal& I);
Verdict is_maximal(const Ideal& I);
// R/I is a primary ring.
Verdict is_primary_ideal(const Ideal& I);

// Sorted by normal form.
std::vector<PrimeIdeal> minimal_primes(const RingHandle& R);
// Finite rings only (InfiniteRing otherwise).
std::vector<Ideal> maximal_ideals(const RingHandle& R);
std::vector<Ideal> prime_ideals(const RingHandle& R);

struct MpResult {
  Verdict verdict;
  // A pair of distinct minimal primes with a proper sum.
  std::optional<std::pair<Ideal, Ideal>> witness;
};
MpResult is_mp(const RingHandle& R);

Ideal ker_pi(const Ideal& p);
// R_p as R / ker_pi(p); finite rings only.
RingHandle localization_at_prime(const Ideal& p);

struct TotalRingReport {
  Verdict tr_equals_r;
  Verdict absolutely_flat;
  Verdict zero_dimensional;
  std::string route;
};
TotalRingReport total_ring_report(const RingHandle& R);

struct ZariskiSets {
  std::vector<Ideal> basic_open;    // D(f): primes not containing f
  std::vector<Ideal> basic_closed;  // V(f): primes containing f
};
ZariskiSets zariski_sets(const RingHandle& R, const Element& f);
// Each prime with the unique minimal prime below it. NotMpRing unless mp.
std::vector<std::pair<Ideal, Ideal>> gamma_retraction(const RingHandle& R);

struct SpectrumReport {
  std::vector<PrimeIdeal> minimal_primes;
  std::optional<std::vector<Ideal>> maximal_ideals;
  Verdict mp;
  Verdict min_compact;
  std::string min_compact_reason;
};
SpectrumReport spectrum_report(const RingHandle& R);

}  // namespace ringlab
