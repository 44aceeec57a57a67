#include <gtest/gtest.h>

#include "ringlab/errors.hpp"
#include "ringlab/finite_ops.hpp"
#include "ringlab/spectrum.hpp"
#include "support.hpp"

using namespace ringlab;
using namespace ringlab::test;

namespace {

std::vector<Ideal> prime_list(const std::vector<PrimeIdeal>& ps) {
  std::vector<Ideal> out;
  for (const PrimeIdeal& p : ps) out.push_back(p.ideal);
  return out;
}

}  // namespace

TEST(Primes, DeligneIdeals) {
  const RingHandle D = deligne();
  EXPECT_TRUE(is_prime(gen(D, {"x"})).is_true());
  EXPECT_TRUE(is_maximal(gen(D, {"2", "x"})).is_true());
  EXPECT_FALSE(is_maximal(gen(D, {"x"})).is_true());
  EXPECT_TRUE(is_prime(whole_ideal(D)).is_false());
}

TEST(Primes, ZeroIdealOfZ4IsPrimaryNotPrime) {
  const RingHandle Z4 = zmod(4);
  EXPECT_TRUE(is_primary_ideal(zero_ideal(Z4)).is_true());
  EXPECT_TRUE(is_prime(zero_ideal(Z4)).is_false());
}

TEST(MinimalPrimes, Examples) {
  const RingHandle Z12 = zmod(12);
  std::vector<Ideal> expected = {gen(Z12, {"2"}), gen(Z12, {"3"})};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(prime_list(minimal_primes(Z12)), expected);
  const RingHandle D = deligne();
  EXPECT_EQ(prime_list(minimal_primes(D)), (std::vector<Ideal>{gen(D, {"x"})}));
  const RingHandle M = catalog("z_x_x2_minus_2x");
  const auto mins = prime_list(minimal_primes(M));
  ASSERT_EQ(mins.size(), 2u);
  EXPECT_TRUE(std::find(mins.begin(), mins.end(), gen(M, {"x"})) != mins.end());
  EXPECT_TRUE(std::find(mins.begin(), mins.end(), gen(M, {"[-2,1]"})) != mins.end());
}

TEST(Mp, Examples) {
  EXPECT_TRUE(is_mp(deligne()).verdict.is_true());
  const MpResult m = is_mp(catalog("z_x_x2_minus_2x"));
  EXPECT_TRUE(m.verdict.is_false());
  ASSERT_TRUE(m.witness);
  EXPECT_FALSE(ideal_algebra(IdealOp::sum, m.witness->first, m.witness->second).is_whole());
  for (std::size_t n = 1; n <= 40; ++n) EXPECT_TRUE(is_mp(zmod(n)).verdict.is_true()) << n;
}

TEST(KerPi, Examples) {
  const RingHandle D = deligne();
  EXPECT_EQ(ker_pi(gen(D, {"x"})), gen(D, {"x"}));
  EXPECT_TRUE(ker_pi(gen(D, {"2", "x"})).is_zero());
  const RingHandle Z12 = zmod(12);
  EXPECT_EQ(ker_pi(gen(Z12, {"2"})), gen(Z12, {"4"}));
}

TEST(KerPi, LiesInsideThePrime) {
  for (const char* name : {"deligne", "z_x_x2_minus_2x", "z_cross_z4", "z_omega", "f2_x_z4", "zmod36"}) {
    const RingHandle R = catalog(name);
    for (const PrimeIdeal& p : minimal_primes(R)) EXPECT_TRUE(is_subset(ker_pi(p.ideal), p.ideal)) << name;
  }
}

TEST(Localization, Examples) {
  const RingHandle Z12 = zmod(12);
  EXPECT_EQ(localization_at_prime(gen(Z12, {"2"})).size(), std::optional<std::size_t>(4));
  EXPECT_EQ(localization_at_prime(gen(Z12, {"3"})).size(), std::optional<std::size_t>(3));
  const RingHandle Z8 = zmod(8);
  EXPECT_EQ(localization_at_prime(gen(Z8, {"2"})).size(), std::optional<std::size_t>(8));
  const RingHandle D = deligne();
  EXPECT_THROW(localization_at_prime(gen(D, {"x"})), InfiniteRing);
}

TEST(TotalRing, Examples) {
  const TotalRingReport z4 = total_ring_report(zmod(4));
  EXPECT_TRUE(z4.tr_equals_r.is_true());
  EXPECT_TRUE(z4.absolutely_flat.is_false());
  EXPECT_TRUE(z4.zero_dimensional.is_true());
  EXPECT_TRUE(total_ring_report(zmod(6)).absolutely_flat.is_true());
  EXPECT_TRUE(total_ring_report(catalog("z")).zero_dimensional.is_true());
}

TEST(Zariski, Examples) {
  const RingHandle Z12 = zmod(12);
  const ZariskiSets s = zariski_sets(Z12, el(Z12, "2"));
  EXPECT_EQ(s.basic_open, (std::vector<Ideal>{gen(Z12, {"3"})}));
  EXPECT_EQ(zariski_sets(Z12, Z12.zero()).basic_closed.size(), 2u);
  const auto g = gamma_retraction(Z12);
  ASSERT_EQ(g.size(), 2u);
  for (const auto& [p, m] : g) EXPECT_EQ(p, m);
  EXPECT_THROW(gamma_retraction(catalog("z_x_x2_minus_2x")), NotMpRing);
}

TEST(Spectrum, FiniteMinimalEqualsMaximalEqualsAll) {
  for (std::size_t n = 2; n <= 60; ++n) {
    const RingHandle R = zmod(n);
    const auto mins = prime_list(minimal_primes(R));
    EXPECT_EQ(mins, maximal_ideals(R)) << n;
    EXPECT_EQ(mins, prime_ideals(R)) << n;
    EXPECT_EQ(mins.size(), prime_factors(Int(static_cast<unsigned long>(n))).size()) << n;
  }
}

TEST(Spectrum, MinimalPrimesMeetInTheNilradical) {
  for (const std::string& name : catalog_names()) {
    const RingHandle R = catalog(name);
    const auto mins = minimal_primes(R);
    if (mins.empty()) continue;
    Ideal meet = whole_ideal(R);
    for (const PrimeIdeal& p : mins) meet = ideal_algebra(IdealOp::intersect, meet, p.ideal);
    EXPECT_EQ(meet, nilradical(R)) << name;
  }
}

TEST(Spectrum, LocalizationsOfFiniteRingsArePrimary) {
  for (std::size_t n = 2; n <= 64; ++n) {
    const RingHandle R = zmod(n);
    for (const Ideal& p : prime_ideals(R)) {
      const RingHandle L = localization_at_prime(p);
      EXPECT_FALSE(fin::primary_refuter(L.table())) << n;
      EXPECT_TRUE(fin::is_local(L.table())) << n;
    }
  }
}

TEST(Spectrum, MinCompactAlwaysJustified) {
  for (const std::string& name : catalog_names()) {
    const SpectrumReport rep = spectrum_report(catalog(name));
    EXPECT_TRUE(rep.min_compact.is_true());
    EXPECT_FALSE(rep.min_compact_reason.empty());
  }
}
