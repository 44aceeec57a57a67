#include <gtest/gtest.h>

#include "ringlab/classify.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/finite_ops.hpp"
#include "ringlab/spectrum.hpp"
#include "support.hpp"

using namespace ringlab;
using namespace ringlab::test;

TEST(Predicate, Z4IsGpfButNotPf) {
  const RingHandle R = zmod(4);
  const PredicateResult pf = predicate(R, "pf");
  EXPECT_TRUE(pf.verdict.is_false());
  ASSERT_TRUE(pf.witness);
  EXPECT_EQ(pf.witness->elements, std::vector<std::string>{"2"});
  EXPECT_EQ(pf.witness->note, "Ann(2) = {0, 2} is not pure");
  EXPECT_TRUE(predicate(R, "gpf").verdict.is_true());
}

TEST(Predicate, DeligneRefutations) {
  const RingHandle D = deligne();
  const PredicateResult gpp = predicate(D, "gpp");
  EXPECT_TRUE(gpp.verdict.is_false());
  const PredicateResult qpf = predicate(D, "quasi_pf");
  EXPECT_TRUE(qpf.verdict.is_false());
  EXPECT_EQ(qpf.strategy, Strategy::theorem_backed);
  EXPECT_TRUE(predicate(D, "mp").verdict.is_true());
  EXPECT_TRUE(predicate(D, "primary").verdict.is_false());
}

TEST(Predicate, IntegersArePp) {
  const RingHandle Z = catalog("z");
  EXPECT_TRUE(predicate(Z, "pp").verdict.is_true());
  EXPECT_TRUE(predicate(Z, "domain").verdict.is_true());
  EXPECT_TRUE(predicate(Z, "admissible").verdict.decided() == false);
}

TEST(Predicate, UnknownNameThrows) { EXPECT_THROW(predicate(zmod(4), "noetherian"), UnknownName); }

TEST(Classify, Z6) {
  const Classification c = classify(zmod(6));
  EXPECT_TRUE(c.verdict("reduced").is_true());
  EXPECT_TRUE(c.verdict("pp").is_true());
  EXPECT_TRUE(c.verdict("absolutely_flat").is_true());
  EXPECT_TRUE(c.verdict("domain").is_false());
}

TEST(Classify, Deligne) {
  const Classification c = classify(deligne());
  EXPECT_TRUE(c.verdict("mp").is_true());
  EXPECT_TRUE(c.verdict("quasi_pf").is_false());
  EXPECT_TRUE(c.verdict("gpp").is_false());
  EXPECT_TRUE(c.verdict("primary").is_false());
  EXPECT_TRUE(quotient_mod_nil_profile(deligne()).verdict("pp").is_true());
  EXPECT_TRUE(c.violations.empty());
}

TEST(Classify, ZeroRingConventions) {
  const Classification c = classify(zmod(1));
  EXPECT_TRUE(c.verdict("pp").is_true());
  EXPECT_TRUE(c.verdict("pf").is_true());
  EXPECT_TRUE(c.verdict("reduced").is_true());
  EXPECT_TRUE(c.verdict("domain").is_false());
  EXPECT_TRUE(c.verdict("field").is_false());
}

TEST(Classify, ModNilProfiles) {
  const Classification z4 = quotient_mod_nil_profile(zmod(4));
  EXPECT_TRUE(z4.verdict("field").is_true());
  EXPECT_TRUE(z4.verdict("pp").is_true());
  const Classification z6 = classify(zmod(6)), z6n = quotient_mod_nil_profile(zmod(6));
  for (const std::string& name : predicate_names()) EXPECT_EQ(z6.verdict(name), z6n.verdict(name)) << name;
}

TEST(Classify, FiniteRingsCollapse) {
  for (std::size_t n = 1; n <= 64; ++n) {
    const Classification c = classify(zmod(n));
    EXPECT_EQ(c.verdict("pp"), c.verdict("pf")) << n;
    EXPECT_EQ(c.verdict("pp"), c.verdict("reduced")) << n;
    for (const char* p : {"gpp", "gpf", "quasi_pf", "mp", "zero_dimensional"}) EXPECT_TRUE(c.verdict(p).is_true()) << n;
    EXPECT_TRUE(c.violations.empty()) << n;
  }
}

TEST(Classify, ProductsAreConjunctions) {
  const std::vector<std::string> seeds = {R"({"kind":"zmod","n":4})", R"({"kind":"gf","q":4})", R"({"kind":"zmod","n":6})",
                                          R"({"kind":"zmod","n":9})"};
  for (const std::string& a : seeds)
    for (const std::string& b : seeds) {
      const RingHandle A = ring(a), B = ring(b);
      const RingHandle P = ring(R"({"kind":"product","factors":[)" + a + "," + b + "]}");
      for (const char* name : {"pp", "pf", "gpp", "gpf"})
        EXPECT_EQ(predicate(P, name).verdict, predicate(A, name).verdict && predicate(B, name).verdict)
            << name << " on " << P.name();
    }
}

TEST(Classify, WitnessesReplay) {
  // Every refuting element witness re-fails the definitional check.
  for (std::size_t n = 2; n <= 40; ++n) {
    const RingHandle R = zmod(n);
    const PredicateResult pf = predicate(R, "pf");
    if (!pf.verdict.is_false()) continue;
    ASSERT_TRUE(pf.witness);
    const Element f = R.parse(pf.witness->elements.at(0));
    EXPECT_TRUE(purity_class(annihilator(R, f)).pure.is_false()) << n;
  }
}

TEST(Classify, PropositionTwoOnNonzeroRings) {
  for (std::size_t n = 2; n <= 64; ++n) {
    const RingHandle R = zmod(n);
    const bool trivial = R.table().idempotents().size() == 2;
    EXPECT_EQ(predicate(R, "domain").verdict, predicate(R, "pp").verdict && Verdict::of(trivial)) << n;
  }
}

TEST(Classify, LocalQuasiPfMatchesLocalizations) {
  for (std::size_t n = 2; n <= 48; ++n) {
    const RingHandle R = zmod(n);
    Verdict all = Verdict::yes();
    for (const Ideal& m : maximal_ideals(R)) all = all && predicate(localization_at_prime(m), "quasi_pf").verdict;
    EXPECT_EQ(predicate(R, "quasi_pf").verdict, all) << n;
  }
}

TEST(Classify, AlgebraRoutesAgreeWithTablesOnFiniteMirrors) {
  for (long n : {1, 2, 4, 6, 8, 9, 12, 16, 18, 36}) {
    const RingHandle A = RingHandle::from_algebra(make_zalgebra(zmod_presentation(n)), "mirror");
    const Classification ca = classify(A), ct = classify(zmod(n));
    for (const std::string& name : predicate_names()) EXPECT_EQ(ca.verdict(name), ct.verdict(name)) << name << " " << n;
  }
}

TEST(Classify, ImplicationLatticeHasTenArrows) {
  EXPECT_EQ(implication_lattice().size(), 10u);
  std::map<std::string, PredicateResult> bad;
  bad["pp"] = {Verdict::yes(), std::nullopt, Strategy::definitional, "test"};
  bad["pf"] = {Verdict::no(), std::nullopt, Strategy::definitional, "test"};
  EXPECT_EQ(implication_violations(bad), std::vector<std::string>{"pp => pf"});
}

TEST(Classify, SampledRouteRefutesButNeverConfirmsInfiniteRings) {
  EXPECT_TRUE(routes::sampled(deligne(), "quasi_pf", 3).verdict.is_false());
  EXPECT_FALSE(routes::sampled(catalog("z"), "quasi_pf", 3).verdict.decided());
  EXPECT_TRUE(routes::sampled(zmod(12), "quasi_pf", 3).verdict.is_true());
}
