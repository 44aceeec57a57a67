#include <gtest/gtest.h>

#include "ringlab/classify.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/ultra.hpp"
#include "support.hpp"

using namespace ringlab;
using namespace ringlab::test;

namespace {

std::vector<RingHandle> copies(const std::string& doc, std::size_t n) {
  std::vector<RingHandle> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(ring(doc));
  return out;
}

const char* kZ4 = R"({"kind":"zmod","n":4})";
const char* kF2 = R"({"kind":"gf","q":2})";
const char* kF3 = R"({"kind":"gf","q":3})";

}  // namespace

TEST(Support, Examples) {
  const UltraRing U = ultra_ring(copies(kZ4, 3), SetIdeal(3, 0));
  const RingHandle& P = U.product;
  EXPECT_EQ(support(P, P.parse("(1,0,2)")), Subset{0b101});
  EXPECT_EQ(format_subset(support(P, P.zero())), "{}");
  EXPECT_EQ(format_subset(support(P, P.parse("(0,3,0)"))), "{2}");
}

TEST(Support, ProductAndSumBounds) {
  const UltraRing U = ultra_ring({ring(kZ4), ring(kF3), ring(kZ4)}, SetIdeal(3, 0));
  const RingHandle& P = U.product;
  for (const Element& f : P.enumerate())
    for (const Element& g : P.enumerate()) {
      const Subset sf = support(P, f), sg = support(P, g);
      EXPECT_EQ(support(P, P.mul(f, g)) & ~(sf & sg), 0u);
      EXPECT_EQ(support(P, P.add(f, g)) & ~(sf | sg), 0u);
    }
}

TEST(Support, PowersKeepSupportOverReducedFactors) {
  const UltraRing U = ultra_ring({ring(kF2), ring(kF3), ring(R"({"kind":"gf","q":4})")}, SetIdeal(3, 0));
  const RingHandle& P = U.product;
  for (const Element& f : P.enumerate())
    for (std::size_t n = 2; n <= 4; ++n) EXPECT_EQ(support(P, P.pow(f, n)), support(P, f));
}

TEST(SetIdeal, CanonicalForm) {
  const SetIdeal I = SetIdeal::generated(3, {{1}, {2}});
  EXPECT_EQ(I.top(), Subset{0b011});
  EXPECT_EQ(I.format(), "P({1,2})");
  EXPECT_EQ(I.members().size(), 4u);
  EXPECT_EQ(SetIdeal::all(4).size(), 16u);
  EXPECT_TRUE(I.contains(0));
  EXPECT_FALSE(I.contains(0b100));
}

TEST(UltraRing, Examples) {
  const UltraRing U = ultra_ring(copies(kZ4, 3), SetIdeal::generated(3, {{1, 2}}));
  EXPECT_EQ(U.quotient.size(), std::optional<std::size_t>(4));
  EXPECT_TRUE(U.complement_isomorphic);
  const UltraRing V = ultra_ring(copies(kZ4, 3), SetIdeal(3, 0));
  EXPECT_TRUE(V.star.is_zero());
  EXPECT_EQ(V.quotient.size(), std::optional<std::size_t>(64));
  const UltraRing W = ultra_ring(copies(kZ4, 3), SetIdeal(3, 0b111));
  EXPECT_TRUE(W.star.is_whole());
  EXPECT_EQ(W.quotient.size(), std::optional<std::size_t>(1));
}

TEST(UltraRing, StarIsGeneratedByIndicatorIdempotents) {
  const UltraRing U = ultra_ring({ring(kZ4), ring(kF3), ring(kF2)}, SetIdeal::generated(3, {{1, 3}}));
  const PurityClass pc = purity_class(U.star);
  EXPECT_TRUE(pc.pure.is_true());
  ASSERT_TRUE(pc.idempotent_generator);
  EXPECT_EQ(U.product.format(*pc.idempotent_generator), "(1,0,1)");
}

TEST(UltraRing, ForeignShapesAreRejected) {
  EXPECT_THROW(ultra_ring(copies(kF2, 2), SetIdeal(3, 0)), SchemaError);
  EXPECT_THROW(support(zmod(6), zmod(6).one()), RingMismatch);
}

TEST(PreservationSuite, FieldsAlwaysPass) {
  for (const SetIdeal& I : SetIdeal::all(3)) {
    const TheoremReport r = ultra_preservation_suite(ultra_ring({ring(kF2), ring(kF3), ring(kF2)}, I));
    EXPECT_EQ(r.agreement, Agreement::pass) << I.format();
    for (const Clause& c : r.clauses) EXPECT_TRUE(c.verdict.is_true()) << c.label;
  }
}

TEST(PreservationSuite, NonReducedFactorsAreVacuous) {
  const TheoremReport r = ultra_preservation_suite(ultra_ring(copies(kZ4, 2), SetIdeal(2, 0)));
  EXPECT_EQ(r.agreement, Agreement::pass);
  bool saw_purity = false;
  for (const Clause& c : r.clauses) saw_purity |= c.label.find("pure") != std::string::npos && c.verdict.is_true();
  EXPECT_TRUE(saw_purity);
}

TEST(PreservationSuite, SingleFactorIsReflexive) {
  const UltraRing U = ultra_ring({ring(kF3)}, SetIdeal(1, 0));
  EXPECT_EQ(U.quotient.size(), std::optional<std::size_t>(3));
  EXPECT_EQ(ultra_preservation_suite(U).agreement, Agreement::pass);
}
