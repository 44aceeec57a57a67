#include <gtest/gtest.h>

#include "ringlab/classify.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/poly.hpp"
#include "support.hpp"

using namespace ringlab;
using namespace ringlab::test;

namespace {

RingHandle f2_x_f3() { return ring(R"({"kind":"product","factors":[{"kind":"gf","q":2},{"kind":"gf","q":3}]})"); }

}  // namespace

TEST(Poly, TrimsAndFormats) {
  const RingHandle R = zmod(4);
  const Poly f(R, {el(R, "2"), el(R, "0"), el(R, "3"), R.zero()});
  EXPECT_EQ(f.degree(), 2u);
  EXPECT_EQ(f.format(), "2 + 3*x^2");
  EXPECT_TRUE(Poly(R, {R.zero()}).is_zero());
  EXPECT_EQ(poly_mul(f, f).format(), "1*x^4");
  EXPECT_EQ(poly_mul(Poly(R, {el(R, "2")}), Poly(R, {el(R, "2"), R.one()})).format(), "2*x");
}

TEST(PpIdempotent, ProductBase) {
  const RingHandle B = f2_x_f3();
  const Poly f(B, {el(B, "(1,0)"), el(B, "(0,1)")});
  const Element e = pp_annihilator_idempotent(f);
  EXPECT_TRUE(B.is_zero(e));
  const BoundedAnnihilator ann = poly_annihilator_bounded(f, 4);
  ASSERT_EQ(ann.members.size(), 1u);
  EXPECT_TRUE(ann.members[0].is_zero());
}

TEST(PpIdempotent, ConstantAndZero) {
  const RingHandle Z6 = zmod(6);
  EXPECT_EQ(Z6.format(pp_annihilator_idempotent(Poly(Z6, {el(Z6, "2")}))), "3");
  EXPECT_EQ(Z6.format(pp_annihilator_idempotent(Poly(Z6, {}))), "1");
}

TEST(PpIdempotent, NeedsAPpBase) {
  const RingHandle Z4 = zmod(4);
  EXPECT_THROW(pp_annihilator_idempotent(Poly(Z4, {el(Z4, "2")})), BaseNotPP);
}

TEST(BoundedAnnihilator, TwoPlusTwoXOverZ4) {
  const RingHandle Z4 = zmod(4);
  const BoundedAnnihilator ann = poly_annihilator_bounded(Poly(Z4, {el(Z4, "2"), el(Z4, "2")}), 2);
  EXPECT_EQ(ann.members.size(), 8u);
  for (const Poly& g : ann.members)
    for (const Element& c : g.coeffs()) EXPECT_TRUE(Z4.format(c) == "0" || Z4.format(c) == "2");
  ASSERT_TRUE(ann.mccoy_witness);
  EXPECT_EQ(Z4.format(*ann.mccoy_witness), "2");
}

TEST(BoundedAnnihilator, UnitConstantHasOnlyZero) {
  const RingHandle Z4 = zmod(4);
  const BoundedAnnihilator ann = poly_annihilator_bounded(Poly(Z4, {Z4.one()}), 3);
  ASSERT_EQ(ann.members.size(), 1u);
  EXPECT_FALSE(ann.mccoy_witness);
}

TEST(BoundedAnnihilator, IdempotentMultiplesOverProduct) {
  const RingHandle B = f2_x_f3();
  const Poly f(B, {el(B, "(1,0)")});
  EXPECT_EQ(poly_annihilator_bounded(f, 3).members, idempotent_multiples(B, el(B, "(0,1)"), 3));
}

TEST(BoundedAnnihilator, BudgetIsEnforced) {
  const RingHandle R = zmod(64);
  EXPECT_THROW(poly_annihilator_bounded(Poly(R, {R.one()}), 4), CapacityError);
}

TEST(BoundedAnnihilator, McCoyOnSmallBases) {
  for (std::size_t n : {4, 6, 8, 9}) {
    const RingHandle R = zmod(n);
    for (Idx a = 0; a < n; ++a)
      for (Idx b = 0; b < n; ++b)
        for (Idx c = 0; c < n; ++c) {
          const Poly f = Poly::from_indices(R, {a, b, c});
          const BoundedAnnihilator ann = poly_annihilator_bounded(f, 2);
          if (ann.members.size() > 1) { EXPECT_TRUE(ann.mccoy_witness) << n << " " << f.format(); }
        }
  }
}

TEST(Truncation, Examples) {
  const RingHandle T = truncated_ring(zmod(4), 3);
  EXPECT_EQ(T.size(), std::optional<std::size_t>(64));
  EXPECT_EQ(T.table().idempotents().size(), 2u);
  EXPECT_TRUE(truncated_idempotents_check(zmod(4), 3).is_true());
  const RingHandle V = ring(R"({"kind":"product","factors":[{"kind":"gf","q":2},{"kind":"gf","q":2}]})");
  EXPECT_TRUE(truncated_idempotents_check(V, 2).is_true());
  EXPECT_EQ(truncated_ring(V, 2).table().idempotents().size(), 4u);
  EXPECT_TRUE(truncated_idempotents_check(zmod(6), 1).is_true());
}

TEST(TheoremV, ReducedBases) {
  PolyCheckOptions sampled;
  sampled.max_degree = 3;
  sampled.window = 6;
  sampled.exhaustive_limit = 0;
  sampled.sample_size = 50;
  EXPECT_TRUE(theorem_v_reduced_check(f2_x_f3(), sampled).is_true());
  EXPECT_TRUE(theorem_v_reduced_check(zmod(5)).is_true());
  const RingHandle V3 = catalog("powerset3");
  EXPECT_TRUE(theorem_v_reduced_check(V3).is_true());
  EXPECT_THROW(theorem_v_reduced_check(zmod(4)), NotReduced);
}

TEST(TheoremVI, SmallPpBasesMatchTheirWindow) {
  for (const char* doc : {R"({"kind":"gf","q":2})", R"({"kind":"gf","q":3})", R"({"kind":"gf","q":4})",
                           R"({"kind":"zmod","n":6})", R"({"kind":"gf","q":5})"}) {
    const RingHandle B = ring(doc);
    ASSERT_TRUE(predicate(B, "pp").verdict.is_true());
    const std::size_t n = B.table().size();
    for (Idx a = 0; a < n; ++a)
      for (Idx b = 0; b < n; ++b) {
        const Poly f = Poly::from_indices(B, {a, b});
        EXPECT_TRUE(annihilator_matches_idempotent(f, 3)) << B.name() << " " << f.format();
      }
  }
}
