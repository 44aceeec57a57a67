#include <gtest/gtest.h>

#include "ringlab/errors.hpp"
#include "ringlab/finite_ops.hpp"
#include "ringlab/spectrum.hpp"
#include "support.hpp"

using namespace ringlab;
using namespace ringlab::test;

TEST(IdealAlgebra, DeligneSumHasIndexTwo) {
  const RingHandle D = deligne();
  const Ideal s = ideal_algebra(IdealOp::sum, gen(D, {"x"}), gen(D, {"2"}));
  EXPECT_EQ(s, gen(D, {"2", "x"}));
  EXPECT_FALSE(s.is_whole());
  EXPECT_FALSE(s.contains(el(D, "1")));
  EXPECT_TRUE(s.contains(el(D, "[4,1]")));
}

TEST(IdealAlgebra, IntersectionInZ) {
  const RingHandle Z = catalog("z");
  EXPECT_EQ(ideal_algebra(IdealOp::intersect, gen(Z, {"2"}), gen(Z, {"3"})), gen(Z, {"6"}));
}

TEST(IdealAlgebra, ProductInDeligneVanishes) {
  const RingHandle D = deligne();
  EXPECT_TRUE(ideal_algebra(IdealOp::product, gen(D, {"2"}), gen(D, {"x"})).is_zero());
}

TEST(IdealAlgebra, CompareAndMismatch) {
  const RingHandle R = zmod(12);
  EXPECT_EQ(ideal_compare(gen(R, {"4"}), gen(R, {"2"})), IdealOrder::leq);
  EXPECT_EQ(ideal_compare(gen(R, {"2"}), gen(R, {"3"})), IdealOrder::incomparable);
  EXPECT_EQ(ideal_compare(gen(R, {"10"}), gen(R, {"2"})), IdealOrder::equal);
  EXPECT_THROW(ideal_algebra(IdealOp::sum, gen(R, {"2"}), gen(zmod(12), {"3"})), RingMismatch);
}

TEST(Annihilator, Examples) {
  const RingHandle Z4 = zmod(4);
  EXPECT_EQ(members(annihilator(Z4, el(Z4, "2"))), (std::vector<std::string>{"0", "2"}));
  EXPECT_TRUE(annihilator(Z4, Z4.zero()).is_whole());
  const RingHandle D = deligne();
  EXPECT_EQ(annihilator(D, el(D, "2")), gen(D, {"x"}));
}

TEST(Stabilization, Examples) {
  const RingHandle Z8 = zmod(8);
  const Stabilized s = annihilator_power_stabilized(Z8, el(Z8, "2"));
  EXPECT_EQ(s.n, 3u);
  EXPECT_TRUE(s.ideal.is_whole());
  const RingHandle D = deligne();
  const Stabilized t = annihilator_power_stabilized(D, el(D, "2"));
  EXPECT_EQ(t.n, 1u);
  EXPECT_EQ(t.ideal, gen(D, {"x"}));
  const Stabilized u = annihilator_power_stabilized(Z8, el(Z8, "3"));
  EXPECT_EQ(u.n, 1u);
  EXPECT_TRUE(u.ideal.is_zero());
}

TEST(ColonSaturation, Examples) {
  const RingHandle D = deligne();
  EXPECT_EQ(colon_saturation(zero_ideal(D), el(D, "x")).quotient, gen(D, {"2", "x"}));
  const RingHandle Z12 = zmod(12);
  EXPECT_EQ(colon_saturation(zero_ideal(Z12), el(Z12, "3")).saturation, gen(Z12, {"4"}));
  const Ideal I = gen(Z12, {"6"});
  EXPECT_EQ(colon_saturation(I, Z12.one()).quotient, I);
}

TEST(Nilradical, Examples) {
  const RingHandle Z12 = zmod(12);
  EXPECT_EQ(members(nilradical(Z12)), (std::vector<std::string>{"0", "6"}));
  EXPECT_TRUE(nilradical(zmod(6)).is_zero());
  const RingHandle D = deligne();
  EXPECT_EQ(nilradical(D), gen(D, {"x"}));
}

TEST(Purity, Examples) {
  const RingHandle Z4 = zmod(4);
  EXPECT_TRUE(purity_class(gen(Z4, {"2"})).pure.is_false());
  const RingHandle Z6 = zmod(6);
  const PurityClass pc = purity_class(gen(Z6, {"3"}));
  EXPECT_TRUE(pc.pure.is_true());
  ASSERT_TRUE(pc.idempotent_generator);
  EXPECT_EQ(Z6.format(*pc.idempotent_generator), "3");
  const RingHandle D = deligne();
  const PurityClass dq = purity_class(gen(D, {"2", "x"}));
  EXPECT_TRUE(dq.quasi_pure.is_false());
  ASSERT_TRUE(dq.quasi_pure_refuter);
  EXPECT_EQ(D.format(*dq.quasi_pure_refuter), "[2,0]");
}

TEST(Purity, ChainHoldsOnEveryIdealOfSmallRings) {
  for (std::size_t n = 1; n <= 36; ++n) {
    const RingHandle R = zmod(n);
    const auto all = fin::all_ideals(R.table(), 512);
    ASSERT_TRUE(all);
    for (const IdxSet& I : *all) {
      const PurityClass pc = purity_class(Ideal(R, I));
      if (pc.regular.is_true()) { EXPECT_TRUE(pc.pure.is_true()) << n; }
      if (pc.pure.is_true()) { EXPECT_TRUE(pc.quasi_pure.is_true()) << n; }
    }
  }
}

TEST(Purity, IdempotentGeneratorIsUnique) {
  const RingHandle R = catalog("powerset3");
  const auto all = fin::all_ideals(R.table(), 512);
  ASSERT_TRUE(all);
  for (const IdxSet& I : *all) {
    std::size_t count = 0;
    for (Idx e : R.table().idempotents())
      if (fin::principal(R.table(), e) == I) ++count;
    EXPECT_LE(count, 1u);
  }
}

TEST(Purity, ReducedRingsHaveStableAnnihilators) {
  for (std::size_t n : {6, 10, 15, 30, 42}) {
    const RingHandle R = zmod(n);
    const FiniteRing& F = R.table();
    for (Idx f = 0; f < F.size(); ++f)
      for (std::size_t k = 2; k <= 4; ++k) EXPECT_EQ(fin::annihilator(F, f), fin::annihilator(F, F.pow(f, k)));
  }
}

TEST(Quotient, Examples) {
  const RingHandle Z12 = zmod(12);
  const RingHandle Q = quotient_ring(Z12, gen(Z12, {"4"}));
  EXPECT_EQ(Q.size(), std::optional<std::size_t>(4));
  EXPECT_EQ(Q.table().idempotents().size(), 2u);
  const RingHandle D = deligne();
  const RingHandle Z = quotient_ring(D, gen(D, {"x"}));
  ASSERT_TRUE(Z.is_algebra());
  EXPECT_EQ(Z.algebra().r(), 1u);
  EXPECT_EQ(Z.algebra().t(), 0u);
  EXPECT_EQ(quotient_ring(Z12, zero_ideal(Z12)).size(), std::optional<std::size_t>(12));
}

TEST(LiftIdempotent, Examples) {
  const RingHandle Z12 = zmod(12);
  const QuotientMap& q = mod_nil(Z12);
  const Element three = q.project(Z12, el(Z12, "3"));
  EXPECT_EQ(Z12.format(lift_idempotent_mod_nil(Z12, three)), "9");
  EXPECT_EQ(Z12.format(lift_idempotent_mod_nil(Z12, q.ring().one())), "1");
  EXPECT_EQ(Z12.format(lift_idempotent_mod_nil(Z12, q.ring().zero())), "0");
  EXPECT_THROW(lift_idempotent_mod_nil(Z12, q.project(Z12, el(Z12, "2"))), NotIdempotentClass);
}

TEST(Zalgebra, PurityReductionsMatchScansOnFiniteMirrors) {
  for (long n : {4, 6, 8, 12, 18, 30}) {
    const RingHandle A = RingHandle::from_algebra(make_zalgebra(zmod_presentation(n)), "mirror");
    const RingHandle T = zmod(n);
    const auto all = fin::all_ideals(T.table(), 512);
    ASSERT_TRUE(all);
    for (const IdxSet& I : *all) {
      const Ideal J(T, I);
      std::vector<Element> gens;
      for (const Element& g : J.generators()) gens.push_back(A.from_vector({Int(static_cast<unsigned long>(g.idx))}));
      const PurityClass a = purity_class(ideal_from_generators(A, gens));
      const PurityClass b = purity_class(J);
      EXPECT_EQ(a.pure, b.pure) << n << " " << J.format();
      EXPECT_EQ(a.quasi_pure, b.quasi_pure) << n << " " << J.format();
      EXPECT_EQ(a.regular, b.regular) << n << " " << J.format();
    }
  }
}
