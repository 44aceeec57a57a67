#include <gtest/gtest.h>

#include "ringlab/errors.hpp"
#include "ringlab/finite_ops.hpp"
#include "support.hpp"

using namespace ringlab;
using namespace ringlab::test;

TEST(Construct, ZmodHasNElements) {
  const RingHandle R = zmod(4);
  EXPECT_EQ(R.size(), std::optional<std::size_t>(4));
  EXPECT_EQ(R.backend(), Backend::zmod);
  EXPECT_EQ(R.enumerate().size(), 4u);
}

TEST(Construct, DeligneIsAFreeRankOneAlgebra) {
  const RingHandle D = deligne();
  ASSERT_TRUE(D.is_algebra());
  EXPECT_EQ(D.algebra().r(), 1u);
  EXPECT_EQ(D.algebra().t(), 1u);
  EXPECT_FALSE(D.is_finite());
  EXPECT_TRUE(D.is_zero(D.mul(el(D, "x"), el(D, "x"))));
}

TEST(Construct, F2TimesF3MatchesZ6) {
  const RingHandle P = ring(R"({"kind":"product","factors":[{"kind":"zmod","n":2},{"kind":"zmod","n":3}]})");
  const RingHandle Z6 = zmod(6);
  ASSERT_EQ(P.size(), Z6.size());
  // 1 generates the additive group of both; match k*1 with k*1.
  const FiniteRing& A = P.table();
  const FiniteRing& B = Z6.table();
  std::vector<Idx> phi(6);
  for (std::size_t k = 0; k < 6; ++k) phi[A.times(A.one(), k)] = B.times(B.one(), k);
  for (Idx a = 0; a < 6; ++a)
    for (Idx b = 0; b < 6; ++b) {
      EXPECT_EQ(phi[A.add(a, b)], B.add(phi[a], phi[b]));
      EXPECT_EQ(phi[A.mul(a, b)], B.mul(phi[a], phi[b]));
    }
}

TEST(Construct, MalformedDocumentsAreSchemaErrors) {
  EXPECT_THROW(ring(R"({"kind":"zmod"})"), SchemaError);
  EXPECT_THROW(ring(R"({"kind":"nonsense"})"), SchemaError);
  EXPECT_THROW(parse_document("{not json"), SchemaError);
  EXPECT_THROW(ring(R"({"kind":"table","add":[[0,1],[1,0]],"mul":[[0,0],[0,0]],"zero":0,"one":1})"), AlgebraError);
}

TEST(Presentation, DeligneIsValid) {
  EXPECT_TRUE(validate_presentation(deligne().algebra().presentation()).valid);
}

TEST(Presentation, AsymmetricConstantsBreakCommutativity) {
  ZPresentation p;
  p.r = 2;
  p.unity = {1, 0};
  p.mult = {{{1, 0}, {0, 1}}, {{0, 0}, {0, 0}}};  // b1*b2 = b2 but b2*b1 = 0
  const PresentationReport rep = validate_presentation(p);
  EXPECT_FALSE(rep.valid);
  bool comm = false;
  for (const Violation& v : rep.violations) comm |= v.law == "commutativity";
  EXPECT_TRUE(comm);
}

TEST(Presentation, TorsionMustKillProducts) {
  // Z x Z/2 with b1 * b2 = b1: 2*(b1 b2) = 2 b1 is not a relation.
  ZPresentation p;
  p.r = 1;
  p.t = 1;
  p.d = {2};
  p.unity = {1, 0};
  p.mult = {{{1, 0}, {1, 0}}, {{1, 0}, {0, 1}}};
  const PresentationReport rep = validate_presentation(p);
  EXPECT_FALSE(rep.valid);
  bool compat = false;
  for (const Violation& v : rep.violations) compat |= v.law == "compatibility";
  EXPECT_TRUE(compat);
  EXPECT_THROW(make_zalgebra(p), AlgebraError);
}

TEST(Arithmetic, SmallExamples) {
  const RingHandle Z4 = zmod(4);
  EXPECT_EQ(Z4.format(Z4.mul(el(Z4, "2"), el(Z4, "2"))), "0");
  const RingHandle Z6 = zmod(6);
  EXPECT_EQ(Z6.format(Z6.add(el(Z6, "3"), el(Z6, "4"))), "1");
  EXPECT_EQ(Z6.format(Z6.neg(el(Z6, "1"))), "5");
}

TEST(Arithmetic, ForeignElementsAreRejected) {
  const RingHandle A = zmod(4), B = zmod(4);
  EXPECT_THROW(A.mul(A.one(), B.one()), RingMismatch);
}

TEST(Arithmetic, FreeCoordinatesDoNotOverflow) {
  const RingHandle Z = catalog("z");
  Element big = Z.from_vector({Int("123456789012345678901234567890")});
  const Element sq = Z.mul(big, big);
  EXPECT_EQ(Z.format(sq), "[15241578753238836750495351562536198787501905199875019052100]");
}

TEST(ElementPredicates, TwoInZ4) {
  const RingHandle R = zmod(4);
  const ElementPredicates p = element_predicates(R, el(R, "2"));
  EXPECT_FALSE(p.is_unit);
  EXPECT_TRUE(p.is_zero_divisor);
  EXPECT_TRUE(p.is_nilpotent);
  EXPECT_FALSE(p.is_idempotent);
}

TEST(ElementPredicates, TwoInDeligne) {
  const RingHandle D = deligne();
  const ElementPredicates p = element_predicates(D, el(D, "2"));
  EXPECT_TRUE(p.is_zero_divisor);
  EXPECT_FALSE(p.is_nilpotent);
  EXPECT_FALSE(p.is_unit);
  EXPECT_TRUE(element_predicates(D, el(D, "x")).is_nilpotent);
  EXPECT_TRUE(element_predicates(D, el(D, "-1")).is_unit);
}

TEST(ElementPredicates, ThreeInZ6IsIdempotent) {
  const RingHandle R = zmod(6);
  EXPECT_TRUE(element_predicates(R, el(R, "3")).is_idempotent);
}

TEST(Idempotents, Examples) {
  const RingHandle D = deligne(), Z6 = zmod(6);
  EXPECT_EQ(labels(D, idempotents(D)), (std::vector<std::string>{"[0,0]", "[1,0]"}));
  EXPECT_EQ(labels(Z6, idempotents(Z6)), (std::vector<std::string>{"0", "1", "3", "4"}));
  const RingHandle F4 = ring(R"({"kind":"gf","q":4})");
  EXPECT_EQ(idempotents(F4).size(), 2u);
  EXPECT_EQ(idempotents(catalog("z_cross_z")).size(), 4u);
}

TEST(Idempotents, ClosedUnderComplementAndProduct) {
  for (const char* name : {"z_cross_z", "z_cross_f2", "z_cross_z4", "powerset3", "f2_x_z4"}) {
    const RingHandle R = catalog(name);
    const auto es = idempotents(R);
    std::set<std::string> set;
    for (const Element& e : es) set.insert(R.format(e));
    for (const Element& e : es) {
      EXPECT_TRUE(set.count(R.format(R.sub(R.one(), e)))) << name;
      for (const Element& f : es) EXPECT_TRUE(set.count(R.format(R.mul(e, f)))) << name;
    }
  }
}

TEST(Enumerate, CountsAndInfiniteRings) {
  EXPECT_EQ(zmod(4).enumerate().size(), 4u);
  EXPECT_EQ(ring(R"({"kind":"product","factors":[{"kind":"zmod","n":2},{"kind":"zmod","n":2}]})").enumerate().size(),
            4u);
  EXPECT_THROW(deligne().enumerate(), InfiniteRing);
  EXPECT_EQ(deligne().sample(2).size(), 10u);
}

TEST(Zalgebra, MultiplicationMatricesAreMultiplicative) {
  const RingHandle R = catalog("z_omega");
  const ZAlgebra& A = R.algebra();
  const auto sample = A.sample(2);
  for (const IntVec& f : sample)
    for (const IntVec& g : sample) {
      const IntMat mf = A.mult_matrix(f), mg = A.mult_matrix(g), mfg = A.mult_matrix(A.mul(f, g));
      // Row j of M_fg is f*g*b_j = f*(g*b_j).
      for (std::size_t j = 0; j < A.m(); ++j) EXPECT_EQ(mfg[j], A.canon(row_times(mg[j], mf, A.m())));
    }
}

TEST(Zalgebra, CanonIsIdempotent) {
  const RingHandle R = catalog("z_cross_z4");
  const ZAlgebra& A = R.algebra();
  for (const IntVec& v : A.sample(3)) {
    IntVec w = v;
    for (auto& x : w) x += 17;
    EXPECT_EQ(A.canon(A.canon(w)), A.canon(w));
  }
}

TEST(Zalgebra, MirrorsEnumerateTorsionInMixedRadixOrder) {
  const ZAlgebraPtr A = make_zalgebra(presentation_product({zmod_presentation(2), zmod_presentation(3)}));
  const auto elems = A->torsion_elements();
  ASSERT_EQ(elems.size(), 6u);
  EXPECT_EQ(to_string(elems[1]), "[1,0]");
  EXPECT_EQ(to_string(elems[2]), "[0,1]");
  for (std::size_t i = 0; i < elems.size(); ++i) EXPECT_EQ(A->finite_index(elems[i]), i);
}
