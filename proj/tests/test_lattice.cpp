#include <gtest/gtest.h>

#include <random>

#include "ringlab/lattice.hpp"
#include "ringlab/rational.hpp"
#include "ringlab/upoly.hpp"

using namespace ringlab;

namespace {

IntMat mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMat out;
  for (const auto& r : rows) {
    IntVec v;
    for (long x : r) v.emplace_back(x);
    out.push_back(v);
  }
  return out;
}

IntMat mul(const IntMat& a, const IntMat& b, std::size_t ncols) {
  IntMat out;
  for (const IntVec& row : a) out.push_back(row_times(row, b, ncols));
  return out;
}

}  // namespace

TEST(Hnf, CanonicalShape) {
  const IntMat h = hnf(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), 3);
  ASSERT_EQ(h.size(), 3u);
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::size_t pivot = 0;
    while (h[i][pivot] == 0) ++pivot;
    EXPECT_GT(h[i][pivot], 0);
    for (std::size_t k = 0; k < i; ++k) {
      EXPECT_GE(h[k][pivot], 0);
      EXPECT_LT(h[k][pivot], h[i][pivot]);
    }
  }
}

TEST(Hnf, SameLatticeSameForm) {
  const Lattice a = Lattice::span(mat({{2, 0}, {0, 1}}), 2);
  const Lattice b = Lattice::span(mat({{2, 1}, {4, 3}, {0, 5}}), 2);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains({Int(4), Int(7)}));
  EXPECT_FALSE(a.contains({Int(1), Int(0)}));
}

TEST(Smith, InvariantsAndTransform) {
  const IntMat a = mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const SmithForm s = smith(a, 3);
  ASSERT_EQ(s.invariants.size(), 3u);
  EXPECT_EQ(s.invariants[0], 2);
  EXPECT_EQ(s.invariants[1], 6);
  EXPECT_EQ(s.invariants[2], 12);
  const IntMat id = mul(s.q, s.q_inv, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(id[i][j], i == j ? 1 : 0);
}

TEST(Lattice, IntersectionOfMultiplesIsLcm) {
  const Lattice two = Lattice::span(mat({{2}}), 1), three = Lattice::span(mat({{3}}), 1);
  EXPECT_EQ(two.intersect(three), Lattice::span(mat({{6}}), 1));
  EXPECT_EQ(two + three, Lattice::full(1));
}

TEST(Lattice, KernelAndSaturation) {
  const IntMat a = mat({{1, 2}, {2, 4}, {0, 1}});
  const IntMat k = left_kernel(a, 2);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(is_zero(row_times(k[0], a, 2)));
  const Lattice l = Lattice::span(mat({{2, 4}}), 2);
  EXPECT_EQ(l.saturation(), Lattice::span(mat({{1, 2}}), 2));
}

TEST(Lattice, RandomIntersectionsAreContainedInBoth) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    IntMat ga, gb;
    for (int i = 0; i < 3; ++i) {
      ga.push_back({Int(d(rng)), Int(d(rng)), Int(d(rng))});
      gb.push_back({Int(d(rng)), Int(d(rng)), Int(d(rng))});
    }
    const Lattice a = Lattice::span(ga, 3), b = Lattice::span(gb, 3);
    const Lattice c = a.intersect(b);
    EXPECT_TRUE(c.subset_of(a));
    EXPECT_TRUE(c.subset_of(b));
    EXPECT_TRUE(a.subset_of(a + b));
    for (const IntVec& row : ga) EXPECT_TRUE((a + b).contains(row));
  }
}

TEST(Rational, SolveInSpan) {
  const std::vector<RatVec> vecs = {{Rat(1), Rat(0)}, {Rat(1), Rat(1)}};
  const auto c = solve_in_span(vecs, {Rat(3), Rat(2)});
  ASSERT_TRUE(c);
  EXPECT_EQ((*c)[0], 1);
  EXPECT_EQ((*c)[1], 2);
  EXPECT_EQ(rank({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}), 1u);
}

TEST(Upoly, FactorsOverQ) {
  // x^4 - 1 = (x - 1)(x + 1)(x^2 + 1)
  const upoly::ZPoly f = {Int(-1), Int(0), Int(0), Int(0), Int(1)};
  const auto fs = upoly::factor_squarefree(f);
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(fs[2], (upoly::ZPoly{Int(1), Int(0), Int(1)}));
  upoly::ZPoly prod = {Int(1)};
  for (const auto& g : fs) prod = upoly::mul(prod, g);
  EXPECT_EQ(prod, f);
}

TEST(Upoly, IrreducibleStaysWhole) {
  // x^4 + 1 splits modulo every prime but not over Q.
  const upoly::ZPoly f = {Int(1), Int(0), Int(0), Int(0), Int(1)};
  EXPECT_EQ(upoly::factor_squarefree(f).size(), 1u);
}

TEST(Upoly, ExtendedGcd) {
  const upoly::QPoly a = upoly::to_q({Int(-1), Int(0), Int(1)});  // x^2 - 1
  const upoly::QPoly b = upoly::to_q({Int(-1), Int(1)});          // x - 1
  const upoly::ExtGcd e = upoly::ext_gcd(a, b);
  EXPECT_EQ(e.g, upoly::to_q({Int(-1), Int(1)}));
  EXPECT_EQ(upoly::add(upoly::mul(e.s, a), upoly::mul(e.t, b)), e.g);
}
