#include <gtest/gtest.h>

#include "support/testing.hpp"
#include "tapsp/counters.hpp"
#include "tapsp/matprod.hpp"

namespace tapsp {
namespace {

using testing::random_matrix;

PolyMatrix direct_square(const PolyMatrix& b) {
  const std::size_t n = b.n, s = b.terms();
  PolyMatrix c{n, std::vector<BoolMatrix>(s == 0 ? 0 : 2 * s - 1, BoolMatrix(n, n))};
  for (std::size_t q1 = 0; q1 < s; ++q1)
    for (std::size_t q2 = 0; q2 < s; ++q2) c.coeffs[q1 + q2] |= bool_product(b.coeffs[q1], b.coeffs[q2]);
  return c;
}

TEST(DistProduct, NaiveSmallExample) {
  WeightMatrix a(2, 2), b(2, 2);
  a(0, 0) = 1;
  a(0, 1) = -2;
  b(0, 0) = 3;
  b(1, 0) = 4;
  const WeightMatrix c = dist_product_naive(a, b);
  EXPECT_EQ(c(0, 0), 2);
  EXPECT_TRUE(is_inf(c(0, 1)));
  EXPECT_TRUE(is_inf(c(1, 0)));
}

TEST(DistProduct, FastEqualsNaiveOnRandomMatrices) {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng.below(20), m = 1 + rng.below(20), c = 1 + rng.below(20);
    const Weight bound = 1 + static_cast<Weight>(rng.below(16));
    const double inf_rate = rng.uniform01() * 0.6;
    const WeightMatrix a = random_matrix(r, m, bound, inf_rate, rng);
    const WeightMatrix b = random_matrix(m, c, bound, inf_rate, rng);
    const WeightMatrix ref = dist_product_naive(a, b);
    EXPECT_EQ(dist_product_fast(a, b, EntryBound{bound}), ref);
    EXPECT_EQ(dist_product_fast(a, b, EntryBound{bound}, {RingKernel::strassen, 2}), ref);
    EXPECT_EQ(dist_product_fast(a, b), ref);
  }
}

TEST(DistProduct, AllInfinite) {
  const WeightMatrix a(3, 3), b(3, 3);
  EXPECT_EQ(dist_product_fast(a, b, EntryBound{4}), WeightMatrix(3, 3));
}

TEST(DistProduct, BoundViolationThrows) {
  WeightMatrix a(1, 1, 5);
  EXPECT_THROW(dist_product_fast(a, a, EntryBound{4}), ContractError);
}

TEST(DistProduct, ShapeMismatchThrows) {
  EXPECT_THROW(dist_product_naive(WeightMatrix(2, 3), WeightMatrix(2, 3)), ContractError);
  EXPECT_THROW(dist_product_fast(WeightMatrix(2, 3), WeightMatrix(2, 3)), ContractError);
}

TEST(DistProduct, NaiveIsAssociative) {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(10);
    const auto a = random_matrix(n, n, 8, 0.3, rng), b = random_matrix(n, n, 8, 0.3, rng),
               c = random_matrix(n, n, 8, 0.3, rng);
    EXPECT_EQ(dist_product_naive(dist_product_naive(a, b), c), dist_product_naive(a, dist_product_naive(b, c)));
  }
}

TEST(DistProduct, NaiveCountsRelaxations) {
  const WeightMatrix a(4, 4, 1);
  reset_op_counts();
  (void)dist_product_naive(a, a);
  EXPECT_EQ(op_counts().minplus_relax, 64U);
}

TEST(Truncate, NeverDecreasesAndKeepsSmallEntries) {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(7, 9, 20, 0.2, rng);
    const Weight t = static_cast<Weight>(rng.below(25));
    const auto tr = truncate(m, t);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        EXPECT_GE(tr(i, j), m(i, j));
        if (!is_inf(m(i, j)) && std::abs(m(i, j)) <= t) {
          EXPECT_EQ(tr(i, j), m(i, j));
        } else {
          EXPECT_TRUE(is_inf(tr(i, j)));
        }
      }
  }
}

TEST(Truncate, NegativeThresholdThrows) { EXPECT_THROW(truncate(WeightMatrix(1, 1), -1), ContractError); }

TEST(Truncate, ZeroKeepsOnlyZeros) {
  WeightMatrix m(1, 3);
  m(0, 0) = 0;
  m(0, 1) = 1;
  const auto t = truncate(m, 0);
  EXPECT_EQ(t(0, 0), 0);
  EXPECT_TRUE(is_inf(t(0, 1)));
}

TEST(Scaling, CeilingForBothSigns) {
  WeightMatrix m(1, 5);
  m(0, 0) = 7;
  m(0, 1) = -7;
  m(0, 2) = 6;
  m(0, 3) = -6;
  const auto s = scale_div_ceil(m, 3);
  EXPECT_EQ(s(0, 0), 3);
  EXPECT_EQ(s(0, 1), -2);
  EXPECT_EQ(s(0, 2), 2);
  EXPECT_EQ(s(0, 3), -2);
  EXPECT_TRUE(is_inf(s(0, 4)));
  EXPECT_THROW(scale_div_ceil(m, 0), ContractError);
}

TEST(Scaling, RoundedPathStaysWithinTwoK) {
  // Legs of 7 and 5 at k = 3: 3 * (3 + 2) = 15 lies in [12, 12 + 6].
  WeightMatrix a(1, 1, 7), b(1, 1, 5);
  const auto q = dist_product_naive(scale_div_ceil(a, 3), scale_div_ceil(b, 3));
  EXPECT_EQ(scale_mul(q, 3)(0, 0), 15);
}

TEST(Scaling, MulAndShiftLeaveInfinity) {
  WeightMatrix m(1, 2);
  m(0, 0) = -4;
  EXPECT_EQ(scale_mul(m, 3)(0, 0), -12);
  EXPECT_EQ(add_finite(m, 10)(0, 0), 6);
  EXPECT_TRUE(is_inf(scale_mul(m, 3)(0, 1)));
  EXPECT_TRUE(is_inf(add_finite(m, -10)(0, 1)));
}

TEST(WindowShift, KeepsClosedWindow) {
  WeightMatrix m(1, 5);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(0, 2) = 5;
  m(0, 3) = 6;
  const auto w = window_shift(m, 2, 5, 2);
  EXPECT_TRUE(is_inf(w(0, 0)));
  EXPECT_EQ(w(0, 1), 0);
  EXPECT_EQ(w(0, 2), 3);
  EXPECT_TRUE(is_inf(w(0, 3)));
  EXPECT_TRUE(is_inf(w(0, 4)));
}

TEST(MinMerge, Entrywise) {
  Rng rng(24);
  const auto a = random_matrix(5, 5, 9, 0.3, rng), b = random_matrix(5, 5, 9, 0.3, rng);
  const auto c = min_merge(a, b);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(c(i, j), std::min(a(i, j), b(i, j)));
  EXPECT_THROW(min_merge(a, WeightMatrix(4, 5)), ContractError);
}

TEST(BoolProduct, BitsetEqualsRing) {
  Rng rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng.below(70), m = 1 + rng.below(70), c = 1 + rng.below(70);
    const auto a = testing::random_bool(r, m, 0.1, rng), b = testing::random_bool(m, c, 0.1, rng);
    EXPECT_EQ(bool_product(a, b), bool_product_ring(a, b));
  }
}

TEST(PolySquare, MatchesDirectConvolution) {
  Rng rng(26);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(24), s = 1 + rng.below(9);
    PolyMatrix b{n, {}};
    const double density = rng.uniform01() * 0.8;
    for (std::size_t q = 0; q < s; ++q) b.coeffs.push_back(testing::random_bool(n, n, density, rng));
    EXPECT_EQ(poly_square(b), direct_square(b));
  }
}

TEST(PolySquare, DenseAllOnesNeverCarries) {
  // Every coefficient reaches its maximum count n * s here.
  const std::size_t n = 16, s = 7;
  BoolMatrix ones(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ones.set(i, j);
  const PolyMatrix b{n, std::vector<BoolMatrix>(s, ones)};
  const PolyMatrix c = poly_square(b);
  ASSERT_EQ(c.terms(), 2 * s - 1);
  for (const auto& plane : c.coeffs) EXPECT_TRUE(plane.all());
}

TEST(PolySquare, SinglePlaneIsBooleanProduct) {
  Rng rng(27);
  const auto a = testing::random_bool(9, 9, 0.3, rng);
  const PolyMatrix c = poly_square(PolyMatrix{9, {a}});
  ASSERT_EQ(c.terms(), 1U);
  EXPECT_EQ(c.coeffs[0], bool_product(a, a));
}

}  // namespace
}  // namespace tapsp
