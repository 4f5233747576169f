#include "bjorner/matrices.hpp"
#include "bjorner/tnn.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace bjorner {
namespace {

// Independent enumeration: every minor through the Leibniz expansion, in the
// same canonical order, stopping at the first negative one.
TnnVerdict naive_verdict(const ExactMatrix& m) {
  TnnVerdict v;
  const Index top = std::min(m.rows(), m.cols());
  for (Index k = 1; k <= top; ++k) {
    std::vector<Index> r = detail::first_combination(k);
    do {
      std::vector<Index> c = detail::first_combination(k);
      do {
        ++v.checked_minors;
        const Rational val = testing::leibniz_determinant(testing::submatrix(m, r, c));
        if (val < 0) {
          v.holds = false;
          v.witness = MinorWitness{r, c, val};
          return v;
        }
      } while (detail::next_combination(c, m.cols()));
    } while (detail::next_combination(r, m.rows()));
  }
  return v;
}

TEST(Tnn, FaceMatrixOfTheCube) {
  const TnnVerdict v = all_minors_nonnegative(face_matrix_g(3));
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.checked_minors, 14u);  // C(4,1)C(2,1) + C(4,2)C(2,2)
  EXPECT_FALSE(v.witness.has_value());
}

TEST(Tnn, NegativeDeterminantWitness) {
  const TnnVerdict v = all_minors_nonnegative(ExactMatrix{{1, 2}, {3, 4}});
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->rows, (std::vector<Index>{0, 1}));
  EXPECT_EQ(v.witness->cols, (std::vector<Index>{0, 1}));
  EXPECT_EQ(v.witness->value, -2);
  EXPECT_EQ(v.checked_minors, 5u);
}

TEST(Tnn, ZeroMatrixHolds) {
  EXPECT_TRUE(all_minors_nonnegative(ExactMatrix{{0}}).holds);
  EXPECT_TRUE(all_minors_nonnegative(ExactMatrix::zero(0, 0)).holds);
}

TEST(Tnn, NegativeEntryIsFirstWitness) {
  const TnnVerdict v = all_minors_nonnegative(ExactMatrix{{1, 2}, {-1, 4}});
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->rows, (std::vector<Index>{1}));
  EXPECT_EQ(v.witness->cols, (std::vector<Index>{0}));
  EXPECT_EQ(v.checked_minors, 3u);
}

TEST(Tnn, TwoByTwo) {
  EXPECT_TRUE(two_by_two_check(face_matrix_g(5)).holds);
  EXPECT_FALSE(two_by_two_check(ExactMatrix{{1, 2}, {3, 4}}).holds);
  EXPECT_TRUE(two_by_two_check(ExactMatrix{{1, 0, 5, 2}}).holds);
  // a 3x3 with non-negative 2x2 minors but negative determinant
  const ExactMatrix m{{1, 1, 0}, {1, 1, 1}, {0, 1, 1}};
  EXPECT_TRUE(two_by_two_check(m).holds);
  EXPECT_FALSE(all_minors_nonnegative(m).holds);
}

TEST(Tnn, MaxOrderCapsEnumeration) {
  const TnnVerdict v = all_minors_nonnegative(face_matrix_g(6), Index{1});
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.checked_minors, 7u * 4u);
}

TEST(Tnn, MatchesNaiveEnumeration) {
  auto rng = testing::make_rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const Index r = static_cast<Index>(testing::uniform(rng, 1, 5));
    const Index c = static_cast<Index>(testing::uniform(rng, 1, 5));
    const ExactMatrix m = trial % 2 ? testing::random_integer_matrix(rng, r, c, -1, 6)
                                    : testing::random_integer_matrix(rng, r, c, 0, 3);
    EXPECT_EQ(all_minors_nonnegative(m), naive_verdict(m)) << m;
  }
}

TEST(Tnn, ParallelEqualsSerial) {
  auto rng = testing::make_rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = static_cast<Index>(testing::uniform(rng, 2, 6));
    const ExactMatrix m = trial % 3 ? testing::random_tnn_matrix(rng, n, 12)
                                    : testing::random_integer_matrix(rng, n, n + 1, -1, 9);
    const TnnVerdict serial = all_minors_nonnegative(m);
    for (unsigned threads : {2u, 4u, 8u}) EXPECT_EQ(all_minors_nonnegative(m, TnnOptions{{}, threads}), serial);
  }
}

TEST(Tnn, RationalEntries) {
  const ExactMatrix m{{make_rational(1, 2), make_rational(1, 3)}, {make_rational(1, 3), make_rational(1, 4)}};
  const TnnVerdict v = all_minors_nonnegative(m);
  EXPECT_TRUE(v.holds);  // det = 1/8 - 1/9 > 0
  const ExactMatrix n{{make_rational(1, 3), make_rational(1, 2)}, {make_rational(1, 4), make_rational(1, 3)}};
  const TnnVerdict w = all_minors_nonnegative(n);
  ASSERT_FALSE(w.holds);
  EXPECT_EQ(w.witness->value, make_rational(1, 9) - make_rational(1, 8));
}

TEST(Scale, Basics) {
  const ExactMatrix x{{1, 2}, {3, 4}};
  const std::vector<Rational> ones{1, 1};
  EXPECT_EQ(scale(x, ones, ones), x);
  const std::vector<Rational> zero_first{0, 1};
  EXPECT_EQ(scale(x, zero_first, ones), (ExactMatrix{{0, 0}, {3, 4}}));
  const std::vector<Rational> neg{-1, 1};
  EXPECT_THROW(scale(x, neg, ones), std::invalid_argument);
  EXPECT_THROW(scale(x, std::vector<Rational>{1}, ones), std::invalid_argument);
}

TEST(Scale, TurnsPlusWindowIntoMinusWindow) {
  // A_-(i,j) = (i+1)/(j+1) * C(j+1, i-j): scale the unsigned C(j+1, i-j)
  // window by a(i) = i+1, b(j) = 1/(j+1).
  for (unsigned d = 0; d <= 12; ++d) {
    const Index rows = d + 1, cols = d / 2 + 1;
    const ExactMatrix base = ExactMatrix::generate(rows, cols, [](Index i, Index j) {
      return Rational(binom(static_cast<std::int64_t>(j) + 1, static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j)));
    });
    std::vector<Rational> a(rows), b(cols);
    for (Index i = 0; i < rows; ++i) a[i] = static_cast<long>(i + 1);
    for (Index j = 0; j < cols; ++j) b[j] = make_rational(1, static_cast<long>(j + 1));
    EXPECT_EQ(scale(base, a, b), left_factor(Parity::minus, rows, cols)) << d;
  }
}

TEST(Scale, PreservesTnn) {
  auto rng = testing::make_rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = static_cast<Index>(testing::uniform(rng, 2, 5));
    const ExactMatrix m = testing::random_tnn_matrix(rng, n, 10);
    ASSERT_TRUE(all_minors_nonnegative(m).holds);
    std::vector<Rational> a(n), b(n);
    for (auto& w : a) w = make_rational(testing::uniform(rng, 0, 5), testing::uniform(rng, 1, 5));
    for (auto& w : b) w = make_rational(testing::uniform(rng, 0, 5), testing::uniform(rng, 1, 5));
    EXPECT_TRUE(all_minors_nonnegative(scale(m, a, b)).holds);
  }
}

TEST(LatticePaths, Examples) {
  EXPECT_EQ(lattice_path_count({1, 2}), 3);
  EXPECT_EQ(lattice_path_count({0, 0}), 1);
  EXPECT_EQ(lattice_path_count({2, 1}), 0);
}

TEST(LatticePaths, MatchBinomial) {
  for (unsigned j = 0; j <= 12; ++j)
    for (unsigned k = 0; k <= 12; ++k)
      EXPECT_EQ(lattice_path_count({j, k}), binom(k + j, 2 * j)) << j << "," << k;
}

TEST(ProductClosure, FactorizationInstance) {
  const std::vector<ExactMatrix> f{left_factor(Parity::minus, 4, 2), g_right_factor(Parity::minus, 1)};
  const ProductClosureReport r = product_closure_check(f);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.product, face_matrix_g(3));
}

TEST(ProductClosure, Identities) {
  const std::vector<ExactMatrix> f{ExactMatrix::identity(3), ExactMatrix::identity(3)};
  EXPECT_TRUE(product_closure_check(f).holds());
}

TEST(ProductClosure, BadFactor) {
  const std::vector<ExactMatrix> f{ExactMatrix{{1, 2}, {3, 4}}, ExactMatrix::identity(2)};
  const ProductClosureReport r = product_closure_check(f);
  EXPECT_FALSE(r.factors_hold());
  EXPECT_FALSE(r.factors[0].holds);
  EXPECT_TRUE(r.factors[1].holds);
  EXPECT_FALSE(r.holds());
}

TEST(ProductClosure, DimensionMismatch) {
  const std::vector<ExactMatrix> f{ExactMatrix::identity(2), ExactMatrix::identity(3)};
  EXPECT_THROW(product_closure_check(f), std::invalid_argument);
}

TEST(Reversal, PreservesVerdict) {
  auto rng = testing::make_rng(24);
  for (int trial = 0; trial < 60; ++trial) {
    const ExactMatrix m = trial % 2 ? testing::random_tnn_matrix(rng, 4, 8)
                                    : testing::random_integer_matrix(rng, 3, 4, -1, 5);
    EXPECT_EQ(all_minors_nonnegative(m).holds, all_minors_nonnegative(reverse_both(m)).holds);
  }
}

}  // namespace
}  // namespace bjorner
