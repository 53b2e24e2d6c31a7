#include "common.hpp"

using namespace wbh;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse("-2").str(), "-2");
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(Mat, PermutationSendsBasisVectors) {
  auto P = permutation_matrix<Rational>({1, 2, 0});
  // e_0 -> e_1, e_1 -> e_2, e_2 -> e_0
  EXPECT_EQ(P, (Mat{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(P * P * P, Mat::identity(3));
}

TEST(Mat, KronIndexing) {
  Mat a{{1, 2}, {3, 4}};
  Mat b{{0, 5, 1}, {6, 7, 2}};
  auto k = kron(a, b);
  ASSERT_EQ(k.rows(), 4u);
  ASSERT_EQ(k.cols(), 6u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 3; ++q) EXPECT_EQ(k(i * 2 + p, j * 3 + q), a(i, j) * b(p, q));
}

TEST(Mat, MixedProduct) {
  Mat a{{1, 2}, {0, 1}}, c{{2, 0}, {1, 1}};
  Mat b{{1, -1}, {3, 2}}, d{{0, 1}, {1, 0}};
  EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
}

TEST(Mat, FlipSwapsFactors) {
  auto f = flip<Rational>(2, 3);
  Mat a{{1, 2}, {3, 4}};
  Mat b{{1, 0, 2}, {0, 1, 0}, {5, 0, 1}};
  EXPECT_EQ(f * kron(a, b), kron(b, a) * flip<Rational>(2, 3));
}

TEST(Mat, FirstDifferenceWitness) {
  Mat a{{1, 2}, {3, 4}};
  Mat b = a;
  EXPECT_FALSE(first_difference(a, b));
  b(1, 0) = 7;
  auto w = first_difference(a, b);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->row, 1u);
  EXPECT_EQ(w->col, 0u);
}

TEST(Linalg, SplitIdempotent) {
  auto e = Mat::diag({1, 1, 0, 0});
  auto s = split_idempotent(e);
  EXPECT_EQ(s.rank, 2u);
  EXPECT_EQ(s.p * s.i, Mat::identity(2));
  EXPECT_EQ(s.i * s.p, e);
  EXPECT_THROW(split_idempotent(Mat{{1, 1}, {0, 2}}), NotIdempotent);
}

TEST(Linalg, SplitNonDiagonalIdempotent) {
  Mat e{{1, 1}, {0, 0}};  // e·ε on Z2
  auto s = split_idempotent(e);
  EXPECT_EQ(s.rank, 1u);
  EXPECT_EQ(s.p * s.i, Mat::identity(1));
  EXPECT_EQ(s.i * s.p, e);
}

TEST(Linalg, KernelOfRowVector) {
  auto k = kernel_basis(Mat{{1, 1}});
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k, (Mat{{-1}, {1}}));
}

TEST(Linalg, CokernelOfColumn) {
  auto c = cokernel_projection(Mat{{1}, {1}});
  EXPECT_EQ(c.dim, 1u);
  EXPECT_TRUE((c.proj * Mat{{1}, {1}}).is_zero());
  EXPECT_EQ(rank(c.proj), 1u);
}

TEST(Linalg, Inverse) {
  EXPECT_EQ(invert(Mat::diag({2, 3})), Mat::diag({Rational(1, 2), Rational(1, 3)}));
  try {
    invert(Mat{{1, 2}, {2, 4}});
    FAIL() << "expected NotInvertible";
  } catch (const NotInvertible& e) {
    EXPECT_EQ(e.rank(), 1u);
  }
}

TEST(Linalg, OneSidedInverses) {
  Mat p{{1, 0, 1}, {0, 1, 1}};
  EXPECT_EQ(p * right_inverse(p), Mat::identity(2));
  auto c = transpose(p);
  EXPECT_EQ(left_inverse(c) * c, Mat::identity(2));
}

TEST(Linalg, SolveAffine) {
  auto s = solve_affine(Mat{{1, 1}, {1, -1}}, Mat{{3}, {1}});
  ASSERT_TRUE(s.consistent);
  EXPECT_EQ(s.particular, (Mat{{2}, {1}}));
  EXPECT_EQ(s.homogeneous.cols(), 0u);
  auto bad = solve_affine(Mat{{1, 1}, {2, 2}}, Mat{{1}, {3}});
  EXPECT_FALSE(bad.consistent);
  EXPECT_EQ(bad.rank, 1u);
  EXPECT_EQ(bad.augmented_rank, 2u);
}

TEST(Linalg, NZGammaNotInvertible) {
  auto P = build_pipeline(nz());
  try {
    invert(P.galois.gamma.matrix());
    FAIL() << "expected NotInvertible";
  } catch (const NotInvertible& e) {
    EXPECT_EQ(e.rank(), 3u);
  }
}

TEST(Linalg, FloatModeUsesTolerance) {
  BasicMat<double> a{{1.0, 1e-12}, {0.0, 1.0}};
  EXPECT_EQ(rank(a), 2u);
  BasicMat<double> b{{1.0, 2.0}, {2.0, 4.0 + 1e-12}};
  EXPECT_EQ(rank(b), 1u);
}
