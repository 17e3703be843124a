#include <gtest/gtest.h>

#include <random>

#include "hopf_fusion/builtins.hpp"
#include "hopf_fusion/linalg.hpp"
#include "hopf_fusion/polynomial.hpp"

using namespace hopf_fusion;

namespace {

Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = f->element(std::uint32_t(rng() % f->order()));
  return m;
}

} // namespace

TEST(Linalg, SolveReproducesRightHandSide) {
  FieldPtr f = Field::construct(7, 1);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix a = random_matrix(f, 6, 6, rng);
    if (!inverse(a))
      continue;
    Vector b(6);
    for (auto& x : b)
      x = f->element(std::uint32_t(rng() % 7));
    auto x = solve(a, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(a * *x, b);
    EXPECT_EQ(*inverse(a) * a, Matrix::identity(f, 6));
  }
}

TEST(Linalg, RankNullity) {
  FieldPtr f = Field::construct(5, 2);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix a = random_matrix(f, r, c, rng);
    if (trial % 3 == 0 && r > 1)  // force a dependency
      for (std::size_t j = 0; j < c; ++j)
        a(r - 1, j) = a(0, j) * f->from_int(2);
    auto ker = kernel(a);
    EXPECT_EQ(rank(a) + ker.size(), c);
    for (const auto& k : ker)
      EXPECT_TRUE(is_zero(a * k));
  }
}

TEST(Linalg, CommonKernelIntersects) {
  FieldPtr f = Field::construct(7, 1);
  Matrix a(f, 1, 3), b(f, 1, 3);
  a(0, 0) = f->one();  // x = 0
  b(0, 1) = f->one();  // y = 0
  Matrix k = common_kernel(f, 3, 2, [&](std::size_t i) { return i == 0 ? a : b; });
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_TRUE(k(0, 0).is_zero());
  EXPECT_TRUE(k(1, 0).is_zero());
  EXPECT_FALSE(k(2, 0).is_zero());
}

TEST(Polynomial, IrreducibleQuadraticStaysWhole) {
  FieldPtr f = Field::construct(7, 1);
  Polynomial q(f, {f->from_int(1), f->zero(), f->one()});  // x^2 + 1, -1 is a non-residue mod 7
  for (int x = 0; x < 7; ++x)
    ASSERT_FALSE(q(f->from_int(x)).is_zero());
  Factorization fac = factor_poly(q);
  ASSERT_EQ(fac.factors.size(), 1u);
  EXPECT_EQ(fac.factors[0].first, q);
  EXPECT_EQ(fac.factors[0].second, 1);
}

TEST(Polynomial, FactorizationMultipliesBack) {
  FieldPtr f = Field::construct(5, 2);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<FieldElement> c(1 + rng() % 8);
    for (auto& x : c)
      x = f->element(std::uint32_t(rng() % 25));
    c.back() = f->one();
    Polynomial p(f, c);
    Factorization fac = factor_poly(p, std::uint64_t(trial));
    Polynomial prod = Polynomial::constant(f, fac.unit);
    for (const auto& [factor, mult] : fac.factors) {
      for (int i = 0; i < mult; ++i)
        prod = prod * factor;
      EXPECT_EQ(factor.leading(), f->one());
    }
    EXPECT_EQ(prod, p);
  }
}

TEST(Polynomial, MinimalPolynomialAnnihilates) {
  FieldPtr f = Field::construct(7, 1);
  std::mt19937_64 rng(5);
  Matrix a = random_matrix(f, 4, 4, rng);
  Polynomial mp = minimal_polynomial(a);
  Matrix acc(f, 4, 4);
  Matrix power = Matrix::identity(f, 4);
  for (int i = 0; i <= mp.degree(); ++i) {
    acc = acc + power.scaled(mp.coeff(std::size_t(i)));
    power = power * a;
  }
  EXPECT_TRUE(acc.is_zero());
}

// The class sums of S3 split its center into three projectors.
TEST(Linalg, SplitCenterOfS3) {
  FieldPtr f = Field::construct(7, 1);
  HopfAlgebra h = group_algebra(symmetric_group_s3(), f);
  std::vector<Matrix> ops;
  CayleyTable g = symmetric_group_s3();
  // conjugacy class sums as left multiplication operators
  std::vector<std::vector<int>> classes{{0}, {1, 2, 5}, {3, 4}};
  for (const auto& cls : classes) {
    Vector s = h.zero();
    for (int x : cls)
      s[std::size_t(x)] += f->one();
    ops.push_back(h.left_regular(s));
  }
  auto proj = split_commutative_algebra(ops);
  ASSERT_EQ(proj.size(), 3u);
  Matrix sum(f, 6, 6);
  for (std::size_t a = 0; a < 3; ++a) {
    sum = sum + proj[a];
    for (std::size_t b = 0; b < 3; ++b)
      EXPECT_EQ(proj[a] * proj[b], a == b ? proj[a] : Matrix(f, 6, 6));
  }
  EXPECT_EQ(sum, Matrix::identity(f, 6));
}
