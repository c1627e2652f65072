/*
   Copyright 2026 The loopvir Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "loopvir/linalg.hpp"
#include "oracles.hpp"

namespace {

using namespace loopvir;

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int zero_bias) {
  Matrix m(rows, cols);
  std::uniform_int_distribution<int> coin(0, zero_bias);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(rng) == 0) m(r, c) = fixtures::small_rational(rng);
  return m;
}

std::vector<std::vector<oracle::Q>> rows_of(const Matrix& m) {
  std::vector<std::vector<oracle::Q>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

TEST(Linalg, KernelOfRankOneMatrix) {
  const Matrix m{{1, 2}, {2, 4}};
  EXPECT_EQ(rank(m), 1u);
  const auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (Vector{Scalar(1), make_scalar(-1, 2)}));
}

TEST(Linalg, RrefOfSmallMatrix) {
  const auto r = rref(Matrix{{0, 2, 4}, {1, 1, 1}, {1, 3, 5}});
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.reduced, (Matrix{{1, 0, -1}, {0, 1, 2}, {0, 0, 0}}));
}

TEST(Linalg, EmptyAndZeroMatrices) {
  EXPECT_EQ(rank(Matrix(0, 3)), 0u);
  EXPECT_EQ(kernel_basis(Matrix(0, 3)).size(), 3u);
  EXPECT_EQ(kernel_basis(Matrix(2, 2)).size(), 2u);
  EXPECT_TRUE(kernel_basis(Matrix::identity(3)).empty());
  EXPECT_EQ(row_space(Matrix(2, 3)).rows(), 0u);
}

TEST(Linalg, SolveConsistentAndInconsistent) {
  const Matrix m{{1, 1}, {1, -1}};
  const auto x = solve(m, {Scalar(3), Scalar(1)});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (Vector{Scalar(2), Scalar(1)}));
  EXPECT_FALSE(solve(Matrix{{1, 1}, {2, 2}}, {Scalar(1), Scalar(3)}));
}

TEST(Linalg, RandomInvariants) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const Matrix m = random_matrix(rng, rows, cols, trial % 3);
    const auto rk = rank(m);
    EXPECT_EQ(rk, oracle::rank(rows_of(m)));

    const auto ker = kernel_basis(m);
    EXPECT_EQ(rk + ker.size(), cols);
    for (const auto& v : ker) {
      EXPECT_TRUE(is_zero_vector(m * v));
      const auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return s != 0; });
      ASSERT_NE(lead, v.end());
      EXPECT_EQ(*lead, Scalar(1));
    }

    const Matrix rs = row_space(m);
    EXPECT_EQ(rs.rows(), rk);
    Matrix both = m;
    both.append_rows(rs);
    EXPECT_EQ(rank(both), rk);

    // rank is invariant under row shuffles and transposition
    std::vector<std::size_t> order(rows);
    for (std::size_t i = 0; i < rows; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    Matrix shuffled(0, cols), transposed(cols, rows);
    for (auto i : order) shuffled.append_row(m.row(i));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) transposed(c, r) = m(r, c);
    EXPECT_EQ(rank(shuffled), rk);
    EXPECT_EQ(rank(transposed), rk);

    // solve recovers a solution for right-hand sides in the column space
    Vector x(cols);
    for (auto& s : x) s = fixtures::small_rational(rng);
    const Vector b = m * x;
    const auto y = solve(m, b);
    ASSERT_TRUE(y);
    EXPECT_EQ(m * *y, b);
  }
}

TEST(Linalg, ProductAssociates) {
  std::mt19937 rng(29);
  const Matrix a = random_matrix(rng, 3, 4, 1), b = random_matrix(rng, 4, 2, 1);
  Vector v{Scalar(1), make_scalar(-2, 3)};
  EXPECT_EQ((a * b) * v, a * (b * v));
  EXPECT_EQ(Matrix::identity(3) * a, a);
}

TEST(Linalg, DimensionMismatchThrows) {
  EXPECT_THROW(Matrix::identity(2) * Vector(3), std::invalid_argument);
  Matrix m(0, 2);
  EXPECT_THROW(m.append_row(Vector(3)), std::invalid_argument);
}

}  // namespace
