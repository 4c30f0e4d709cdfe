#include "picard/errors.hpp"
#include "picard/smith.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace picard;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

void expect_smith_contract(const IntMatrix& a, const SmithDecomposition& d) {
  ASSERT_EQ(d.u.rows(), a.rows());
  ASSERT_EQ(d.v.rows(), a.cols());
  EXPECT_EQ(d.u * a * d.v, d.s);
  Integer du = abs(determinant(d.u));
  Integer dv = abs(determinant(d.v));
  EXPECT_EQ(du, 1);
  EXPECT_EQ(dv, 1);
  Vector diag = d.diagonal();
  for (std::size_t r = 0; r < d.s.rows(); ++r)
    for (std::size_t c = 0; c < d.s.cols(); ++c)
      if (r != c) EXPECT_EQ(d.s(r, c), 0);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    EXPECT_GE(diag[i], 0);
    if (i + 1 < diag.size() && diag[i] != 0) EXPECT_EQ(diag[i + 1] % diag[i], 0);
    if (diag[i] == 0 && i + 1 < diag.size()) EXPECT_EQ(diag[i + 1], 0);
  }
}

}  // namespace

TEST(Smith, DiagonalTwoThree) {
  IntMatrix a{{2, 0}, {0, 3}};
  auto d = smith_normal_form(a);
  expect_smith_contract(a, d);
  EXPECT_EQ(d.s, (IntMatrix{{1, 0}, {0, 6}}));
}

TEST(Smith, TwoByTwo) {
  IntMatrix a{{2, 4}, {6, 8}};
  auto d = smith_normal_form(a);
  expect_smith_contract(a, d);
  EXPECT_EQ(d.s, (IntMatrix{{2, 0}, {0, 4}}));
  EXPECT_EQ(d.rank, 2u);
}

TEST(Smith, Identity) {
  for (std::size_t n = 0; n < 5; ++n) {
    auto d = smith_normal_form(IntMatrix::identity(n));
    EXPECT_EQ(d.s, IntMatrix::identity(n));
  }
}

TEST(Smith, EmptyShapes) {
  for (auto [r, c] : {std::pair<std::size_t, std::size_t>{0, 3}, {3, 0}, {0, 0}}) {
    IntMatrix a(r, c);
    auto d = smith_normal_form(a);
    expect_smith_contract(a, d);
    EXPECT_EQ(d.rank, 0u);
  }
}

TEST(Smith, HugeEntriesLeaveFastPath) {
  IntMatrix a{{1, 0}, {0, 1}};
  a(0, 0) = Integer("123456789012345678901234567890");
  a(0, 1) = Integer("98765432109876543210");
  a(1, 0) = Integer("-5555555555555555555555");
  a(1, 1) = 7;
  auto d = smith_normal_form(a);
  expect_smith_contract(a, d);
  EXPECT_EQ(d.diagonal()[0] * d.diagonal()[1], abs(determinant(a)));
}

TEST(Smith, RandomContract) {
  std::mt19937_64 rng(20241);
  std::uniform_int_distribution<std::size_t> dim(0, 12);
  for (int it = 0; it < 500; ++it) {
    IntMatrix a = random_matrix(rng, dim(rng), dim(rng), 9);
    auto d = smith_normal_form(a);
    expect_smith_contract(a, d);
    if (HasFailure()) {
      ADD_FAILURE() << "matrix " << to_string(a);
      return;
    }
  }
}

TEST(Solve, Examples) {
  auto x = solve_linear(IntMatrix{{2}}, Vector{4});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 2);
  EXPECT_FALSE(solve_linear(IntMatrix{{2}}, Vector{3}));
  IntMatrix a{{2, 3}};
  auto y = solve_linear(a, Vector{1});
  ASSERT_TRUE(y);
  EXPECT_EQ(a * *y, Vector{1});
  EXPECT_THROW(solve_linear(a, Vector{1, 2}), InputError);
}

TEST(Solve, RandomConsistency) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int it = 0; it < 300; ++it) {
    IntMatrix a = random_matrix(rng, dim(rng), dim(rng), 5);
    Vector x0(a.cols());
    std::uniform_int_distribution<int> e(-4, 4);
    for (auto& v : x0) v = e(rng);
    Vector b = a * x0;
    auto x = solve_linear(a, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(a * *x, b);
    // perturbed right-hand sides: any reported solution must be genuine
    Vector b2 = b;
    b2[0] += 1;
    if (auto z = solve_linear(a, b2)) EXPECT_EQ(a * *z, b2);
  }
}

TEST(Solve, ObstructionIsGenuine) {
  // 2x + 4y = 1 has no integer solution; brute force agrees on a box.
  IntMatrix a{{2, 4}};
  EXPECT_FALSE(solve_linear(a, Vector{1}));
  IntMatrix b{{1, 1}, {1, 1}};
  EXPECT_FALSE(solve_linear(b, Vector{1, 2}));
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(IntMatrix::identity(2)).cols(), 0u);
  IntMatrix a{{2, -2}};
  IntMatrix k = kernel_basis(a);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_TRUE((a * k).is_zero());
  EXPECT_EQ(abs(k(0, 0)), 1);
  EXPECT_EQ(k(0, 0), k(1, 0));
  IntMatrix z(1, 3);
  IntMatrix kz = kernel_basis(z);
  EXPECT_EQ(kz.cols(), 3u);
  EXPECT_EQ(abs(determinant(kz)), 1);
}

TEST(Kernel, BruteForceMembership) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 60; ++it) {
    IntMatrix a = random_matrix(rng, 2, 3, 3);
    IntMatrix k = kernel_basis(a);
    EXPECT_TRUE((a * k).is_zero());
    Lattice span = Lattice::spanned_by(k);
    for (int x = -3; x <= 3; ++x)
      for (int y = -3; y <= 3; ++y)
        for (int z = -3; z <= 3; ++z) {
          Vector v{x, y, z};
          if (is_zero(a * v)) EXPECT_TRUE(span.contains(v));
        }
  }
}

TEST(Lattice, CoordinatesAndReduce) {
  Lattice l = Lattice::spanned_by(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_TRUE(l.contains(Vector{4, 9}));
  EXPECT_FALSE(l.contains(Vector{1, 0}));
  auto c = l.coordinates(Vector{4, -3});
  ASSERT_TRUE(c);
  EXPECT_EQ(l.basis() * *c, (Vector{4, -3}));
  EXPECT_EQ(l.reduce(Vector{5, 7}), l.reduce(Vector{1, 1}));
  EXPECT_NE(l.reduce(Vector{1, 0}), l.reduce(Vector{0, 0}));
}

TEST(Lattice, Preimage) {
  // {x : 2x in 4Z} = 2Z
  Lattice t = Lattice::spanned_by(IntMatrix{{4}});
  Lattice p = preimage(IntMatrix{{2}}, t);
  EXPECT_TRUE(p.contains(Vector{2}));
  EXPECT_FALSE(p.contains(Vector{1}));
  Lattice q = preimage(IntMatrix{{1, -1}}, Lattice::spanned_by(IntMatrix{{2}}));
  EXPECT_TRUE(q.contains(Vector{1, 1}));
  EXPECT_TRUE(q.contains(Vector{2, 0}));
  EXPECT_FALSE(q.contains(Vector{1, 0}));
}

TEST(Determinant, Known) {
  EXPECT_EQ(determinant(IntMatrix{{2, 4}, {6, 8}}), -8);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}), -3);
}
