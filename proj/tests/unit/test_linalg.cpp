#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "hopfkit/error.hpp"
#include "hopfkit/linalg.hpp"

using namespace hopfkit;

namespace {

Matrix random_matrix(const Ring& r, std::size_t rows, std::size_t cols, std::mt19937_64& rng, unsigned sparsity = 2) {
  Matrix m(rows, cols);
  for (auto& v : m.data)
    if (rng() % sparsity == 0) v = r.from_int(static_cast<std::int64_t>(rng() % r.characteristic()));
  return m;
}

std::vector<RingElement> random_vector(const Ring& r, std::size_t n, std::mt19937_64& rng) {
  std::vector<RingElement> v(n);
  for (auto& x : v) x = r.from_int(static_cast<std::int64_t>(rng() % r.characteristic()));
  return v;
}

// Rank by brute force over F_p for tiny matrices: the largest k such that
// some k x k minor is nonzero, with determinants by Laplace expansion.
std::int64_t det_mod(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::int64_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    const std::int64_t term = a[0][j] * det_mod(minor, p) % p;
    total = (total + (j % 2 ? p - term : term)) % p;
  }
  return total;
}

std::size_t brute_rank(const Ring& f, const Matrix& m) {
  const std::int64_t p = f.p();
  std::size_t best = 0;
  for (std::uint32_t rs = 1; rs < (1u << m.rows); ++rs)
    for (std::uint32_t cs = 1; cs < (1u << m.cols); ++cs) {
      const auto k = static_cast<std::size_t>(std::popcount(rs));
      if (k != static_cast<std::size_t>(std::popcount(cs)) || k <= best) continue;
      std::vector<std::vector<std::int64_t>> sub;
      for (std::size_t i = 0; i < m.rows; ++i) {
        if (!(rs >> i & 1)) continue;
        std::vector<std::int64_t> row;
        for (std::size_t j = 0; j < m.cols; ++j)
          if (cs >> j & 1) row.push_back(m(i, j).c[0]);
        sub.push_back(row);
      }
      if (det_mod(sub, p) != 0) best = k;
    }
  return best;
}

}  // namespace

TEST(Linalg, SolveFieldExamples) {
  const Ring f5 = Ring::make(5);
  auto s = solve_field(f5, Matrix::from_ints(f5, {{2}}), std::vector{f5.from_int(3)});
  ASSERT_TRUE(s.particular);
  EXPECT_EQ(*s.particular, std::vector{f5.from_int(4)});
  EXPECT_TRUE(s.kernel_basis.empty());

  s = solve_field(f5, Matrix::from_ints(f5, {{1, 1}}), std::vector{f5.zero()});
  ASSERT_TRUE(s.particular);
  EXPECT_EQ(*s.particular, (std::vector{f5.zero(), f5.zero()}));
  ASSERT_EQ(s.kernel_basis.size(), 1u);
  EXPECT_EQ(s.kernel_basis[0], (std::vector{f5.from_int(4), f5.from_int(1)}));

  s = solve_field(f5, Matrix::from_ints(f5, {{0}}), std::vector{f5.one()});
  EXPECT_FALSE(s.particular);
}

TEST(Linalg, HenselExamples) {
  const Ring z25 = Ring::make(5, 2);
  EXPECT_EQ(hensel_solve(z25, Matrix::from_ints(z25, {{7}}), std::vector{z25.from_int(3)}),
            std::vector{z25.from_int(4)});
  const std::vector v{z25.from_int(17), z25.from_int(3), z25.from_int(20)};
  EXPECT_EQ(hensel_solve(z25, Matrix::identity(z25, 3), v), v);
  try {
    hensel_solve(z25, Matrix::from_ints(z25, {{5}}), std::vector{z25.from_int(5)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularModP);
  }
}

TEST(LinalgProperty, FieldSolutionsAndKernels) {
  std::mt19937_64 rng(5);
  for (const Ring f : {Ring::make(3), Ring::make(7), Ring::make(2, 1, 3), Ring::make(5, 1, 2)}) {
    for (int t = 0; t < 60; ++t) {
      const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
      const Matrix m = random_matrix(f, rows, cols, rng);
      const auto x = random_vector(f, cols, rng);
      const auto rhs = multiply(f, m, x);
      const auto s = solve_field(f, m, rhs);
      ASSERT_TRUE(s.particular);
      EXPECT_EQ(multiply(f, m, *s.particular), rhs);
      EXPECT_EQ(s.rank + s.kernel_basis.size(), cols);
      EXPECT_EQ(rank_field(f, m), s.rank);
      for (const auto& k : s.kernel_basis)
        for (const auto& v : multiply(f, m, k)) EXPECT_TRUE(f.is_zero(v));
    }
  }
}

TEST(LinalgProperty, RankAgreesWithMinors) {
  std::mt19937_64 rng(9);
  const Ring f = Ring::make(3);
  for (int t = 0; t < 80; ++t) {
    const Matrix m = random_matrix(f, 1 + rng() % 4, 1 + rng() % 4, rng);
    EXPECT_EQ(rank_field(f, m), brute_rank(f, m));
  }
}

TEST(LinalgProperty, EchelonSolvesManyRightHandSides) {
  std::mt19937_64 rng(21);
  const Ring f = Ring::make(5);
  const Matrix m = random_matrix(f, 7, 5, rng);
  Echelon e(f, m.cols, true);
  for (std::size_t i = 0; i < m.rows; ++i)
    e.add_row(to_sparse(f, std::span(m.data).subspan(i * m.cols, m.cols)));
  EXPECT_EQ(e.rank(), rank_field(f, m));
  for (int t = 0; t < 20; ++t) {
    const auto rhs = multiply(f, m, random_vector(f, m.cols, rng));
    const auto x = e.solve(rhs);
    ASSERT_TRUE(x);
    EXPECT_EQ(multiply(f, m, *x), rhs);
  }
}

TEST(LinalgProperty, HenselSolveAndInverse) {
  std::mt19937_64 rng(13);
  for (const Ring r : {Ring::make(5, 3), Ring::make(2, 5, 2), Ring::make(3, 2, 3)}) {
    const Ring f = r.residue_field();
    int solved = 0;
    while (solved < 30) {
      const std::size_t n = 1 + rng() % 5;
      const Matrix m = random_matrix(r, n, n, rng, 1);
      Matrix mf(n, n);
      for (std::size_t i = 0; i < m.data.size(); ++i) mf.data[i] = reduce(r, m.data[i], f);
      if (rank_field(f, mf) != n) continue;
      ++solved;
      const auto rhs = random_vector(r, n, rng);
      EXPECT_EQ(multiply(r, m, hensel_solve(r, m, rhs)), rhs);
      const Matrix inv = invert_matrix(r, m);
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<RingElement> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = inv(i, j);
        auto img = multiply(r, m, col);
        for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(img[i], i == j ? r.one() : r.zero());
      }
    }
  }
}

TEST(LinalgProperty, TallHenselSolve) {
  const Ring r = Ring::make(7, 3);
  const Matrix m = Matrix::from_ints(r, {{1, 0}, {0, 1}, {1, 1}, {2, 3}});
  const std::vector x{r.from_int(100), r.from_int(201)};
  EXPECT_EQ(hensel_solve_full_rank(r, m, multiply(r, m, x)), x);
  auto bad = multiply(r, m, x);
  bad[3] = r.add(bad[3], r.from_int(49));
  EXPECT_THROW(hensel_solve_full_rank(r, m, bad), Error);
}
