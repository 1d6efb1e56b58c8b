#pragma once

// Linear solvers over the coefficient rings: Gaussian elimination over a
// residue field F_q, and p-adic (Hensel) lifting of solutions to GR(p^n, m).

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hopfkit/coeffring.hpp"

namespace hopfkit {

/// Sparse vector as (index, value) pairs with strictly increasing indices.
using SparseVector = std::vector<std::pair<std::uint32_t, RingElement>>;

/// Dense row-major matrix of ring elements.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<RingElement> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  RingElement& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const RingElement& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  static Matrix identity(const Ring& ring, std::size_t n);
  static Matrix from_ints(const Ring& ring, const std::vector<std::vector<std::int64_t>>& rows);
};

std::vector<RingElement> multiply(const Ring& ring, const Matrix& m, std::span<const RingElement> x);

struct LinearSolution {
  std::optional<std::vector<RingElement>> particular;
  std::vector<std::vector<RingElement>> kernel_basis;
  std::size_t rank = 0;
};

/// Row echelon factorization of a matrix over a field, built row by row.
///
/// Pivot choice is deterministic: rows are inserted in input order, and the
/// pivot of each newly independent row is its first nonzero column after
/// reduction. With `track_combinations`, the factorization can solve any
/// number of right-hand sides; solutions set every non-pivot unknown to 0.
class Echelon {
 public:
  Echelon(const Ring& field, std::size_t cols, bool track_combinations);
  ~Echelon();
  Echelon(Echelon&&) noexcept;
  Echelon& operator=(Echelon&&) noexcept;

  /// Appends a row; returns true iff it was independent of the previous rows.
  bool add_row(const SparseVector& row);

  std::size_t rank() const;
  std::size_t cols() const;
  std::size_t rows() const;
  const Ring& field() const;

  /// A solution of (all inserted rows) x = rhs, or nullopt if inconsistent.
  /// Requires track_combinations.
  std::optional<std::vector<RingElement>> solve(std::span<const RingElement> rhs) const;
  /// Basis of the right kernel, one vector per non-pivot column (ascending).
  std::vector<std::vector<RingElement>> kernel_basis() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SparseVector to_sparse(const Ring& ring, std::span<const RingElement> dense);

/// Gaussian elimination over a field (ring precision 1).
LinearSolution solve_field(const Ring& field, const Matrix& m, std::span<const RingElement> rhs);
std::size_t rank_field(const Ring& field, const Matrix& m);

/// Unique solution of M x = rhs over GR(p^n, m) for square M invertible mod p.
/// Solves mod p, then corrects one p-digit at a time.
std::vector<RingElement> hensel_solve(const Ring& ring, const Matrix& m, std::span<const RingElement> rhs);

/// Hensel lifting for a (possibly tall) system whose reduction mod p has full
/// column rank. Throws Inconsistent if some digit has no solution.
std::vector<RingElement> hensel_solve_full_rank(const Ring& ring, const Matrix& m,
                                                std::span<const RingElement> rhs);

/// Inverse of a square matrix that is invertible mod p.
Matrix invert_matrix(const Ring& ring, const Matrix& m);

}  // namespace hopfkit
