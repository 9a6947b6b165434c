#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "balfam/rational.hpp"

namespace balfam {

// Dense row-major matrix of exact rationals. Small and dense is all the
// finders need: at most (2n) x m with n <= 64 and m a few hundred.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigRational& at(std::size_t row, std::size_t col) {
    return entries_[row * cols_ + col];
  }
  const BigRational& at(std::size_t row, std::size_t col) const {
    return entries_[row * cols_ + col];
  }

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigRational> entries_;
};

RationalMatrix transpose(const RationalMatrix& m);

// Throws DimensionMismatch unless v.size() == m.cols().
std::vector<BigRational> multiply(const RationalMatrix& m,
                                  const std::vector<BigRational>& v);

// Reduced row echelon form via exact Gaussian elimination with
// leftmost-nonzero-column, topmost-row pivoting.
RationalMatrix rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// cols - rank, the dimension of the null space.
std::size_t kernel_dimension(const RationalMatrix& m);

// One exact nontrivial solution of m.x = 0, or nullopt at full column rank.
// Deterministic: the lowest-indexed free variable of the RREF is set to 1,
// every other free variable to 0.
std::optional<std::vector<BigRational>> kernel_vector(const RationalMatrix& m);

}  // namespace balfam
