#include "balfam/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "balfam/error.hpp"

namespace balfam {

namespace {

struct Echelon {
  RationalMatrix mat;
  std::vector<std::size_t> pivot_cols;
};

// Exact Gauss-Jordan: pick the leftmost column with a nonzero entry at or
// below the current pivot row, take the topmost such row, normalize, and
// clear the column everywhere else.
Echelon reduce(const RationalMatrix& input) {
  Echelon e{input, {}};
  RationalMatrix& a = e.mat;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t row = pivot_row;
    while (row < a.rows() && a.at(row, col) == 0) ++row;
    if (row == a.rows()) continue;

    if (row != pivot_row) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        std::swap(a.at(row, c), a.at(pivot_row, c));
      }
    }
    const BigRational pivot = a.at(pivot_row, col);
    for (std::size_t c = col; c < a.cols(); ++c) {
      a.at(pivot_row, c) /= pivot;
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a.at(r, col) == 0) continue;
      const BigRational factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        a.at(r, c) -= factor * a.at(pivot_row, c);
      }
    }
    e.pivot_cols.push_back(col);
    ++pivot_row;
  }
  return e;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(
    const std::vector<std::vector<long long>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) {
      throw std::invalid_argument("ragged row in matrix literal");
    }
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix transpose(const RationalMatrix& m) {
  RationalMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
  }
  return t;
}

std::vector<BigRational> multiply(const RationalMatrix& m,
                                  const std::vector<BigRational>& v) {
  if (v.size() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "vector length " + std::to_string(v.size()) +
                    " against " + std::to_string(m.cols()) + " columns");
  }
  std::vector<BigRational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigRational sum = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) != 0 && v[c] != 0) sum += m.at(r, c) * v[c];
    }
    out[r] = std::move(sum);
  }
  return out;
}

RationalMatrix rref(const RationalMatrix& m) { return reduce(m).mat; }

std::size_t rank(const RationalMatrix& m) { return reduce(m).pivot_cols.size(); }

std::size_t kernel_dimension(const RationalMatrix& m) {
  return m.cols() - rank(m);
}

std::optional<std::vector<BigRational>> kernel_vector(const RationalMatrix& m) {
  const Echelon e = reduce(m);
  if (e.pivot_cols.size() == m.cols()) return std::nullopt;

  // Lowest-indexed free column gets 1, remaining free columns stay 0; each
  // pivot variable is then forced by its RREF row.
  std::size_t free_col = 0;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t col : e.pivot_cols) is_pivot[col] = true;
  while (is_pivot[free_col]) ++free_col;

  std::vector<BigRational> x(m.cols());
  x[free_col] = 1;
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
    x[e.pivot_cols[i]] = -e.mat.at(i, free_col);
  }
  return x;
}

}  // namespace balfam
