#include "spinhecke/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace spinhecke {

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

namespace {

// Cheapest pivot first: keeps intermediate fractions small.
int weight(const Scalar &s) { return s.num().degree() + s.den().degree(); }

// Row-reduces the first `pivot_cols` columns in place; returns pivot columns.
std::vector<std::size_t> eliminate(Matrix &m, std::size_t pivot_cols, Scalar *det = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  if (det) *det = Scalar(1);
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      if (best == m.rows() || weight(m(r, col)) < weight(m(best, col))) best = r;
    }
    if (best == m.rows()) {
      if (det) *det = Scalar();
      continue;
    }
    if (best != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(best, c), m(row, c));
      if (det) *det = -*det;
    }
    Scalar inv = m(row, col).inverse();
    if (det) *det *= m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) { return eliminate(m, m.cols()).size(); }

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Scalar det;
  auto pivots = eliminate(m, m.cols(), &det);
  if (pivots.size() < m.cols()) return Scalar();
  return det;
}

std::optional<Matrix> solve(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  Matrix aug(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, a.cols() + c) = b(r, c);
  }
  auto pivots = eliminate(aug, a.cols());
  if (pivots.size() < a.cols()) throw std::domain_error("singular system: solution is not unique");
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (!aug(r, a.cols() + c).is_zero()) return std::nullopt;
  Matrix x(a.cols(), b.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[k], c) = aug(k, a.cols() + c);
  return x;
}

std::optional<std::vector<Scalar>> solve(const Matrix &a, const std::vector<Scalar> &b) {
  Matrix bm(b.size(), 1);
  for (std::size_t r = 0; r < b.size(); ++r) bm(r, 0) = b[r];
  auto x = solve(a, bm);
  if (!x) return std::nullopt;
  std::vector<Scalar> out(x->rows());
  for (std::size_t r = 0; r < x->rows(); ++r) out[r] = (*x)(r, 0);
  return out;
}

}  // namespace spinhecke
