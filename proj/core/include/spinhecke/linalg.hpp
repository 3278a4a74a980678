#pragma once

// Exact dense linear algebra over Scalar.

#include "spinhecke/scalar.hpp"

#include <optional>
#include <vector>

namespace spinhecke {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transposed() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

std::size_t rank(Matrix m);
Scalar determinant(Matrix m);

/// Solves A x = B column by column.  Returns std::nullopt when some column
/// of B is not in the column space of A.  Throws std::domain_error when A
/// has a nontrivial kernel (the solution would not be unique).
std::optional<Matrix> solve(const Matrix &a, const Matrix &b);
std::optional<std::vector<Scalar>> solve(const Matrix &a, const std::vector<Scalar> &b);

}  // namespace spinhecke
