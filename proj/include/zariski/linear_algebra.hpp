#pragma once

#include <vector>

#include "zariski/errors.hpp"
#include "zariski/number_field.hpp"
#include "zariski/rational.hpp"

namespace zariski {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, T(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  void append_row(const std::vector<T>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(r.size());
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using QMatrix = Matrix<Rat>;
using KMatrix = Matrix<AlgNum>;

// Fails on ragged input.
template <class T>
Matrix<T> matrix_from_rows(const std::vector<std::vector<T>>& rows) {
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  Matrix<T> m(static_cast<int>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols) fail(ErrorCode::InvalidInput, "ragged matrix");
    for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

// Kernel basis; vector i has a 1 at the i-th free column and 0 at the others.
std::vector<std::vector<Rat>> kernel_q(const QMatrix& m);
int rank_q(const QMatrix& m);
Rat det_q(const QMatrix& m);
// Same computation by plain Gauss-Jordan over Q; kept as a cross-check.
std::vector<std::vector<Rat>> kernel_q_gauss(const QMatrix& m);

// Unique solution of a square nonsingular system.
std::vector<Rat> solve_q(const QMatrix& a, const std::vector<Rat>& b);

std::vector<std::vector<AlgNum>> kernel_k(const KMatrix& m);
int rank_k(const KMatrix& m);
AlgNum det_k(const KMatrix& m);

}  // namespace zariski
