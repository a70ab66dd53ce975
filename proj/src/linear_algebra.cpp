#include "zariski/linear_algebra.hpp"

#include "zariski/errors.hpp"

namespace zariski {

namespace {

// Fraction-free echelon form of an integer-scaled copy; returns pivot columns.
std::vector<int> bareiss_echelon(std::vector<std::vector<Int>>& a, int cols, int* sign = nullptr) {
  const int rows = static_cast<int>(a.size());
  std::vector<int> pivots;
  Int prev = 1;
  int r = 0;
  if (sign) *sign = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(a[i][c]) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      if (sign) *sign = -*sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        Int v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Int>> integer_rows(const QMatrix& m) {
  std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<Rat> row(m.cols());
    for (int j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    Int l = lcm_of_denominators(row);
    for (int j = 0; j < m.cols(); ++j) a[i][j] = Int(row[j] * l);
  }
  return a;
}

template <class T>
std::vector<int> gauss_jordan(Matrix<T>& a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!is_zero(a(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    T inv = T(1) / a(r, c);
    for (int j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      T f = a(i, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::vector<std::vector<T>> kernel_from_rref(const Matrix<T>& a, const std::vector<int>& pivots) {
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> out;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(a.cols(), T(0));
    v[f] = T(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(static_cast<int>(i), f);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<std::vector<Rat>> kernel_q(const QMatrix& m) {
  auto a = integer_rows(m);
  std::vector<int> pivots = bareiss_echelon(a, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[f] = 1;
    for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
      const int pc = pivots[i];
      Rat s = 0;
      for (int j = pc + 1; j < m.cols(); ++j)
        if (sgn(a[i][j]) != 0 && sgn(v[j]) != 0) s += Rat(a[i][j]) * v[j];
      v[pc] = -s / Rat(a[i][pc]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<Rat>> kernel_q_gauss(const QMatrix& m) {
  QMatrix a = m;
  auto pivots = gauss_jordan(a);
  return kernel_from_rref(a, pivots);
}

int rank_q(const QMatrix& m) {
  auto a = integer_rows(m);
  return static_cast<int>(bareiss_echelon(a, m.cols()).size());
}

Rat det_q(const QMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::InvalidInput, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
  Int scale = 1;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<Rat> row(m.cols());
    for (int j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    Int l = lcm_of_denominators(row);
    scale *= l;
    for (int j = 0; j < m.cols(); ++j) a[i][j] = Int(row[j] * l);
  }
  int sign = 1;
  auto piv = bareiss_echelon(a, m.cols(), &sign);
  if (static_cast<int>(piv.size()) < m.rows()) return 0;
  Rat d = Rat(a[m.rows() - 1][m.cols() - 1]) / Rat(scale);
  return sign < 0 ? Rat(-d) : d;
}

std::vector<Rat> solve_q(const QMatrix& a, const std::vector<Rat>& b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n) fail(ErrorCode::InvalidInput, "solve_q shape");
  QMatrix aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto ker = kernel_q_gauss(aug);
  if (ker.size() != 1 || sgn(ker[0][n]) == 0) fail(ErrorCode::Internal, "singular linear system");
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = -ker[0][i] / ker[0][n];
  return x;
}

std::vector<std::vector<AlgNum>> kernel_k(const KMatrix& m) {
  KMatrix a = m;
  auto pivots = gauss_jordan(a);
  return kernel_from_rref(a, pivots);
}

int rank_k(const KMatrix& m) {
  KMatrix a = m;
  return static_cast<int>(gauss_jordan(a).size());
}

AlgNum det_k(const KMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::InvalidInput, "determinant of a non-square matrix");
  KMatrix a = m;
  AlgNum d(1);
  const int n = a.rows();
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return AlgNum(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d = d * a(c, c);
    AlgNum inv = a(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      AlgNum f = a(i, c) * inv;
      for (int j = c; j < n; ++j) a(i, j) = a(i, j) - f * a(c, j);
    }
  }
  return d;
}

}  // namespace zariski
