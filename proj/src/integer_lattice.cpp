#include "zariski/integer_lattice.hpp"

#include <algorithm>

#include "zariski/errors.hpp"

namespace zariski {

namespace {

void drop_zero_rows(IMatrix& m) {
  m.erase(std::remove_if(m.begin(), m.end(),
                         [](const std::vector<Int>& r) {
                           return std::all_of(r.begin(), r.end(), [](const Int& v) { return sgn(v) == 0; });
                         }),
          m.end());
}

}  // namespace

SmithForm smith_normal_form(const IMatrix& input) {
  const int rows = static_cast<int>(input.size());
  const int cols = rows ? static_cast<int>(input[0].size()) : 0;
  for (auto& r : input)
    if (static_cast<int>(r.size()) != cols) fail(ErrorCode::InvalidInput, "ragged integer matrix");
  SmithForm f;
  IMatrix& m = f.diag;
  m = input;
  f.left.assign(rows, std::vector<Int>(rows, Int(0)));
  f.right.assign(cols, std::vector<Int>(cols, Int(0)));
  for (int i = 0; i < rows; ++i) f.left[i][i] = 1;
  for (int i = 0; i < cols; ++i) f.right[i][i] = 1;
  auto row_swap = [&](int a, int b) {
    std::swap(m[a], m[b]);
    std::swap(f.left[a], f.left[b]);
  };
  auto col_swap = [&](int a, int b) {
    for (auto& r : m) std::swap(r[a], r[b]);
    for (auto& r : f.right) std::swap(r[a], r[b]);
  };
  // row a -= q * row b
  auto row_sub = [&](int a, int b, const Int& q) {
    for (int j = 0; j < cols; ++j) m[a][j] -= q * m[b][j];
    for (int j = 0; j < rows; ++j) f.left[a][j] -= q * f.left[b][j];
  };
  auto col_sub = [&](int a, int b, const Int& q) {
    for (int i = 0; i < rows; ++i) m[i][a] -= q * m[i][b];
    for (int i = 0; i < cols; ++i) f.right[i][a] -= q * f.right[i][b];
  };
  int t = 0;
  while (t < rows && t < cols) {
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (sgn(m[i][j]) != 0 && (pi < 0 || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) row_swap(t, pi);
    if (pj != t) col_swap(t, pj);
    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
      if (sgn(q) != 0) row_sub(i, t, q);
      if (sgn(m[i][t]) != 0) clean = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
      if (sgn(q) != 0) col_sub(j, t, q);
      if (sgn(m[t][j]) != 0) clean = false;
    }
    if (!clean) continue;
    bool divides = true;
    for (int i = t + 1; i < rows && divides; ++i)
      for (int j = t + 1; j < cols; ++j)
        if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
          row_sub(t, i, Int(-1));
          divides = false;
          break;
        }
    if (!divides) continue;
    if (sgn(m[t][t]) < 0) {
      for (int j = 0; j < cols; ++j) m[t][j] = -m[t][j];
      for (int j = 0; j < rows; ++j) f.left[t][j] = -f.left[t][j];
    }
    ++t;
  }
  for (int i = 0; i < std::min(rows, cols); ++i) f.factors.push_back(m[i][i]);
  return f;
}

std::vector<Int> smith_invariants(const IMatrix& m) {
  std::vector<Int> out;
  for (auto& d : smith_normal_form(m).factors)
    if (sgn(d) != 0) out.push_back(d);
  return out;
}

IMatrix multiply(const IMatrix& a, const IMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
  IMatrix r(n, std::vector<Int>(p, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < p; ++j) r[i][j] += a[i][l] * b[l][j];
  return r;
}

Int determinant(const IMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Int>> a = m;
  Int prev = 1;
  int sign = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (sgn(a[i][c]) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      sign = -sign;
    }
    for (int i = c + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j) {
        Int v = a[c][c] * a[i][j] - a[i][c] * a[c][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  return n == 0 ? Int(1) : Int(sign * a[n - 1][n - 1]);
}

IMatrix hermite_normal_form(IMatrix m) {
  drop_zero_rows(m);
  if (m.empty()) return m;
  const int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // gcd-reduce column c over rows r..end
    while (true) {
      int p = -1;
      for (int i = r; i < rows; ++i)
        if (sgn(m[i][c]) != 0 && (p < 0 || abs(m[i][c]) < abs(m[p][c]))) p = i;
      if (p < 0) break;
      std::swap(m[r], m[p]);
      bool done = true;
      for (int i = r + 1; i < rows; ++i) {
        if (sgn(m[i][c]) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        for (int j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (sgn(m[i][c]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(m[r][c]) == 0) continue;
    if (sgn(m[r][c]) < 0)
      for (int j = c; j < cols; ++j) m[r][j] = -m[r][j];
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (sgn(q) != 0)
        for (int j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

}  // namespace zariski
