#pragma once

#include <utility>
#include <vector>

#include "zariski/errors.hpp"
#include "zariski/rational.hpp"

namespace zariski {

namespace detail {
template <class T>
bool coeff_is_zero(const T& a) {
  return is_zero(a);
}
}  // namespace detail

// Univariate polynomial over a field, coefficients low degree first.
// T must provide field arithmetic, construction from long and is_zero(T).
template <class T>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  DensePoly(std::initializer_list<T> c) : c_(c) { trim(); }

  static DensePoly constant(const T& a) { return DensePoly(std::vector<T>{a}); }
  static DensePoly monomial(const T& a, int k) {
    std::vector<T> c(k + 1, T(0));
    c[k] = a;
    return DensePoly(std::move(c));
  }
  static DensePoly x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  T eval(const T& a) const {
    T r(0);
    for (int i = degree(); i >= 0; --i) r = r * a + c_[i];
    return r;
  }

  DensePoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1, T(0));
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return DensePoly(std::move(d));
  }

  DensePoly monic() const {
    if (is_zero()) return *this;
    T inv = T(1) / leading();
    std::vector<T> c = c_;
    for (auto& a : c) a = a * inv;
    return DensePoly(std::move(c));
  }

  DensePoly scaled(const T& a) const {
    std::vector<T> c = c_;
    for (auto& v : c) v = v * a;
    return DensePoly(std::move(c));
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return DensePoly(std::move(c));
  }
  friend DensePoly operator-(const DensePoly& a) {
    std::vector<T> c = a.c_;
    for (auto& v : c) v = -v;
    return DensePoly(std::move(c));
  }
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (zariski_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return DensePoly(std::move(c));
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!zariski_is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

  DensePoly& operator+=(const DensePoly& o) { return *this = *this + o; }
  DensePoly& operator-=(const DensePoly& o) { return *this = *this - o; }
  DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

  DensePoly pow(int e) const {
    DensePoly r = constant(T(1)), b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  // p(q(x))
  DensePoly compose(const DensePoly& q) const {
    DensePoly r;
    for (int i = degree(); i >= 0; --i) r = r * q + constant(c_[i]);
    return r;
  }

 private:
  static bool zariski_is_zero(const T& a) { return detail::coeff_is_zero(a); }
  void trim() {
    while (!c_.empty() && zariski_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using QPoly = DensePoly<Rat>;

// Gcd over Q by primitive remainder sequences; preferred over the generic template.
QPoly gcd(const QPoly& a, const QPoly& b);

template <class T>
std::pair<DensePoly<T>, DensePoly<T>> divrem(const DensePoly<T>& a, const DensePoly<T>& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidInput, "polynomial division by zero");
  if (a.degree() < b.degree()) return {DensePoly<T>(), a};
  std::vector<T> r = a.coeffs();
  const int db = b.degree();
  std::vector<T> q(a.degree() - db + 1, T(0));
  const T inv = T(1) / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero(r[i])) continue;
    T f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - f * b.coeffs()[j];
  }
  r.resize(db);
  return {DensePoly<T>(std::move(q)), DensePoly<T>(std::move(r))};
}

template <class T>
DensePoly<T> operator%(const DensePoly<T>& a, const DensePoly<T>& b) {
  return divrem(a, b).second;
}

// Exact quotient; fails when b does not divide a.
template <class T>
DensePoly<T> exact_div(const DensePoly<T>& a, const DensePoly<T>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) fail(ErrorCode::Internal, "inexact polynomial division");
  return q;
}

// Monic gcd by the Euclidean algorithm.
template <class T>
DensePoly<T> gcd(DensePoly<T> a, DensePoly<T> b) {
  while (!b.is_zero()) {
    DensePoly<T> r = divrem(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

// (g, s, t) with s*a + t*b = g, g monic.
template <class T>
std::tuple<DensePoly<T>, DensePoly<T>, DensePoly<T>> ext_gcd(const DensePoly<T>& a,
                                                             const DensePoly<T>& b) {
  DensePoly<T> r0 = a, r1 = b;
  DensePoly<T> s0 = DensePoly<T>::constant(T(1)), s1;
  DensePoly<T> t0, t1 = DensePoly<T>::constant(T(1));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    DensePoly<T> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  T inv = T(1) / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// Resultant by the field Euclidean remainder sequence.
template <class T>
T resultant(DensePoly<T> a, DensePoly<T> b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorCode::UndefinedResultant, "both inputs are zero");
  if (a.is_zero()) return b.is_constant() ? T(1) : T(0);
  if (b.is_zero()) return a.is_constant() ? T(1) : T(0);
  T acc(1);
  while (true) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) {
      T p(1);
      for (int i = 0; i < m; ++i) p = p * b.leading();
      return acc * p;
    }
    if (m == 0) {
      T p(1);
      for (int i = 0; i < n; ++i) p = p * a.leading();
      return acc * p;
    }
    DensePoly<T> r = divrem(a, b).second;
    if (r.is_zero()) return T(0);
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    const int k = m - r.degree();
    for (int i = 0; i < k; ++i) acc = acc * b.leading();
    a = std::move(b);
    b = std::move(r);
  }
}

template <class T>
T discriminant(const DensePoly<T>& a) {
  const int n = a.degree();
  if (n < 1) fail(ErrorCode::InvalidInput, "discriminant of a constant");
  T r = resultant(a, a.derivative()) / a.leading();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

// Yun's algorithm: list of (monic factor, multiplicity), multiplicities ascending.
template <class T>
std::vector<std::pair<DensePoly<T>, int>> squarefree_decomposition(const DensePoly<T>& f) {
  std::vector<std::pair<DensePoly<T>, int>> out;
  if (f.degree() < 1) return out;
  DensePoly<T> fp = f.derivative();
  DensePoly<T> a = gcd(f, fp);
  DensePoly<T> b = exact_div(f, a).monic();
  DensePoly<T> c = exact_div(fp, a);
  c = c.scaled(T(1) / exact_div(f, a).leading());
  DensePoly<T> d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    DensePoly<T> g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

template <class T>
DensePoly<T> squarefree_part(const DensePoly<T>& f) {
  if (f.degree() < 1) return f.monic();
  return exact_div(f, gcd(f, f.derivative())).monic();
}

template <class T>
bool is_squarefree(const DensePoly<T>& f) {
  if (f.degree() < 1) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

// Newton interpolation through (xs[i], ys[i]); nodes must be distinct.
template <class T, class N>
DensePoly<T> interpolate(const std::vector<N>& xs, const std::vector<T>& ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) fail(ErrorCode::InvalidInput, "interpolation size mismatch");
  std::vector<T> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      N den = xs[i] - xs[i - j];
      if (is_zero(den)) fail(ErrorCode::InvalidInput, "repeated interpolation node");
      dd[i] = (dd[i] - dd[i - 1]) / T(den);
    }
  DensePoly<T> r;
  for (std::size_t k = n; k-- > 0;) {
    N neg = -xs[k];
    r = r * DensePoly<T>({T(neg), T(1)}) + DensePoly<T>::constant(dd[k]);
  }
  return r;
}

std::string to_string(const QPoly& p, const std::string& var = "x");

// Primitive integer polynomial with positive leading coefficient.
std::vector<Int> primitive_integer_coeffs(const QPoly& p);
QPoly from_integer_coeffs(const std::vector<Int>& c);

}  // namespace zariski
