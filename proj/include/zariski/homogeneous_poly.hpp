#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "zariski/number_field.hpp"

namespace zariski {

using Exponent = std::array<int, 3>;

// Graded lexicographic, x > y > z; larger monomials first.
struct GrLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    return a > b;
  }
};

using Point3 = std::array<AlgNum, 3>;
// A 3x3 linear substitution: variable i becomes sum_j m[i][j] * var_j.
using Transform3 = std::array<std::array<AlgNum, 3>, 3>;

Transform3 identity_transform();
Transform3 compose(const Transform3& a, const Transform3& b);  // a * b
AlgNum det(const Transform3& m);
Transform3 inverse(const Transform3& m);
Point3 transform_point(const Transform3& m, const Point3& p);

// Sparse polynomial in x, y, z over Q or a number field; every term has the same degree.
class HomogeneousPoly {
 public:
  using Terms = std::map<Exponent, AlgNum, GrLexGreater>;

  HomogeneousPoly() = default;
  explicit HomogeneousPoly(FieldPtr field) : field_(std::move(field)) {}
  // Fails with Inhomogeneous when the terms disagree in degree.
  HomogeneousPoly(Terms terms, FieldPtr field = nullptr);

  static HomogeneousPoly variable(int i, FieldPtr field = nullptr);
  static HomogeneousPoly constant(const AlgNum& c);
  static HomogeneousPoly monomial(const Exponent& e, const AlgNum& c);
  // a*x + b*y + c*z
  static HomogeneousPoly linear(const AlgNum& a, const AlgNum& b, const AlgNum& c);

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  const Terms& terms() const { return terms_; }
  const FieldPtr& field() const { return field_; }
  // true when every coefficient is rational
  bool is_rational() const;
  AlgNum coeff(const Exponent& e) const;
  std::size_t size() const { return terms_.size(); }

  HomogeneousPoly in_field(const FieldPtr& f) const;

  friend HomogeneousPoly operator+(const HomogeneousPoly& a, const HomogeneousPoly& b);
  friend HomogeneousPoly operator-(const HomogeneousPoly& a, const HomogeneousPoly& b);
  friend HomogeneousPoly operator-(const HomogeneousPoly& a);
  friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b);
  friend HomogeneousPoly operator*(const AlgNum& c, const HomogeneousPoly& a);
  friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b);
  friend bool operator!=(const HomogeneousPoly& a, const HomogeneousPoly& b) { return !(a == b); }
  HomogeneousPoly& operator+=(const HomogeneousPoly& o) { return *this = *this + o; }

  HomogeneousPoly pow(int e) const;
  HomogeneousPoly derivative(int var) const;
  AlgNum eval(const Point3& p) const;
  // f(m * (x, y, z))
  HomogeneousPoly substitute(const Transform3& m) const;
  // f(x0, y, 1) as a polynomial in y, or f(x, y0, 1) etc. via the general form below
  UniPoly restrict_line(const Point3& base, const Point3& dir) const;
  // coefficients of y^k in f(x, y, 1), each a polynomial in x
  std::vector<UniPoly> coefficients_in_y() const;

  // Leading coefficient scaled to 1 (or primitive integer with positive lead over Q).
  HomogeneousPoly normalized() const;
  // Graded-lex division by a single divisor: returns (quotient, remainder).
  std::pair<HomogeneousPoly, HomogeneousPoly> divide(const HomogeneousPoly& d) const;
  bool divisible_by(const HomogeneousPoly& d) const;

  std::string to_string() const;

 private:
  void check_homogeneous() const;
  Terms terms_;
  FieldPtr field_;
};

std::string to_string(const HomogeneousPoly& p);

// All exponents of total degree d in graded-lex order.
std::vector<Exponent> monomials_of_degree(int d);

}  // namespace zariski
