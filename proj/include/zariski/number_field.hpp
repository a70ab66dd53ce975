#pragma once

#include <memory>
#include <string>
#include <vector>

#include "zariski/dense_poly.hpp"
#include "zariski/rational.hpp"

namespace zariski {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Q[t]/(m(t)) with m monic irreducible.
class NumberField {
 public:
  // Makes the minimal polynomial monic; verifies irreducibility unless told not to.
  static FieldPtr make(const QPoly& minpoly, std::string symbol = "t", bool verify = true);

  int degree() const { return minpoly_.degree(); }
  const QPoly& minpoly() const { return minpoly_; }
  const std::string& symbol() const { return symbol_; }

  // coefficients of t^k in the power basis, for deg <= k <= 2*deg-2
  const std::vector<Rat>& power(int k) const { return powers_[k - degree()]; }

  bool same_as(const NumberField& o) const;

 private:
  NumberField(QPoly m, std::string s);
  QPoly minpoly_;
  std::string symbol_;
  std::vector<std::vector<Rat>> powers_;
};

int field_degree(const FieldPtr& f);
bool same_field(const FieldPtr& a, const FieldPtr& b);
// The larger of two compatible fields (Q is absorbed); fails on two distinct fields.
FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b);

// Element of a number field in the power basis; a null field means Q.
class AlgNum {
 public:
  AlgNum() : c_{Rat(0)} {}
  AlgNum(const Rat& r) : c_{r} {}
  AlgNum(long v) : c_{Rat(v)} {}
  AlgNum(int v) : c_{Rat(v)} {}
  AlgNum(FieldPtr f, std::vector<Rat> coords);

  static AlgNum generator(const FieldPtr& f);
  static AlgNum zero(const FieldPtr& f) { return AlgNum(f, {}); }

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coords() const { return c_; }
  Rat coord(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;
  bool is_one() const { return is_rational() && rational_value() == 1; }

  AlgNum in_field(const FieldPtr& f) const;
  AlgNum inverse() const;
  Rat norm() const;
  Rat trace() const;
  // as a polynomial in the generator
  QPoly as_poly() const;

  friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator-(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator-(const AlgNum& a);
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator/(const AlgNum& a, const AlgNum& b);
  friend bool operator==(const AlgNum& a, const AlgNum& b);
  friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }
  AlgNum& operator+=(const AlgNum& o) { return *this = *this + o; }
  AlgNum& operator-=(const AlgNum& o) { return *this = *this - o; }
  AlgNum& operator*=(const AlgNum& o) { return *this = *this * o; }

  AlgNum pow(long e) const;

 private:
  void normalize();
  FieldPtr field_;
  std::vector<Rat> c_;  // length deg(field), or 1 for Q
};

inline bool is_zero(const AlgNum& a) { return a.is_zero(); }

// Text form using the field's symbol, e.g. "2*w - 1/3".
std::string to_string(const AlgNum& a);

using UniPoly = DensePoly<AlgNum>;

UniPoly to_unipoly(const QPoly& p);
// Reinterprets coordinates in the given field.
UniPoly in_field(const UniPoly& p, const FieldPtr& f);
FieldPtr field_of(const UniPoly& p);

}  // namespace zariski
