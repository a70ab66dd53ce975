#include "zariski/number_field.hpp"

#include <sstream>

#include "zariski/errors.hpp"
#include "zariski/qfactor.hpp"

namespace zariski {

NumberField::NumberField(QPoly m, std::string s) : minpoly_(std::move(m)), symbol_(std::move(s)) {
  const int d = minpoly_.degree();
  // t^d = -sum m_i t^i, then shift upward
  std::vector<Rat> cur(d);
  for (int i = 0; i < d; ++i) cur[i] = -minpoly_.coeffs()[i];
  for (int k = d; k <= 2 * d - 2 || k == d; ++k) {
    powers_.push_back(cur);
    std::vector<Rat> next(d, Rat(0));
    for (int i = 0; i + 1 < d; ++i) next[i + 1] = cur[i];
    for (int i = 0; i < d; ++i) next[i] += cur[d - 1] * powers_[0][i];
    cur = std::move(next);
  }
}

FieldPtr NumberField::make(const QPoly& minpoly, std::string symbol, bool verify) {
  if (minpoly.degree() < 1) fail(ErrorCode::InvalidInput, "minimal polynomial must have degree >= 1");
  QPoly m = minpoly.monic();
  if (verify && !is_irreducible_q(m))
    fail(ErrorCode::NotIrreducible, "minimal polynomial " + to_string(m, symbol) + " is reducible");
  return FieldPtr(new NumberField(std::move(m), std::move(symbol)));
}

bool NumberField::same_as(const NumberField& o) const { return this == &o || minpoly_ == o.minpoly_; }

int field_degree(const FieldPtr& f) { return f ? f->degree() : 1; }

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a || !b) return !a && !b;
  return a->same_as(*b);
}

FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (!a->same_as(*b))
    fail(ErrorCode::FieldMismatch, "elements of Q[" + a->symbol() + "] and Q[" + b->symbol() + "] mixed");
  return a;
}

AlgNum::AlgNum(FieldPtr f, std::vector<Rat> coords) : field_(std::move(f)), c_(std::move(coords)) {
  normalize();
}

void AlgNum::normalize() {
  const std::size_t d = static_cast<std::size_t>(field_degree(field_));
  if (c_.size() > d) {
    if (!field_) fail(ErrorCode::InvalidInput, "coordinates exceed field degree");
    // reduce a longer polynomial modulo the minimal polynomial
    QPoly p(c_);
    c_ = (p % field_->minpoly()).coeffs();
  }
  c_.resize(d, Rat(0));
}

AlgNum AlgNum::generator(const FieldPtr& f) {
  if (!f) fail(ErrorCode::InvalidInput, "Q has no generator");
  if (f->degree() == 1) return AlgNum(f, {-f->minpoly().coeffs()[0]});
  std::vector<Rat> c(f->degree(), Rat(0));
  c[1] = 1;
  return AlgNum(f, c);
}

bool AlgNum::is_zero() const {
  for (auto& v : c_)
    if (sgn(v) != 0) return false;
  return true;
}

bool AlgNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Rat AlgNum::rational_value() const {
  if (!is_rational()) fail(ErrorCode::InvalidInput, "element " + to_string(*this) + " is not rational");
  return c_[0];
}

AlgNum AlgNum::in_field(const FieldPtr& f) const {
  if (same_field(field_, f)) return f ? AlgNum(f, c_) : *this;
  if (!field_) {
    std::vector<Rat> c(field_degree(f), Rat(0));
    c[0] = c_[0];
    return AlgNum(f, std::move(c));
  }
  if (is_rational()) return AlgNum(c_[0]).in_field(f);
  fail(ErrorCode::FieldMismatch, "cannot move " + to_string(*this) + " to another field");
}

AlgNum operator+(const AlgNum& a, const AlgNum& b) {
  FieldPtr f = join_fields(a.field_, b.field_);
  if (!f) return AlgNum(a.c_[0] + b.c_[0]);
  std::vector<Rat> c(f->degree(), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return AlgNum(f, std::move(c));
}

AlgNum operator-(const AlgNum& a) {
  AlgNum r = a;
  for (auto& v : r.c_) v = -v;
  return r;
}

AlgNum operator-(const AlgNum& a, const AlgNum& b) { return a + (-b); }

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
  FieldPtr f = join_fields(a.field_, b.field_);
  if (!f) return AlgNum(a.c_[0] * b.c_[0]);
  if (a.is_rational() || b.is_rational()) {
    const AlgNum& s = a.is_rational() ? a : b;
    const AlgNum& o = a.is_rational() ? b : a;
    std::vector<Rat> c = o.c_;
    c.resize(f->degree(), Rat(0));
    for (auto& v : c) v *= s.c_[0];
    return AlgNum(f, std::move(c));
  }
  const int d = f->degree();
  std::vector<Rat> prod(2 * d - 1, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; j < d; ++j) prod[i + j] += a.c_[i] * b.c_[j];
  }
  std::vector<Rat> c(prod.begin(), prod.begin() + d);
  for (int k = d; k < 2 * d - 1; ++k) {
    if (sgn(prod[k]) == 0) continue;
    const auto& pw = f->power(k);
    for (int i = 0; i < d; ++i) c[i] += prod[k] * pw[i];
  }
  return AlgNum(f, std::move(c));
}

AlgNum AlgNum::inverse() const {
  if (is_zero()) fail(ErrorCode::InvalidInput, "division by zero");
  if (!field_ || is_rational()) {
    Rat r = 1 / c_[0];
    return field_ ? AlgNum(r).in_field(field_) : AlgNum(r);
  }
  auto [g, s, t] = ext_gcd(as_poly(), field_->minpoly());
  (void)t;
  if (g.degree() != 0) fail(ErrorCode::Internal, "non-invertible field element");
  return AlgNum(field_, s.coeffs());
}

AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }

bool operator==(const AlgNum& a, const AlgNum& b) {
  if (!a.field_ || !b.field_) {
    if (!a.is_rational() || !b.is_rational()) return false;
    return a.c_[0] == b.c_[0];
  }
  join_fields(a.field_, b.field_);
  return a.c_ == b.c_;
}

AlgNum AlgNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  AlgNum r = AlgNum(1).in_field(field_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

QPoly AlgNum::as_poly() const { return QPoly(c_); }

Rat AlgNum::norm() const {
  if (!field_) return c_[0];
  if (is_rational()) {
    Rat r = 1;
    for (int i = 0; i < field_->degree(); ++i) r *= c_[0];
    return r;
  }
  return resultant(field_->minpoly(), as_poly());
}

Rat AlgNum::trace() const {
  if (!field_) return c_[0];
  Rat tr = 0;
  AlgNum basis = AlgNum(1).in_field(field_);
  AlgNum gen = generator(field_);
  for (int j = 0; j < field_->degree(); ++j) {
    tr += (*this * basis).coord(j);
    basis = basis * gen;
  }
  return tr;
}

std::string to_string(const AlgNum& a) {
  if (a.is_rational()) return to_string(a.coord(0));
  const std::string& sym = a.field()->symbol();
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(a.coords().size()) - 1; i >= 0; --i) {
    Rat c = a.coords()[i];
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (i == 0 || c != 1) {
      os << to_string(c);
      if (i > 0) os << "*";
    }
    if (i > 0) os << sym;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UniPoly to_unipoly(const QPoly& p) {
  std::vector<AlgNum> c;
  c.reserve(p.coeffs().size());
  for (auto& v : p.coeffs()) c.emplace_back(v);
  return UniPoly(std::move(c));
}

UniPoly in_field(const UniPoly& p, const FieldPtr& f) {
  std::vector<AlgNum> c;
  c.reserve(p.coeffs().size());
  for (auto& v : p.coeffs()) c.push_back(v.in_field(f));
  return UniPoly(std::move(c));
}

FieldPtr field_of(const UniPoly& p) {
  FieldPtr f;
  for (auto& v : p.coeffs()) f = join_fields(f, v.field());
  return f;
}

}  // namespace zariski
