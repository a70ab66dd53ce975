#include "zariski/homogeneous_poly.hpp"

#include <sstream>

#include "zariski/errors.hpp"

namespace zariski {

Transform3 identity_transform() {
  Transform3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = AlgNum(i == j ? 1 : 0);
  return m;
}

Transform3 compose(const Transform3& a, const Transform3& b) {
  Transform3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      AlgNum s(0);
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

AlgNum det(const Transform3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Transform3 inverse(const Transform3& m) {
  AlgNum d = det(m);
  if (d.is_zero()) fail(ErrorCode::InvalidInput, "singular coordinate change");
  AlgNum inv = d.inverse();
  Transform3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      r[i][j] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) * inv;
    }
  return r;
}

Point3 transform_point(const Transform3& m, const Point3& p) {
  Point3 r;
  for (int i = 0; i < 3; ++i) r[i] = m[i][0] * p[0] + m[i][1] * p[1] + m[i][2] * p[2];
  return r;
}

HomogeneousPoly::HomogeneousPoly(Terms terms, FieldPtr field) : field_(std::move(field)) {
  for (auto& [e, c] : terms) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) fail(ErrorCode::InvalidInput, "negative exponent");
    if (c.is_zero()) continue;
    field_ = join_fields(field_, c.field());
    terms_.emplace(e, c);
  }
  check_homogeneous();
}

void HomogeneousPoly::check_homogeneous() const {
  if (terms_.empty()) return;
  const int d = degree();
  for (auto& [e, c] : terms_)
    if (e[0] + e[1] + e[2] != d) {
      std::ostringstream os;
      os << "term of degree " << e[0] + e[1] + e[2] << " in a polynomial of degree " << d;
      fail(ErrorCode::Inhomogeneous, os.str());
    }
}

HomogeneousPoly HomogeneousPoly::variable(int i, FieldPtr field) {
  Exponent e{0, 0, 0};
  e[i] = 1;
  Terms t;
  t.emplace(e, AlgNum(1));
  return HomogeneousPoly(std::move(t), std::move(field));
}

HomogeneousPoly HomogeneousPoly::constant(const AlgNum& c) { return monomial({0, 0, 0}, c); }

HomogeneousPoly HomogeneousPoly::monomial(const Exponent& e, const AlgNum& c) {
  Terms t;
  t.emplace(e, c);
  return HomogeneousPoly(std::move(t), c.field());
}

HomogeneousPoly HomogeneousPoly::linear(const AlgNum& a, const AlgNum& b, const AlgNum& c) {
  Terms t;
  t.emplace(Exponent{1, 0, 0}, a);
  t.emplace(Exponent{0, 1, 0}, b);
  t.emplace(Exponent{0, 0, 1}, c);
  return HomogeneousPoly(std::move(t));
}

int HomogeneousPoly::degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return e[0] + e[1] + e[2];
}

bool HomogeneousPoly::is_rational() const {
  for (auto& [e, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

AlgNum HomogeneousPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? AlgNum(0) : it->second;
}

HomogeneousPoly HomogeneousPoly::in_field(const FieldPtr& f) const {
  HomogeneousPoly r(f);
  for (auto& [e, c] : terms_) r.terms_.emplace(e, c.in_field(f));
  return r;
}

HomogeneousPoly operator+(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  HomogeneousPoly r(join_fields(a.field_, b.field_));
  r.terms_ = a.terms_;
  for (auto& [e, c] : b.terms_) {
    auto it = r.terms_.find(e);
    if (it == r.terms_.end()) {
      r.terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  r.check_homogeneous();
  return r;
}

HomogeneousPoly operator-(const HomogeneousPoly& a) {
  HomogeneousPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

HomogeneousPoly operator-(const HomogeneousPoly& a, const HomogeneousPoly& b) { return a + (-b); }

HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  HomogeneousPoly r(join_fields(a.field_, b.field_));
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      AlgNum c = ca * cb;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e, c);
      } else {
        it->second += c;
      }
    }
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    if (it->second.is_zero())
      it = r.terms_.erase(it);
    else
      ++it;
  }
  return r;
}

HomogeneousPoly operator*(const AlgNum& c, const HomogeneousPoly& a) {
  HomogeneousPoly r(join_fields(a.field_, c.field()));
  if (c.is_zero()) return r;
  for (auto& [e, v] : a.terms_) r.terms_.emplace(e, c * v);
  return r;
}

bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

HomogeneousPoly HomogeneousPoly::pow(int e) const {
  HomogeneousPoly r = constant(AlgNum(1)), b = *this;
  r.field_ = field_;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

HomogeneousPoly HomogeneousPoly::derivative(int var) const {
  HomogeneousPoly r(field_);
  for (auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    r.terms_.emplace(f, c * AlgNum(static_cast<long>(e[var])));
  }
  return r;
}

AlgNum HomogeneousPoly::eval(const Point3& p) const {
  const int d = degree();
  if (d < 0) return AlgNum(0);
  std::array<std::vector<AlgNum>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    pw[i].push_back(AlgNum(1));
    for (int k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * p[i]);
  }
  AlgNum s(0);
  for (auto& [e, c] : terms_) s += c * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
  return s;
}

HomogeneousPoly HomogeneousPoly::substitute(const Transform3& m) const {
  const int d = degree();
  if (d < 0) return *this;
  std::array<std::vector<HomogeneousPoly>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    HomogeneousPoly l = linear(m[i][0], m[i][1], m[i][2]);
    pw[i].push_back(constant(AlgNum(1)));
    for (int k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * l);
  }
  HomogeneousPoly r(field_);
  for (auto& [e, c] : terms_) r += c * (pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]);
  return r;
}

UniPoly HomogeneousPoly::restrict_line(const Point3& base, const Point3& dir) const {
  const int d = degree();
  if (d < 0) return {};
  std::array<std::vector<UniPoly>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    UniPoly l({base[i], dir[i]});
    pw[i].push_back(UniPoly::constant(AlgNum(1)));
    for (int k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * l);
  }
  UniPoly r;
  for (auto& [e, c] : terms_) r += (pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]).scaled(c);
  return r;
}

std::vector<UniPoly> HomogeneousPoly::coefficients_in_y() const {
  const int d = degree();
  std::vector<std::vector<AlgNum>> c(std::max(d + 1, 0), std::vector<AlgNum>(std::max(d + 1, 0), AlgNum(0)));
  for (auto& [e, v] : terms_) c[e[1]][e[0]] = v;
  std::vector<UniPoly> out;
  for (auto& row : c) out.emplace_back(row);
  return out;
}

HomogeneousPoly HomogeneousPoly::normalized() const {
  if (terms_.empty()) return *this;
  if (is_rational()) {
    std::vector<Rat> v;
    for (auto& [e, c] : terms_) v.push_back(c.rational_value());
    Rat l = Rat(lcm_of_denominators(v));
    Int g = 0;
    for (auto& r : v) {
      Int n = Int(r * l);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rat s = l / Rat(g);
    if (sgn(v[0]) < 0) s = -s;
    HomogeneousPoly r(field_);
    for (auto& [e, c] : terms_) r.terms_.emplace(e, AlgNum(c.rational_value() * s).in_field(field_));
    return r;
  }
  AlgNum inv = terms_.begin()->second.inverse();
  return inv * *this;
}

std::pair<HomogeneousPoly, HomogeneousPoly> HomogeneousPoly::divide(const HomogeneousPoly& d) const {
  if (d.is_zero()) fail(ErrorCode::InvalidInput, "division by the zero polynomial");
  FieldPtr f = join_fields(field_, d.field_);
  HomogeneousPoly q(f), rem(f), r = *this;
  const Exponent ld = d.terms_.begin()->first;
  const AlgNum inv = d.terms_.begin()->second.inverse();
  while (!r.is_zero()) {
    auto [e, c] = *r.terms_.begin();
    if (e[0] >= ld[0] && e[1] >= ld[1] && e[2] >= ld[2]) {
      HomogeneousPoly t = monomial({e[0] - ld[0], e[1] - ld[1], e[2] - ld[2]}, c * inv);
      q += t;
      r = r - t * d;
    } else {
      rem.terms_.emplace(e, c);
      r.terms_.erase(r.terms_.begin());
    }
  }
  return {q, rem};
}

bool HomogeneousPoly::divisible_by(const HomogeneousPoly& d) const { return divide(d).second.is_zero(); }

std::string HomogeneousPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char* names[3] = {"x", "y", "z"};
  for (auto& [e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coef;
    bool negative = false;
    if (c.is_rational()) {
      Rat v = c.rational_value();
      if (sgn(v) < 0) {
        negative = true;
        v = -v;
      }
      if (v != 1 || mono.empty()) coef = zariski::to_string(v);
    } else {
      coef = "(" + zariski::to_string(c) + ")";
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    os << coef;
    if (!coef.empty() && !mono.empty()) os << "*";
    os << mono;
  }
  return os.str();
}

std::string to_string(const HomogeneousPoly& p) { return p.to_string(); }

std::vector<Exponent> monomials_of_degree(int d) {
  std::vector<Exponent> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

}  // namespace zariski
