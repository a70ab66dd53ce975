#include "zariski/cluster.hpp"

#include <sstream>

#include "zariski/errors.hpp"

namespace zariski {

AlgNum ProjPointCluster::embed(const AlgNum& a) const {
  if (a.is_rational()) return field ? a.in_field(field) : AlgNum(a.rational_value());
  if (same_field(a.field(), field)) return a.in_field(field);
  if (!same_field(a.field(), base)) fail(ErrorCode::FieldMismatch, "coefficient outside the base field");
  AlgNum r = AlgNum::zero(field);
  AlgNum pw = AlgNum(1).in_field(field);
  for (std::size_t l = 0; l < a.coords().size(); ++l) {
    if (sgn(a.coords()[l]) != 0) r += AlgNum(a.coords()[l]) * pw;
    pw = pw * base_image;
  }
  return r;
}

HomogeneousPoly ProjPointCluster::embed(const HomogeneousPoly& h) const {
  HomogeneousPoly::Terms t;
  for (auto& [e, c] : h.terms()) t.emplace(e, embed(c));
  return HomogeneousPoly(std::move(t), field);
}

ProjPointCluster rational_cluster(const Point3& p, const FieldPtr& base) {
  ProjPointCluster c;
  c.base = base;
  c.field = base;
  c.shear = identity_transform();
  Point3 q = normalize_point(p);
  for (auto& v : q) v = base ? v.in_field(base) : AlgNum(v.rational_value());
  c.point = q;
  if (base) c.base_image = AlgNum::generator(base);
  std::vector<Rat> mp = {Rat(0), Rat(1)};
  if (!base) mp[0] = -q[0].rational_value();
  c.orbit_poly = QPoly(mp);
  return c;
}

namespace {

UniPoly lift_to(const QPoly& p, const FieldPtr& f) {
  std::vector<AlgNum> c;
  for (auto& v : p.coeffs()) c.push_back(f ? AlgNum(v).in_field(f) : AlgNum(v));
  return UniPoly(std::move(c));
}

}  // namespace

bool same_orbit(const ProjPointCluster& a, const ProjPointCluster& b) {
  if (!same_field(a.base, b.base)) fail(ErrorCode::FieldMismatch, "clusters over different base fields");
  if (a.size() != b.size()) return false;
  if (a.size() == 1) return same_projective_point(a.point, b.point);
  // roots T of b's field polynomial inside a's field matching the point and the base embedding
  UniPoly g = lift_to(b.field->minpoly(), a.field);
  for (int i = 0; i < 3 && g.degree() > 0; ++i)
    for (int j = i + 1; j < 3 && g.degree() > 0; ++j) {
      UniPoly pi = lift_to(b.point[i].as_poly(), a.field), pj = lift_to(b.point[j].as_poly(), a.field);
      g = gcd(g, pi.scaled(a.point[j]) - pj.scaled(a.point[i]));
    }
  if (a.base && g.degree() > 0) {
    UniPoly tb = lift_to(b.base_image.as_poly(), a.field);
    g = gcd(g, tb - UniPoly::constant(a.base_image));
  }
  return g.degree() > 0;
}

std::string describe(const ProjPointCluster& c) {
  std::ostringstream os;
  os << to_string(c.point);
  if (c.size() > 1) {
    os << " with " << c.field->symbol() << " a root of " << to_string(c.field->minpoly(), c.field->symbol())
       << " (" << c.size() << " points)";
  }
  return os.str();
}

}  // namespace zariski
