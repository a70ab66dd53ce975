#include "zariski/elliptic.hpp"

#include "zariski/errors.hpp"

namespace zariski {

namespace {

Point3 cross(const Point3& a, const Point3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Point3 lift_point(const Point3& p, const FieldPtr& base) {
  Point3 r;
  for (int i = 0; i < 3; ++i) r[i] = base ? p[i].in_field(base) : AlgNum(p[i].rational_value());
  return normalize_point(r);
}

Point3 along(const Point3& p, const AlgNum& t, const Point3& v) {
  return normalize_point(Point3{p[0] + t * v[0], p[1] + t * v[1], p[2] + t * v[2]});
}

PlaneCurve line_through_grad(const HomogeneousPoly& f, const Point3& p) {
  return make_curve(HomogeneousPoly::linear(f.derivative(0).eval(p), f.derivative(1).eval(p), f.derivative(2).eval(p)));
}

}  // namespace

EllipticChart::EllipticChart(const PicardContext& ctx, const Point3& origin) : ctx_(ctx) {
  if (ctx.degree() != 3) fail(ErrorCode::InvalidInput, "the group law needs a cubic");
  origin_ = lift_point(origin, ctx.base);
  if (!ctx.curve.equation.eval(origin_).is_zero())
    fail(ErrorCode::InvalidInput, "origin " + to_string(origin_) + " is not on the cubic");
  PlaneCurve e = ctx.curve;
  if (ctx.base) e.equation = e.equation.in_field(ctx.base);
  auto cut = intersect(e, line_through_grad(e.equation, origin_), ctx.intersect);
  if (cut.points.size() != 1 || cut.points[0].multiplicity != 3)
    fail(ErrorCode::InvalidInput, "origin " + to_string(origin_) + " is not an inflection point");
}

Point3 EllipticChart::third(const Point3& p, const Point3& q) const {
  const HomogeneousPoly& f = ctx_.curve.equation;
  if (same_projective_point(p, q)) {
    Point3 g{f.derivative(0).eval(p), f.derivative(1).eval(p), f.derivative(2).eval(p)};
    Point3 v;
    for (int i = 0; i < 3; ++i) {
      Point3 e{AlgNum(i == 0 ? 1 : 0), AlgNum(i == 1 ? 1 : 0), AlgNum(i == 2 ? 1 : 0)};
      v = cross(g, e);
      if (!is_zero_point(v) && !same_projective_point(v, p)) break;
    }
    UniPoly r = f.restrict_line(p, v);
    const AlgNum c2 = r.coeff(2), c3 = r.coeff(3);
    if (c3.is_zero()) return normalize_point(v);
    return along(p, -c2 / c3, v);
  }
  UniPoly r = f.restrict_line(p, q);
  const AlgNum b = r.coeff(1), c = r.coeff(2);
  if (c.is_zero()) return normalize_point(q);
  return along(p, -b / c, q);
}

Point3 EllipticChart::add(const Point3& p, const Point3& q) const { return third(origin_, third(p, q)); }

Point3 EllipticChart::neg(const Point3& p) const { return third(p, origin_); }

Point3 EllipticChart::mul(long k, const Point3& p) const {
  Point3 base = k < 0 ? neg(p) : p;
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  Point3 acc = origin_;
  while (e > 0) {
    if (e & 1) acc = add(acc, base);
    base = add(base, base);
    e >>= 1;
  }
  return acc;
}

Point3 EllipticChart::cluster_sum(const ProjPointCluster& c) const {
  const int size = c.size();
  if (size == 1) return lift_point(c.point, ctx_.base);
  if (size > 4)
    fail(ErrorCode::OracleUnavailable, "cluster of " + std::to_string(size) + " points is beyond the group-law oracle");
  // a line (size 2) or conic (sizes 3, 4) through the cluster, completed at the origin
  const int m = size <= 2 ? 1 : 2;
  std::vector<DivisorTerm> conds{{c, 1}};
  const int at_origin = 3 * m - 1 - size;
  if (at_origin > 0) conds.push_back({rational_cluster(origin_, ctx_.base), at_origin});
  PlaneCurve e = ctx_.curve;
  if (ctx_.base) e.equation = e.equation.in_field(ctx_.base);
  for (auto& h : curves_through(ctx_, conds, m, Exec::Serial)) {
    auto cut = intersect(e, make_curve(h), ctx_.intersect);
    bool usable = true, seen = false;
    Point3 rest = origin_;
    for (auto& p : cut.points) {
      if (same_orbit(p.cluster, c)) {
        usable = usable && p.multiplicity == 1;
        seen = true;
      } else if (p.cluster.size() == 1) {
        rest = add(rest, mul(p.multiplicity, lift_point(p.cluster.point, ctx_.base)));
      } else {
        usable = false;
      }
    }
    if (usable && seen) return neg(rest);
  }
  fail(ErrorCode::OracleUnavailable, "no section isolates " + describe(c));
}

Point3 EllipticChart::class_point(const DivisorClass& c) const {
  if (c.o_multiple.get_den() != 1)
    fail(ErrorCode::NotTestable, "o-multiple " + to_string(c.o_multiple) + " is not an integer");
  if (c.effective_degree() != 3 * c.o_multiple) fail(ErrorCode::InvalidInput, "class does not have degree zero");
  Point3 s = origin_;
  for (auto& t : c.terms) s = add(s, mul(t.coeff, cluster_sum(t.cluster)));
  return s;
}

EllipticOrder elliptic_class_order(const EllipticChart& ec, const DivisorClass& c, long cap) {
  EllipticOrder r;
  r.point = ec.class_point(c);
  Point3 acc = r.point;
  for (long v = 1; v <= cap; ++v) {
    if (ec.is_origin(acc)) {
      r.order = v;
      return r;
    }
    acc = ec.add(acc, r.point);
  }
  return r;
}

}  // namespace zariski
