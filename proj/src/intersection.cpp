#include "zariski/intersection.hpp"

#include <optional>

#include "zariski/errors.hpp"
#include "zariski/linear_algebra.hpp"
#include "zariski/local_param.hpp"
#include "zariski/qfactor.hpp"

namespace zariski {

int IntersectionDivisor::total_degree() const {
  int s = 0;
  for (auto& p : points) s += p.cluster.size() * p.multiplicity;
  return s;
}

namespace {

QPoly rational_part(const UniPoly& p) {
  std::vector<Rat> c;
  for (auto& v : p.coeffs()) c.push_back(v.rational_value());
  return QPoly(c);
}

UniPoly lift(const QPoly& p, const FieldPtr& f) {
  std::vector<AlgNum> c;
  for (auto& v : p.coeffs()) c.push_back(f ? AlgNum(v).in_field(f) : AlgNum(v));
  return UniPoly(std::move(c));
}

std::vector<std::pair<UniPoly, int>> squarefree_over(const UniPoly& r, const FieldPtr& k) {
  std::vector<std::pair<UniPoly, int>> out;
  if (!k) {
    for (auto& [g, m] : squarefree_decomposition(rational_part(r))) out.emplace_back(to_unipoly(g), m);
  } else {
    out = squarefree_decomposition(r);
  }
  return out;
}

// Norm over Q of r(X - shift * t), by evaluation and interpolation.
QPoly shifted_norm(const UniPoly& r, const FieldPtr& k, long shift) {
  const int n = k->degree() * r.degree();
  const AlgNum t = AlgNum::generator(k);
  std::vector<Rat> xs(n + 1), ys(n + 1);
  for (int i = 0; i <= n; ++i) {
    xs[i] = i;
    ys[i] = r.eval(AlgNum(i) - AlgNum(shift) * t).norm();
  }
  return interpolate(xs, ys);
}

std::optional<std::vector<RootOrbit>> split_roots_impl(const UniPoly& r, const FieldPtr& base, long shift) {
  std::vector<RootOrbit> out;
  if (!base) {
    for (auto& [q, m] : factor_q(rational_part(r)).factors) {
      RootOrbit o;
      o.minpoly = q;
      if (q.degree() == 1) {
        o.root = AlgNum(-q.coeffs()[0]);
      } else {
        o.field = NumberField::make(q, "a", false);
        o.root = AlgNum::generator(o.field);
      }
      out.push_back(o);
    }
    return out;
  }
  QPoly norm = shifted_norm(r, base, shift);
  if (!is_squarefree(norm)) return std::nullopt;
  const QPoly& m = base->minpoly();
  for (auto& [q, mult] : factor_q(norm).factors) {
    (void)mult;
    RootOrbit o;
    o.minpoly = q;
    o.field = NumberField::make(q, "a", false);
    const AlgNum gamma = AlgNum::generator(o.field);
    // r(gamma - shift*T; T) as a polynomial in T over the orbit field
    UniPoly lin({gamma, AlgNum(-shift).in_field(o.field)});
    UniPoly acc;
    UniPoly pw = UniPoly::constant(AlgNum(1).in_field(o.field));
    for (int j = 0; j <= r.degree(); ++j) {
      const AlgNum& c = r.coeffs()[j];
      acc += pw * lift(QPoly(c.is_rational() ? std::vector<Rat>{c.rational_value()} : c.coords()), o.field);
      pw = pw * lin;
    }
    UniPoly g = gcd(lift(m, o.field), acc);
    if (g.degree() != 1) return std::nullopt;
    o.base_image = -g.coeff(0) / g.coeff(1);
    o.root = gamma - AlgNum(shift) * o.base_image;
    out.push_back(o);
  }
  return out;
}

// Rewrites a point of an orbit field isomorphic to the base in the base's own basis.
Point3 rebase_point(const Point3& p, const FieldPtr& f, const AlgNum& tau, const FieldPtr& base) {
  const int n = base->degree();
  QMatrix m(n, n);
  AlgNum pw = AlgNum(1).in_field(f);
  for (int l = 0; l < n; ++l) {
    for (int i = 0; i < n; ++i) m(i, l) = pw.coord(i);
    pw = pw * tau;
  }
  Point3 out;
  for (int k = 0; k < 3; ++k) {
    std::vector<Rat> v(n);
    AlgNum e = p[k].in_field(f);
    for (int i = 0; i < n; ++i) v[i] = e.coord(i);
    out[k] = AlgNum(base, solve_q(m, v));
  }
  return out;
}

UniPoly fiber(const HomogeneousPoly& f, const ProjPointCluster& c, const AlgNum& x) {
  HomogeneousPoly g = c.embed(f);
  AlgNum zero = c.field ? AlgNum::zero(c.field) : AlgNum(0);
  AlgNum one = c.field ? AlgNum(1).in_field(c.field) : AlgNum(1);
  return g.restrict_line(Point3{x, zero, one}, Point3{zero, one, zero});
}

}  // namespace

std::vector<RootOrbit> split_roots(const UniPoly& r, const FieldPtr& base, long shift) {
  auto out = split_roots_impl(r, base, shift);
  if (!out) fail(ErrorCode::RetriesExhausted, "shift does not separate the roots");
  return *out;
}

bool share_component(const HomogeneousPoly& a, const HomogeneousPoly& b, std::uint64_t seed) {
  const int da = a.degree(), db = b.degree();
  if (da < 1 || db < 1) return false;
  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Transform3 m = random_transform(rng, 3);
    HomogeneousPoly fa = a.substitute(m), fb = b.substitute(m);
    if (fa.coeff({0, da, 0}).is_zero() || fb.coeff({0, db, 0}).is_zero()) continue;
    return resultant_in_v(dehomogenize(fa, 1, 2), dehomogenize(fb, 1, 2), da * db).is_zero();
  }
  fail(ErrorCode::RetriesExhausted, "no admissible projection for the component test");
}

IntersectionDivisor intersect_points(const HomogeneousPoly& d, const HomogeneousPoly& c,
                                     const IntersectOptions& opt) {
  const int d0 = d.degree(), d1 = c.degree();
  if (d0 < 1 || d1 < 1) fail(ErrorCode::InvalidInput, "intersection with a constant");
  const FieldPtr k = join_fields(d.field(), c.field());
  Rng rng(opt.seed);
  for (int attempt = 1; attempt <= opt.max_attempts; ++attempt) {
    Transform3 a = random_transform(rng, 2);
    const long shift = k ? rng.uniform(1, 4) : 0;
    HomogeneousPoly fd = d.substitute(a), fc = c.substitute(a);
    if (fd.coeff({0, d0, 0}).is_zero() || fc.coeff({0, d1, 0}).is_zero()) continue;
    UniPoly res = resultant_in_v(dehomogenize(fd, 1, 2), dehomogenize(fc, 1, 2), d0 * d1, opt.exec);
    if (res.is_zero()) fail(ErrorCode::CommonComponent, "the curves share a component");
    if (res.degree() < d0 * d1) continue;
    auto parts = squarefree_over(res, k);
    bool ok = true;
    IntersectionDivisor out;
    out.on_curve = d;
    out.cut_by = c;
    out.attempts = attempt;
    if (k) {
      // the orbits of different multiplicities must stay apart as well
      UniPoly prod = UniPoly::constant(AlgNum(1));
      for (auto& [r, m] : parts) prod = prod * r;
      if (!is_squarefree(shifted_norm(prod, k, shift))) continue;
    }
    for (auto& [r, m] : parts) {
      auto orbits = split_roots_impl(r, k, shift);
      if (!orbits) {
        ok = false;
        break;
      }
      for (auto& o : *orbits) {
        ProjPointCluster cl;
        cl.base = k;
        cl.field = o.field;
        cl.orbit_poly = o.minpoly;
        cl.shift = shift;
        cl.shear = a;
        cl.base_image = o.base_image;
        UniPoly g = gcd(fiber(fd, cl, o.root), fiber(fc, cl, o.root));
        if (g.degree() != 1) {
          ok = false;
          break;
        }
        AlgNum y = -g.coeff(0) / g.coeff(1);
        AlgNum one = o.field ? AlgNum(1).in_field(o.field) : AlgNum(1);
        Point3 p = normalize_point(transform_point(a, Point3{o.root, y, one}));
        if (k && o.field->degree() == k->degree()) {
          p = normalize_point(rebase_point(p, o.field, o.base_image, k));
          cl.field = k;
          cl.base_image = AlgNum::generator(k);
        }
        cl.point = p;
        out.points.push_back({cl, m});
      }
      if (!ok) break;
    }
    if (!ok) continue;
    if (out.total_degree() != d0 * d1) fail(ErrorCode::Internal, "intersection multiplicities violate Bezout");
    return out;
  }
  fail(ErrorCode::RetriesExhausted, "no separating shear found for the intersection");
}

IntersectionDivisor intersect(const PlaneCurve& d, const PlaneCurve& c, const IntersectOptions& opt) {
  IntersectionDivisor out = intersect_points(d.equation, c.equation, opt);
  if (opt.cross_validate) {
    for (auto& p : out.points) {
      OrderAlong o = order_along(d, p.cluster, c.equation, 2 * p.multiplicity + 2);
      if (o.kind != OrderAlong::Exact || o.value != p.multiplicity)
        fail(ErrorCode::Internal, "local intersection number disagrees with the resultant at " + describe(p.cluster));
    }
  }
  return out;
}

}  // namespace zariski
