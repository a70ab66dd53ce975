#pragma once

// Smooth plane cubics with a rational inflection point and a handful of known
// rational points, for comparing the group law with the linear-system test.

#include <string>
#include <vector>

#include "zariski/elliptic.hpp"
#include "zariski/poly_parser.hpp"

namespace zariski::testing {

struct ZooCubic {
  std::string name;
  PlaneCurve curve;
  Point3 origin;
  std::vector<Point3> points;
};

inline Point3 affine(const Rat& x, const Rat& y) { return {AlgNum(x), AlgNum(y), AlgNum(1)}; }

// Weierstrass-type equation y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, homogenized.
inline HomogeneousPoly weierstrass(const Rat& a1, const Rat& a3, const Rat& a2, const Rat& a4, const Rat& a6) {
  auto term = [](const Rat& c, Exponent e) { return HomogeneousPoly::monomial(e, AlgNum(c)); };
  return term(1, {0, 2, 1}) + term(a1, {1, 1, 1}) + term(a3, {0, 1, 2}) - term(1, {3, 0, 0}) -
         term(a2, {2, 0, 1}) - term(a4, {1, 0, 2}) - term(a6, {0, 0, 3});
}

// Moves everything by a random integer coordinate change.
inline ZooCubic disguise(ZooCubic z, Rng& rng) {
  Transform3 m = random_transform(rng, 2);
  Transform3 inv = inverse(m);
  z.curve = make_curve(z.curve.equation.substitute(m), z.name);
  z.origin = normalize_point(transform_point(inv, z.origin));
  for (auto& p : z.points) p = normalize_point(transform_point(inv, p));
  return z;
}

inline Rat rnd(Rng& rng, long lo, long hi) {
  long v = 0;
  while (v == 0) v = rng.uniform(lo, hi);
  return Rat(v);
}

inline std::vector<ZooCubic> cubic_zoo(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ZooCubic> out;
  const Point3 inf{AlgNum(0), AlgNum(1), AlgNum(0)};
  auto keep = [&](ZooCubic z) {
    if (check_smooth(z.curve).kind != Smoothness::Smooth) return false;
    out.push_back(disguise(std::move(z), rng));
    return true;
  };
  // through a random point
  while (true) {
    Rat u = rnd(rng, -4, 4), v = rnd(rng, -4, 4), a4 = rnd(rng, -5, 5);
    Rat a6 = v * v - u * u * u - a4 * u;
    if (keep({"short", make_curve(weierstrass(0, 0, 0, a4, a6)), inf, {affine(u, v)}})) break;
  }
  // full 2-torsion: y^2 = x (x - a)(x - b), b chosen to pass through (u, v)
  while (true) {
    Rat a = rnd(rng, -4, 4), u = rnd(rng, -4, 4), v = rnd(rng, -4, 4);
    if (u == a) continue;
    Rat b = u - v * v / (u * (u - a));
    if (b == 0 || b == a) continue;
    if (keep({"two-torsion", make_curve(weierstrass(0, 0, -(a + b), a * b, 0)), inf,
              {affine(0, 0), affine(a, 0), affine(b, 0), affine(u, v)}}))
      break;
  }
  // (0, 0) of order 3: y^2 + a xy + b y = x^3, b chosen to pass through (u, v)
  while (true) {
    Rat a = rnd(rng, -3, 3), u = rnd(rng, -4, 4), v = rnd(rng, -4, 4);
    Rat b = (u * u * u - v * v - a * u * v) / v;
    if (b == 0) continue;
    if (keep({"three-torsion", make_curve(weierstrass(a, b, 0, 0, 0)), inf, {affine(0, 0), affine(u, v)}})) break;
  }
  // Tate normal forms: (0, 0) of order 4 (c = 0) and 5 (b = c)
  while (true) {
    Rat b = rnd(rng, -6, 6);
    if (keep({"four-torsion", make_curve(weierstrass(1, -b, -b, 0, 0)), inf, {affine(0, 0)}})) break;
  }
  while (true) {
    Rat b = rnd(rng, -6, 6);
    if (keep({"five-torsion", make_curve(weierstrass(1 - b, -b, -b, 0, 0)), inf, {affine(0, 0)}})) break;
  }
  ZooCubic fermat{"fermat", make_curve(parse_curve_equation("x^3+y^3+z^3")), {AlgNum(1), AlgNum(-1), AlgNum(0)},
                  {{AlgNum(0), AlgNum(1), AlgNum(-1)}, {AlgNum(1), AlgNum(0), AlgNum(-1)}}};
  keep(fermat);
  return out;
}

}  // namespace zariski::testing
