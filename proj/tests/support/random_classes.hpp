#pragma once

// Seeded random degree-zero classes on a zoo cubic: sums of three known
// points, or a conjugate pair cut by a random line plus one known point.

#include <optional>

#include "support/cubic_zoo.hpp"

namespace zariski::testing {

inline std::vector<Point3> point_pool(const ZooCubic& z, const EllipticChart& ec) {
  std::vector<Point3> pool = z.points;
  pool.push_back(ec.origin());
  const Point3 p = z.points.back();
  pool.push_back(ec.neg(p));
  pool.push_back(ec.add(p, p));
  if (z.points.size() > 1) pool.push_back(ec.add(z.points[0], p));
  return pool;
}

inline std::optional<DivisorClass> random_class(const PicardContext& ctx, const std::vector<Point3>& pool,
                                                bool conjugate, Rng& rng) {
  auto pick = [&]() -> const Point3& { return pool[rng.uniform(0, static_cast<long>(pool.size()) - 1)]; };
  if (!conjugate) {
    std::vector<std::pair<Point3, long>> pts;
    for (int j = 0; j < 3; ++j) pts.push_back({pick(), 1});
    return class_of_points(ctx, pts);
  }
  const Point3& a = pick();
  Point3 dir{AlgNum(rng.uniform(-3, 3)), AlgNum(rng.uniform(-3, 3)), AlgNum(rng.uniform(-3, 3))};
  HomogeneousPoly line = HomogeneousPoly::linear(a[1] * dir[2] - a[2] * dir[1], a[2] * dir[0] - a[0] * dir[2],
                                                 a[0] * dir[1] - a[1] * dir[0]);
  if (line.is_zero()) return std::nullopt;
  DivisorClass c = zero_class(ctx);
  for (auto& q : intersect(ctx.curve, make_curve(line)).points)
    if (q.cluster.size() == 2) c.terms.push_back({q.cluster, 1});
  if (c.terms.empty()) return std::nullopt;
  c = c + class_of_points(ctx, {{pick(), 1}});
  c.o_multiple = 1;
  return c;
}

}  // namespace zariski::testing
