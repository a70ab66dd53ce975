#pragma once

#include "zariski/picard.hpp"

namespace zariski {

// Group law on a smooth plane cubic with an inflection point as zero,
// by chords and tangents. Points are K-rational.
class EllipticChart {
 public:
  // Fails unless the cubic is smooth and the origin is an inflection point on it.
  EllipticChart(const PicardContext& ctx, const Point3& origin);

  const Point3& origin() const { return origin_; }
  const PicardContext& context() const { return ctx_; }

  // third intersection of the line through p and q (the tangent when p = q)
  Point3 third(const Point3& p, const Point3& q) const;
  Point3 add(const Point3& p, const Point3& q) const;
  Point3 neg(const Point3& p) const;
  Point3 mul(long k, const Point3& p) const;
  bool is_origin(const Point3& p) const { return same_projective_point(p, origin_); }

  // Sum of the points of a cluster of size at most 4; OracleUnavailable beyond.
  Point3 cluster_sum(const ProjPointCluster& c) const;
  // The point corresponding to the class; NotTestable for a non-integer o-multiple.
  Point3 class_point(const DivisorClass& c) const;

 private:
  PicardContext ctx_;
  Point3 origin_;
};

struct EllipticOrder {
  long order = 0;  // 0 when larger than the cap
  Point3 point;
};

EllipticOrder elliptic_class_order(const EllipticChart& ec, const DivisorClass& c, long cap);

}  // namespace zariski
