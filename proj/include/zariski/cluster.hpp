#pragma once

#include <string>
#include <vector>

#include "zariski/curve.hpp"
#include "zariski/homogeneous_poly.hpp"

namespace zariski {

// One orbit of projective points under the automorphisms of the closure over
// the base field K. A representative point is stored with coordinates in its
// residue field F; the other points are its conjugates over K.
struct ProjPointCluster {
  FieldPtr base;     // K; null means Q
  FieldPtr field;    // F; equals base when the points are K-rational
  QPoly orbit_poly;  // minimal polynomial over Q of x + shift * (generator of K) after the shear
  long shift = 0;
  Transform3 shear;  // coordinates in which the orbit was separated
  Point3 point;      // representative, first nonzero coordinate equal to 1
  AlgNum base_image; // image of the generator of K in F (unused when K = Q)

  int size() const { return field_degree(field) / field_degree(base); }
  bool is_base_rational() const { return size() == 1; }
  // K -> F
  AlgNum embed(const AlgNum& a) const;
  HomogeneousPoly embed(const HomogeneousPoly& h) const;
};

// Cluster for a single K-rational point.
ProjPointCluster rational_cluster(const Point3& p, const FieldPtr& base = nullptr);

// True when both clusters describe the same orbit of points.
bool same_orbit(const ProjPointCluster& a, const ProjPointCluster& b);

std::string describe(const ProjPointCluster& c);

}  // namespace zariski
