#pragma once

#include <cstdint>
#include <vector>

#include "zariski/cluster.hpp"
#include "zariski/curve.hpp"
#include "zariski/kernels.hpp"

namespace zariski {

struct IntersectionPoint {
  ProjPointCluster cluster;
  int multiplicity = 0;
};

struct IntersectionDivisor {
  HomogeneousPoly on_curve;
  HomogeneousPoly cut_by;
  std::vector<IntersectionPoint> points;
  int attempts = 0;

  int total_degree() const;
};

struct IntersectOptions {
  std::uint64_t seed = 1;
  int max_attempts = 32;
  bool cross_validate = true;
  Exec exec = Exec::Parallel;
};

// d must be smooth (not re-checked here); c arbitrary of degree >= 1.
IntersectionDivisor intersect(const PlaneCurve& d, const PlaneCurve& c, const IntersectOptions& opt = {});

// Same, for two curves that need not be smooth; multiplicities are intersection
// numbers only where d is smooth, so no cross-validation is attempted.
IntersectionDivisor intersect_points(const HomogeneousPoly& d, const HomogeneousPoly& c,
                                     const IntersectOptions& opt = {});

// Common component test by a sheared resultant.
bool share_component(const HomogeneousPoly& a, const HomogeneousPoly& b, std::uint64_t seed = 1);

// Splits a squarefree polynomial over K (the roots are x-coordinates) into orbits.
struct RootOrbit {
  FieldPtr field;
  QPoly minpoly;
  AlgNum root;
  AlgNum base_image;
};
std::vector<RootOrbit> split_roots(const UniPoly& r, const FieldPtr& base, long shift);

}  // namespace zariski
