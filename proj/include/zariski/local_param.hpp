#pragma once

#include <array>
#include <vector>

#include "zariski/cluster.hpp"
#include "zariski/curve.hpp"

namespace zariski {

using Series = std::vector<AlgNum>;  // truncated power series in s, low order first

Series series_mul(const Series& a, const Series& b, int len);

// Branch of a smooth curve through the representative point of a cluster:
// coords[chart] = 1, coords[param_var] = center + s, coords[solved_var] = series.
struct LocalParam {
  Point3 center;
  FieldPtr field;
  int order = 0;  // series are exact modulo s^(order+1)
  int chart = 2, param_var = 0, solved_var = 1;
  std::array<Series, 3> coords;
};

LocalParam local_param(const PlaneCurve& d, const ProjPointCluster& c, int order);

// h(coords(s)) modulo s^(order+1), with coefficients of h mapped into the cluster field.
Series evaluate_along(const LocalParam& p, const ProjPointCluster& c, const HomogeneousPoly& h);

struct OrderAlong {
  enum Kind { Exact, AtLeast, VanishesOnCurve } kind = Exact;
  int value = 0;
};

// Valuation of h at the point along d, exact when below cap.
OrderAlong order_along(const PlaneCurve& d, const ProjPointCluster& c, const HomogeneousPoly& h, int cap);
OrderAlong order_along(const PlaneCurve& d, const ProjPointCluster& c, const LocalParam& param,
                       const HomogeneousPoly& h, int cap);

}  // namespace zariski
