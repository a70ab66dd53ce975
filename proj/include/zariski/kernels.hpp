#pragma once

#include <vector>

#include "zariski/homogeneous_poly.hpp"
#include "zariski/number_field.hpp"

namespace zariski {

enum class Exec { Serial, Parallel };

// Polynomial in (u, v): entry j is the coefficient of v^j, a polynomial in u.
using BiPoly = std::vector<UniPoly>;

// f restricted to var[fixed] = 1, written in the remaining two variables.
BiPoly dehomogenize(const HomogeneousPoly& f, int eliminated, int fixed);

// Res_v(f, g) as a polynomial in u, by evaluation at u = 0, 1, ..., bound and
// interpolation. Leading coefficients in v must be nonzero constants.
UniPoly resultant_in_v(const BiPoly& f, const BiPoly& g, int bound, Exec exec = Exec::Parallel);

// Principal-class sweep support: evaluates pred(i) for i in [0, count) and
// returns the indices where it holds, in increasing order.
template <class Pred>
std::vector<long> sweep_indices(long count, Pred pred, Exec exec) {
  std::vector<char> hit(static_cast<std::size_t>(count), 0);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) hit[i] = pred(i) ? 1 : 0;
  } else {
    for (long i = 0; i < count; ++i) hit[i] = pred(i) ? 1 : 0;
  }
  std::vector<long> out;
  for (long i = 0; i < count; ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

}  // namespace zariski
