#pragma once

#include <utility>
#include <vector>

#include "zariski/dense_poly.hpp"

namespace zariski {

// p = unit * prod f_i^e_i with every f_i monic and irreducible over Q.
struct QFactorization {
  Rat unit;
  std::vector<std::pair<QPoly, int>> factors;
};

// Factors are ordered by degree, then by coefficients.
QFactorization factor_q(const QPoly& p);

bool is_irreducible_q(const QPoly& p);

std::vector<Rat> rational_roots(const QPoly& p);

}  // namespace zariski
