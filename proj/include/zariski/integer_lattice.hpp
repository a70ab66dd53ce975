#pragma once

#include <vector>

#include "zariski/rational.hpp"

namespace zariski {

using IMatrix = std::vector<std::vector<Int>>;

struct SmithForm {
  IMatrix diag;              // same shape as the input
  IMatrix left, right;       // unimodular, left * input * right = diag
  std::vector<Int> factors;  // d_1 | d_2 | ..., one per diagonal position
};

SmithForm smith_normal_form(const IMatrix& m);

// Nonzero invariant factors of the row lattice.
std::vector<Int> smith_invariants(const IMatrix& m);

// Row Hermite normal form: positive pivots, entries above a pivot reduced into
// [0, pivot), zero rows dropped.
IMatrix hermite_normal_form(IMatrix m);

IMatrix multiply(const IMatrix& a, const IMatrix& b);
Int determinant(const IMatrix& m);

}  // namespace zariski
