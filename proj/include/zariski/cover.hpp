#pragma once

#include <string>
#include <vector>

#include "zariski/integer_lattice.hpp"
#include "zariski/picard.hpp"

namespace zariski {

// A smooth curve D with an ordered list of parts; part j is the union of the
// curves in groups[j].
struct Decomposition {
  std::string name;
  PicardContext ctx;
  std::vector<std::vector<PlaneCurve>> groups;
  std::vector<HomogeneousPoly> parts;      // product of each group
  std::vector<IntersectionDivisor> cuts;   // part j restricted to D, merged over the group
  std::vector<long> degrees;
  long n = 0;
  std::vector<DivisorClass> classes;       // d_j, with o-multiple d_j / n

  int k() const { return static_cast<int>(parts.size()); }
};

struct DecompositionOptions {
  std::uint64_t seed = 1;
  int trials = 8;
  FieldPtr base;
  Exec exec = Exec::Parallel;
  long max_sweep = 10000;
};

// Fails with CommonComponent, NotSmooth or SmoothnessUncertified.
Decomposition build_decomposition(const PlaneCurve& d, const std::vector<std::vector<PlaneCurve>>& groups,
                                  const DecompositionOptions& opt = {}, std::string name = "");

using IntVec = std::vector<long>;

struct ThetaSet {
  long n = 0;
  IntVec degrees;
  std::vector<IntVec> reps;  // lexicographically least in each unit-scaling orbit
};

ThetaSet theta(long n, const IntVec& degrees);
bool in_theta(long n, const IntVec& degrees, const IntVec& a);
// Least representative of {l * a mod n : gcd(l, n) = 1}.
IntVec unit_normal_form(const IntVec& a, long n);

// sum a_j d_j with every a_j reduced modulo n
DivisorClass combined_class(const Decomposition& dec, const IntVec& a);

struct Splitting {
  IntVec a;
  long nu = 0;
  long s = 0;
};

// Fails with NotInTheta unless a lies in the index set.
Splitting splitting_number(const Decomposition& dec, const IntVec& a, Exec exec = Exec::Parallel);
std::vector<Splitting> phi_map(const Decomposition& dec, Exec exec = Exec::Parallel);

struct RelationLattice {
  long n = 0;
  int k = 0;
  std::vector<IntVec> principal;  // every a in {0..n-1}^k with sum a_j t_j = 0
  IMatrix generators;             // principal vectors and n e_j
  IMatrix hnf;
  std::vector<Int> invariant_factors;  // of Z^k / ker, one per coordinate
};

// Exhaustive sweep of (Z/n)^k; fails with SweepGuard when n^k exceeds the guard.
RelationLattice tau_kernel(const Decomposition& dec, Exec exec = Exec::Parallel, long max_sweep = 10000);

// Kernel after renaming coordinates: row a becomes (a_{rho^{-1}(1)}, ...), rho[j] = image of j.
IMatrix permuted_hnf(const RelationLattice& lat, const std::vector<int>& rho);

std::string to_string(const IntVec& v);

}  // namespace zariski
