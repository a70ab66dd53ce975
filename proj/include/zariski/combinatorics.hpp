#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zariski/cover.hpp"

namespace zariski {

struct CombComponent {
  int id = 0;
  int degree = 0;
  std::string name;
};

// One Galois orbit of singular points of the union; every point of the orbit
// has the same incidence data, so the orbit stands for `copies` points.
struct CombPoint {
  std::vector<int> incident;                       // sorted component ids
  std::map<std::pair<int, int>, int> pairwise_mult;  // keys (i, j) with i < j
  int copies = 1;
  std::string where;
};

// Incidence encoding of an arrangement of smooth curves.
struct CombType {
  std::vector<CombComponent> components;
  std::vector<CombPoint> points;

  int point_count() const;
  // Sum of copies * multiplicity over the points on components i and j.
  long pair_total(int i, int j) const;
};

// Fails with OutOfScope when a component is not certified smooth and with
// CommonComponent when two components share a factor.
CombType comb_type(const std::vector<PlaneCurve>& components, const FieldPtr& base = nullptr,
                   std::uint64_t seed = 1, int trials = 8);
// Components ordered as D, then the curves of each group in order.
CombType comb_type(const Decomposition& dec);

struct EquivMap {
  std::vector<int> component_bijection;
  // Expanded points (orbit by orbit, copy by copy); one representative of the
  // point bijections compatible with the component bijection.
  std::vector<int> point_bijection;
  Int point_choices;  // number of compatible point bijections
};

std::vector<EquivMap> equiv_maps(const CombType& t1, const CombType& t2);

struct AdmissibleSet {
  bool all_equiv_maps_admissible = false;
  std::vector<std::vector<int>> permutations;  // rho[j] = image of part j
  std::size_t total_maps = 0;
  std::size_t admissible_maps = 0;
};

AdmissibleSet admissible(const Decomposition& dec1, const Decomposition& dec2, const std::vector<EquivMap>& maps);

enum class Verdict { ZariskiPair, Inconclusive };
enum class Rule { None, Theorem, CorOrder, CorOrderTuple, CorGroup };

const char* to_string(Verdict v);
const char* to_string(Rule r);

struct KernelComparison {
  std::vector<int> rho;
  bool equal = false;
};

struct CertificationReport {
  Verdict verdict = Verdict::Inconclusive;
  Rule rule = Rule::None;
  std::string reason;
  long n = 0;
  bool same_combinatorics = false;
  std::size_t equivalence_maps = 0;
  AdmissibleSet admissibility;
  std::vector<long> orders1, orders2;
  bool kernels_computed = false;
  std::vector<Int> invariant_factors1, invariant_factors2;
  IMatrix hnf1, hnf2;
  std::vector<KernelComparison> kernels;
};

struct CertifyOptions {
  Exec exec = Exec::Parallel;
  long max_sweep = 10000;
};

// Fails with NMismatch when the two decompositions have different n.
CertificationReport certify(const Decomposition& dec1, const Decomposition& dec2, const CertifyOptions& opt = {});

}  // namespace zariski
