#pragma once

#include <optional>
#include <vector>

#include "zariski/curve.hpp"
#include "zariski/intersection.hpp"
#include "zariski/kernels.hpp"

namespace zariski {

// A certified smooth curve D together with the field K over which divisors
// and cutting curves live. The reference class is a line section of D.
struct PicardContext {
  PlaneCurve curve;
  FieldPtr base;
  SmoothVerdict smooth;
  IntersectOptions intersect;

  int degree() const { return curve.degree(); }
};

// Fails with NotSmooth (carrying the witness) or SmoothnessUncertified.
PicardContext make_picard_context(const PlaneCurve& d, const FieldPtr& base = nullptr, std::uint64_t seed = 1,
                                  int trials = 8);

// The curve with its coefficients moved into the context field.
PlaneCurve over_base(const PicardContext& ctx, const PlaneCurve& c);

struct DivisorTerm {
  ProjPointCluster cluster;
  long coeff = 0;
};

// The class of  sum coeff * cluster - o_multiple * (line section).
struct DivisorClass {
  FieldPtr base;
  std::vector<DivisorTerm> terms;
  Rat o_multiple;

  long effective_degree() const;
  bool is_zero_divisor() const { return terms.empty(); }
};

DivisorClass zero_class(const PicardContext& ctx);
DivisorClass scaled(const DivisorClass& c, long k);
// Merges clusters describing the same orbit.
DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
// Effective divisor of K-rational points with o_multiple = degree / deg D.
DivisorClass class_of_points(const PicardContext& ctx, const std::vector<std::pair<Point3, long>>& pts);
// Cut of a curve divided by n; fails with NotDivisible when n does not divide the local data.
DivisorClass class_of_cut(const PicardContext& ctx, const IntersectionDivisor& cut, long n);
DivisorClass class_of_decomposition(const PicardContext& ctx, const PlaneCurve& part, long n);

std::string describe(const DivisorClass& c);

// Basis over Q of the curves h of degree m with coefficients in K and
// ord_P(h|_D) >= coeff(P) at every term. Polynomials are K-coefficient forms.
std::vector<HomogeneousPoly> curves_through(const PicardContext& ctx, const std::vector<DivisorTerm>& conditions,
                                            int m, Exec exec = Exec::Parallel);

struct PrincipalResult {
  bool principal = false;
  std::optional<HomogeneousPoly> witness;
  int solution_dim = 0;  // over Q
  int trivial_dim = 0;   // multiples of the equation of D
};

// Fails with NotTestable when o_multiple is not an integer.
PrincipalResult is_principal(const PicardContext& ctx, const DivisorClass& c, Exec exec = Exec::Parallel);

struct TorsionResult {
  long order = 0;  // 0 when no tested multiple was principal
  std::optional<HomogeneousPoly> witness;
  std::vector<long> tested;
};

// Least divisor v of n with v * c principal.
TorsionResult torsion_order(const PicardContext& ctx, const DivisorClass& c, long n, Exec exec = Exec::Parallel);
// Least v in [1, cap].
TorsionResult torsion_order_capped(const PicardContext& ctx, const DivisorClass& c, long cap,
                                   Exec exec = Exec::Parallel);

std::vector<long> divisors_of(long n);

}  // namespace zariski
