#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zariski/cover.hpp"

namespace zariski {

enum class StepKind { TransversalSeed, PowerOfK, FlexTriangles, TangentBundle, ConicFlexPipeline, VerifyOnly };

const char* to_string(StepKind k);
StepKind step_kind_from_string(const std::string& s);

struct ConstructionStep {
  StepKind kind = StepKind::VerifyOnly;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
};

// D smooth of degree d0, C smooth of degree d1, every point of D and C meeting
// with multiplicity n, and nu the order of the class of (C|_D)/n - (d1/n) o.
struct TypedPair {
  PlaneCurve d;
  PlaneCurve c;
  long n = 0;
  long nu = 0;
  std::optional<HomogeneousPoly> nu_witness;  // curve of degree nu*d1/n cutting nu times the class
  std::vector<ConstructionStep> provenance;

  int d0() const { return d.degree(); }
  int d1() const { return c.degree(); }
};

struct ConstructionOptions {
  int retries = 32;
  long coeff_range = 10;  // random forms draw integer coefficients from [-range, range]
  int trials = 8;         // smoothness projections
  Exec exec = Exec::Parallel;
};

// Dense form of the given degree with random integer coefficients; never zero.
HomogeneousPoly random_form(int degree, Rng& rng, long range);

// Fails with TypeVerification naming the broken invariant.
TypedPair verify_type(const PlaneCurve& d, const PlaneCurve& c, std::uint64_t seed = 1,
                      const ConstructionOptions& opt = {});

TypedPair transversal_seed(int d0, int d1, std::uint64_t seed, const ConstructionOptions& opt = {});

// nu of the output pair when the prediction applies, nullopt otherwise.
std::optional<long> predicted_power_nu(long d0, long d1, long n, long nu);

// B = f0^k + f1 g' for the pair (D: f0, C: f1); returns (C, B) of type
// (d1, k d0; k n, nu'). A recomputed nu' that contradicts the prediction, or a
// multiplicity other than k n, fails with PredictionMismatch.
TypedPair power_of_k(const TypedPair& pair, int k, std::uint64_t seed, const ConstructionOptions& opt = {});

// Re-executes a chain of transversal_seed / power_of_k / conic_flex_pipeline steps.
TypedPair replay(const std::vector<ConstructionStep>& steps, const ConstructionOptions& opt = {});

// Three inflectional tangents of a smooth cubic at flexes rational over base.
struct FlexTriangleArrangement {
  Decomposition dec;
  std::array<Point3, 3> flexes;
  std::vector<PlaneCurve> lines;
  AlgNum flex_determinant;  // zero exactly for collinear flexes
  AlgNum line_determinant;  // nonzero: the lines are not concurrent
};

// Fails with UnavailableTriple naming the fields of the missing flexes.
FlexTriangleArrangement flex_triangle_arrangement(const PlaneCurve& cubic, bool collinear, const FieldPtr& base = nullptr,
                                   std::uint64_t seed = 1);

// One Galois orbit of tangent lines through a point of a cubic.
struct TangentLineOrbit {
  ProjPointCluster tangency;
  HomogeneousPoly line;   // representative, coefficients in the tangency field
  HomogeneousPoly lines;  // product of the conjugate lines, coefficients in the base field
  int count = 0;
};

// The four lines through p tangent to the cubic elsewhere. Fails with
// InvalidInput when p is an inflection point or the tangency points collide.
std::vector<TangentLineOrbit> tangent_lines_through(const PlaneCurve& cubic, const Point3& p,
                                                    const FieldPtr& base = nullptr, std::uint64_t seed = 1);

// E + (two tangents through P1) + (two tangents through P2) on
// y^2 z = x^3 - 25 x z^2; equal_classes selects t_1 = t_2 (group Z/2) or
// t_1 != t_2 (group Z/2 + Z/2).
struct FourTangentArrangement {
  Decomposition dec;
  std::array<Point3, 2> bases;
  std::array<std::array<Point3, 2>, 2> tangency;
};

FourTangentArrangement four_tangent_arrangement(bool equal_classes, std::uint64_t seed = 1);

// The quartic-sextic pair built from a cubic E with a flex O, three general
// points and the conic through them tangent to E at O.
struct Pipeline4663 {
  TypedPair pair;
  PlaneCurve cubic;
  Point3 origin;
  std::array<Point3, 4> points;
  HomogeneousPoly conic;
  HomogeneousPoly quartic_witness;   // cuts 3(P1+..+P4) on E
  Rat collinearity_det;              // of P1, P2, P3; nonzero excludes nu = 1
  std::array<int, 4> cubic_quartic_mult{};  // (E . D)_{Pi}
  long tangent_conic_bound = 0;      // lower bound for C'.E of a conic cutting 2(P1+..+P4) on D
  long tangent_conic_bezout = 6;
  std::vector<long> excluded;        // nu values ruled out by the linear systems
  int attempts = 0;
};

Pipeline4663 build_4663(std::uint64_t seed, const ConstructionOptions& opt = {});

}  // namespace zariski
