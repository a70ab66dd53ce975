#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "zariski/homogeneous_poly.hpp"

namespace zariski {

struct PlaneCurve {
  HomogeneousPoly equation;
  std::string name;
  bool reduced = false;

  int degree() const { return equation.degree(); }
  const FieldPtr& field() const { return equation.field(); }
};

// Fails on the zero polynomial or degree 0. The reduced flag is set when a
// squarefree restriction to a random line is found within `trials` attempts.
PlaneCurve make_curve(HomogeneousPoly equation, std::string name = "", std::uint64_t seed = 1,
                      int trials = 8);

bool certify_reduced(const HomogeneousPoly& f, std::uint64_t seed, int trials = 8);

enum class Smoothness { Smooth, Singular, Unknown };

struct SmoothVerdict {
  Smoothness kind = Smoothness::Unknown;
  Transform3 projection;         // coordinate change that produced the certificate
  bool modular = false;          // certificate obtained modulo `prime`
  std::uint64_t prime = 0;
  std::optional<Point3> witness;  // singular point, normalized
  FieldPtr witness_field;
  int attempts = 0;
};

const char* to_string(Smoothness s);

SmoothVerdict check_smooth(const PlaneCurve& c, int trials = 8, std::uint64_t seed = 1);

// p_x f_x + p_y f_y + p_z f_z
HomogeneousPoly polar_curve(const HomogeneousPoly& f, const Point3& p);
// determinant of the matrix of second partials
HomogeneousPoly hessian(const HomogeneousPoly& f);

// First nonzero coordinate scaled to 1.
Point3 normalize_point(const Point3& p);
bool is_zero_point(const Point3& p);
bool same_projective_point(const Point3& a, const Point3& b);
std::string to_string(const Point3& p);

// Random invertible integer matrix with entries in [-range, range].
Transform3 random_transform(Rng& rng, long range);

}  // namespace zariski
