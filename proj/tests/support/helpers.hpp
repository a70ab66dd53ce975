#pragma once

#include "zariski/curve.hpp"
#include "zariski/errors.hpp"
#include "zariski/poly_parser.hpp"

namespace zariski::testing {

inline PlaneCurve curve(const char* text, const FieldPtr& f = nullptr, const char* name = "") {
  return make_curve(parse_curve_equation(text, f), name);
}

inline Point3 pt(long a, long b, long c) { return {AlgNum(a), AlgNum(b), AlgNum(c)}; }

inline FieldPtr eisenstein() { return NumberField::make(QPoly({Rat(1), Rat(1), Rat(1)}), "w"); }

// Error code raised by fn, or Internal when it returns normally.
template <class F>
ErrorCode code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace zariski::testing
