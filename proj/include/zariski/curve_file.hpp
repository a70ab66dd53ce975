#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "zariski/construction.hpp"
#include "zariski/cover.hpp"

namespace zariski {

struct DecompositionSpec {
  std::string name;
  std::string smooth;                          // curve name of D
  std::vector<std::vector<std::string>> parts;  // curve names per part
};

// Curves and decompositions over Q or a single number field.
struct CurveFile {
  FieldPtr field;
  std::vector<PlaneCurve> curves;
  std::vector<DecompositionSpec> decompositions;
  std::vector<ConstructionStep> provenance;

  const PlaneCurve& curve(const std::string& name) const;
  const DecompositionSpec& decomposition(const std::string& name) const;
};

// Fails with InvalidInput (structure, dangling or repeated names) or the parser's errors.
CurveFile parse_curve_file(const std::string& text);
// "-" reads standard input.
CurveFile read_curve_file(const std::string& path);
std::string read_text(const std::string& path);

nlohmann::ordered_json to_json(const CurveFile& f);
// Canonical text: two-space indentation, trailing newline.
std::string serialize(const CurveFile& f);

Decomposition load_decomposition(const CurveFile& f, const std::string& name, const DecompositionOptions& opt = {});

// File holding a typed pair as curves D and C and the decomposition "pair".
CurveFile pair_file(const TypedPair& p);
TypedPair pair_from_file(const CurveFile& f, std::uint64_t seed = 1, const ConstructionOptions& opt = {});

std::string sha256_hex(const std::string& data);

}  // namespace zariski
