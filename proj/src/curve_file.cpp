#include "zariski/curve_file.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include "zariski/errors.hpp"
#include "zariski/poly_parser.hpp"

namespace zariski {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(ErrorCode::InvalidInput, "curve file: " + msg); }

const ordered_json& member(const ordered_json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where + " lacks \"" + key + "\"");
  return j.at(key);
}

std::string text_of(const ordered_json& j, const std::string& where) {
  if (!j.is_string()) bad(where + " must be a string");
  return j.get<std::string>();
}

}  // namespace

const PlaneCurve& CurveFile::curve(const std::string& name) const {
  for (auto& c : curves)
    if (c.name == name) return c;
  bad("no curve named '" + name + "'");
}

const DecompositionSpec& CurveFile::decomposition(const std::string& name) const {
  for (auto& d : decompositions)
    if (d.name == name) return d;
  bad("no decomposition named '" + name + "'");
}

CurveFile parse_curve_file(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) bad("top level must be an object");
  CurveFile f;
  if (j.contains("field") && !j.at("field").is_null()) {
    const auto& fj = j.at("field");
    std::string symbol = text_of(member(fj, "symbol", "field"), "field.symbol");
    std::string minpoly = text_of(member(fj, "minpoly", "field"), "field.minpoly");
    f.field = NumberField::make(parse_univariate(minpoly, symbol), symbol);
  }
  std::set<std::string> names;
  const auto& cj = member(j, "curves", "file");
  if (!cj.is_array()) bad("\"curves\" must be a list");
  for (auto& c : cj) {
    std::string name = text_of(member(c, "name", "curve"), "curve name");
    if (name.empty() || !names.insert(name).second) bad("curve name '" + name + "' is empty or repeated");
    std::string eq = text_of(member(c, "equation", "curve " + name), "equation of " + name);
    try {
      f.curves.push_back(make_curve(parse_curve_equation(eq, f.field), name));
    } catch (const Error& e) {
      fail(e.code(), "curve " + name + ": " + e.message());
    }
  }
  if (j.contains("decompositions")) {
    std::set<std::string> dnames;
    for (auto& d : j.at("decompositions")) {
      DecompositionSpec s;
      s.name = text_of(member(d, "name", "decomposition"), "decomposition name");
      if (!dnames.insert(s.name).second) bad("decomposition name '" + s.name + "' is repeated");
      s.smooth = text_of(member(d, "smooth", "decomposition " + s.name), "smooth component");
      if (!names.count(s.smooth)) bad("decomposition " + s.name + " refers to unknown curve '" + s.smooth + "'");
      std::set<std::string> used{s.smooth};
      const auto& parts = member(d, "parts", "decomposition " + s.name);
      if (!parts.is_array() || parts.empty()) bad("decomposition " + s.name + " needs a non-empty list of parts");
      for (auto& g : parts) {
        if (!g.is_array() || g.empty()) bad("decomposition " + s.name + " has an empty part");
        std::vector<std::string> group;
        for (auto& n : g) {
          std::string cn = text_of(n, "part member");
          if (!names.count(cn)) bad("decomposition " + s.name + " refers to unknown curve '" + cn + "'");
          if (!used.insert(cn).second) bad("curve '" + cn + "' appears twice in decomposition " + s.name);
          group.push_back(cn);
        }
        s.parts.push_back(group);
      }
      f.decompositions.push_back(s);
    }
  }
  if (j.contains("provenance")) {
    for (auto& p : j.at("provenance")) {
      ConstructionStep st;
      st.kind = step_kind_from_string(text_of(member(p, "kind", "provenance step"), "kind"));
      const auto& seed = member(p, "seed", "provenance step");
      if (!seed.is_number_unsigned()) bad("provenance seed must be a non-negative integer");
      st.seed = seed.get<std::uint64_t>();
      if (p.contains("params"))
        for (auto& [k, v] : p.at("params").items()) st.params[k] = text_of(v, "provenance parameter " + k);
      f.provenance.push_back(st);
    }
  }
  return f;
}

std::string read_text(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidInput, "cannot open " + path);
    os << in.rdbuf();
  }
  return os.str();
}

CurveFile read_curve_file(const std::string& path) { return parse_curve_file(read_text(path)); }

ordered_json to_json(const CurveFile& f) {
  ordered_json j;
  if (f.field) j["field"] = {{"symbol", f.field->symbol()}, {"minpoly", to_string(f.field->minpoly(), f.field->symbol())}};
  j["curves"] = ordered_json::array();
  for (auto& c : f.curves) j["curves"].push_back({{"name", c.name}, {"equation", c.equation.to_string()}});
  j["decompositions"] = ordered_json::array();
  for (auto& d : f.decompositions) j["decompositions"].push_back({{"name", d.name}, {"smooth", d.smooth}, {"parts", d.parts}});
  if (!f.provenance.empty()) {
    j["provenance"] = ordered_json::array();
    for (auto& s : f.provenance) {
      ordered_json params = ordered_json::object();
      for (auto& [k, v] : s.params) params[k] = v;
      j["provenance"].push_back({{"kind", to_string(s.kind)}, {"seed", s.seed}, {"params", params}});
    }
  }
  return j;
}

std::string serialize(const CurveFile& f) { return to_json(f).dump(2) + "\n"; }

Decomposition load_decomposition(const CurveFile& f, const std::string& name, const DecompositionOptions& opt) {
  const DecompositionSpec& s = f.decomposition(name);
  std::vector<std::vector<PlaneCurve>> groups;
  for (auto& g : s.parts) {
    std::vector<PlaneCurve> group;
    for (auto& n : g) group.push_back(f.curve(n));
    groups.push_back(group);
  }
  DecompositionOptions o = opt;
  o.base = join_fields(opt.base, f.field);
  return build_decomposition(f.curve(s.smooth), groups, o, name);
}

CurveFile pair_file(const TypedPair& p) {
  CurveFile f;
  f.field = join_fields(p.d.field(), p.c.field());
  PlaneCurve d = p.d, c = p.c;
  d.name = "D";
  c.name = "C";
  f.curves = {d, c};
  f.decompositions.push_back({"pair", "D", {{"C"}}});
  f.provenance = p.provenance;
  return f;
}

TypedPair pair_from_file(const CurveFile& f, std::uint64_t seed, const ConstructionOptions& opt) {
  TypedPair p = verify_type(f.curve("D"), f.curve("C"), seed, opt);
  p.provenance = f.provenance;
  return p;
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    fail(ErrorCode::Internal, "SHA-256 digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

}  // namespace zariski
