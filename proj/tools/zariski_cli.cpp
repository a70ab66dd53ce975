// Command-line front end: curve files in, tables or JSON reports out.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "zariski/combinatorics.hpp"
#include "zariski/construction.hpp"
#include "zariski/curve_file.hpp"
#include "zariski/errors.hpp"
#include "zariski/poly_parser.hpp"

using namespace zariski;
using nlohmann::ordered_json;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  int trials = 8;
  long max_sweep = 10000;
  bool json = false;
  std::string output = "-";
};

struct Run {
  const Globals& g;
  std::string command;
  ordered_json inputs = ordered_json::array();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  CurveFile load(const std::string& path) {
    std::string text = read_text(path);
    inputs.push_back({{"path", path}, {"sha256", sha256_hex(text)}});
    return parse_curve_file(text);
  }

  DecompositionOptions dopt() const {
    DecompositionOptions o;
    o.seed = g.seed;
    o.trials = g.trials;
    o.max_sweep = g.max_sweep;
    return o;
  }

  // JSON report or plain text; returns the exit status.
  int emit(const ordered_json& results, const std::string& text, int status = 0) {
    if (g.json) {
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      ordered_json r{{"command", command},
                     {"inputs", inputs},
                     {"seeds", {{"seed", g.seed}, {"trials", g.trials}, {"max_sweep", g.max_sweep}}},
                     {"results", results},
                     {"timing_ms", ms}};
      std::cout << r.dump(2) << "\n";
    } else {
      std::cout << text;
    }
    return status;
  }
};

std::string ints(const std::vector<long>& v) { return to_string(v); }

std::string ints(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

ordered_json matrix_json(const IMatrix& m) {
  ordered_json j = ordered_json::array();
  for (auto& row : m) {
    ordered_json r = ordered_json::array();
    for (auto& v : row) r.push_back(v.get_str());
    j.push_back(r);
  }
  return j;
}

std::string matrix_text(const IMatrix& m) {
  std::string s;
  for (auto& row : m) s += "  " + ints(row) + "\n";
  return s;
}

int cmd_intersect(Run& run, const std::string& file, const std::string& dn, const std::string& cn) {
  CurveFile f = run.load(file);
  PicardContext ctx = make_picard_context(f.curve(dn), f.field, run.g.seed, run.g.trials);
  IntersectionDivisor cut = intersect(over_base(ctx, f.curve(dn)), over_base(ctx, f.curve(cn)), ctx.intersect);
  ordered_json pts = ordered_json::array();
  std::string text = "points of " + dn + " meeting " + cn + ":\n";
  for (auto& p : cut.points) {
    pts.push_back({{"point", describe(p.cluster)}, {"conjugates", p.cluster.size()}, {"multiplicity", p.multiplicity}});
    text += "  " + describe(p.cluster) + "  multiplicity " + std::to_string(p.multiplicity) + "\n";
  }
  text += "total " + std::to_string(cut.total_degree()) + "\n";
  return run.emit({{"points", pts}, {"total", cut.total_degree()}}, text);
}

int cmd_torsion(Run& run, const std::string& file, const std::string& dn) {
  CurveFile f = run.load(file);
  Decomposition dec = load_decomposition(f, dn, run.dopt());
  ordered_json parts = ordered_json::array();
  std::string text = "n = " + std::to_string(dec.n) + "\n";
  for (int j = 0; j < dec.k(); ++j) {
    TorsionResult t = torsion_order(dec.ctx, dec.classes[j], dec.n);
    ordered_json pj{{"part", j + 1}, {"degree", dec.degrees[j]}, {"nu", t.order}};
    if (t.witness) pj["witness"] = t.witness->to_string();
    parts.push_back(pj);
    text += "part " + std::to_string(j + 1) + ": nu = " + std::to_string(t.order) +
            (t.witness ? "  witness " + t.witness->to_string() : std::string()) + "\n";
  }
  return run.emit({{"n", dec.n}, {"parts", parts}}, text);
}

int cmd_splitting(Run& run, const std::string& file, const std::string& dn) {
  CurveFile f = run.load(file);
  Decomposition dec = load_decomposition(f, dn, run.dopt());
  ordered_json rows = ordered_json::array();
  std::string text = "n = " + std::to_string(dec.n) + "\n";
  if (dec.n < 2) text += "no cyclic covers to split (n < 2)\n";
  for (auto& s : phi_map(dec)) {
    rows.push_back({{"a", s.a}, {"nu", s.nu}, {"s", s.s}});
    text += "  a = " + to_string(s.a) + "  nu = " + std::to_string(s.nu) + "  s = " + std::to_string(s.s) + "\n";
  }
  return run.emit({{"n", dec.n}, {"theta", rows}}, text);
}

int cmd_group(Run& run, const std::string& file, const std::string& dn) {
  CurveFile f = run.load(file);
  Decomposition dec = load_decomposition(f, dn, run.dopt());
  RelationLattice lat = tau_kernel(dec, Exec::Parallel, run.g.max_sweep);
  ordered_json inv = ordered_json::array();
  for (auto& v : lat.invariant_factors) inv.push_back(v.get_str());
  std::string text = "n = " + std::to_string(lat.n) + ", k = " + std::to_string(lat.k) + "\n" +
                     "invariant factors " + ints(lat.invariant_factors) + "\n" + "relation kernel (Hermite form):\n" +
                     matrix_text(lat.hnf);
  return run.emit({{"n", lat.n}, {"k", lat.k}, {"invariant_factors", inv}, {"kernel_hnf", matrix_json(lat.hnf)},
                   {"principal_vectors", lat.principal.size()}},
                  text);
}

int cmd_certify(Run& run, const std::string& file, const std::string& d1, const std::string& d2) {
  CurveFile f = run.load(file);
  Decomposition a = load_decomposition(f, d1, run.dopt()), b = load_decomposition(f, d2, run.dopt());
  CertifyOptions co;
  co.max_sweep = run.g.max_sweep;
  CertificationReport r = certify(a, b, co);
  ordered_json kernels = ordered_json::array();
  for (auto& k : r.kernels) kernels.push_back({{"rho", k.rho}, {"equal", k.equal}});
  ordered_json res{{"verdict", to_string(r.verdict)},
                   {"rule", to_string(r.rule)},
                   {"reason", r.reason},
                   {"n", r.n},
                   {"same_combinatorics", r.same_combinatorics},
                   {"equivalence_maps", r.equivalence_maps},
                   {"all_maps_admissible", r.admissibility.all_equiv_maps_admissible},
                   {"admissible_permutations", r.admissibility.permutations},
                   {"orders", {r.orders1, r.orders2}}};
  if (r.kernels_computed) {
    ordered_json i1 = ordered_json::array(), i2 = ordered_json::array();
    for (auto& v : r.invariant_factors1) i1.push_back(v.get_str());
    for (auto& v : r.invariant_factors2) i2.push_back(v.get_str());
    res["invariant_factors"] = {i1, i2};
    res["kernel_hnf"] = {matrix_json(r.hnf1), matrix_json(r.hnf2)};
    res["kernel_comparisons"] = kernels;
  }
  std::string text = std::string("verdict: ") + to_string(r.verdict) + "\n";
  if (r.verdict == Verdict::ZariskiPair) text += std::string("rule: ") + to_string(r.rule) + "\n";
  if (!r.reason.empty()) text += "reason: " + r.reason + "\n";
  text += "n = " + std::to_string(r.n) + ", equivalence maps " + std::to_string(r.equivalence_maps) +
          ", admissible permutations " + std::to_string(r.admissibility.permutations.size()) + "\n";
  if (!r.orders1.empty()) text += "orders " + ints(r.orders1) + " vs " + ints(r.orders2) + "\n";
  if (r.kernels_computed)
    text += "invariant factors " + ints(r.invariant_factors1) + " vs " + ints(r.invariant_factors2) + "\n";
  return run.emit(res, text, r.verdict == Verdict::ZariskiPair ? 0 : 2);
}

int cmd_verify(Run& run, const std::string& file, const std::string& dn, const std::string& cn) {
  CurveFile f = run.load(file);
  ConstructionOptions o;
  o.trials = run.g.trials;
  TypedPair p = verify_type(f.curve(dn), f.curve(cn), run.g.seed, o);
  std::string type = "(" + std::to_string(p.d0()) + "," + std::to_string(p.d1()) + ";" + std::to_string(p.n) + "," +
                     std::to_string(p.nu) + ")";
  ordered_json res{{"type", type}, {"d0", p.d0()}, {"d1", p.d1()}, {"n", p.n}, {"nu", p.nu}};
  if (p.nu_witness) res["witness"] = p.nu_witness->to_string();
  return run.emit(res, "type " + type + "\n" + (p.nu_witness ? "witness " + p.nu_witness->to_string() + "\n" : ""));
}

// Adds c under `name` unless an equal curve is already present; returns the name used.
std::string add_curve(CurveFile& f, const PlaneCurve& c, const std::string& name) {
  for (auto& e : f.curves)
    if (e.equation == c.equation) return e.name;
  PlaneCurve n = c;
  n.name = name;
  f.curves.push_back(n);
  return name;
}

CurveFile flex_triangles_file(std::uint64_t seed) {
  FieldPtr w = NumberField::make(parse_univariate("w^2+w+1", "w"), "w");
  PlaneCurve fermat = make_curve(parse_curve_equation("x^3+y^3+z^3"), "E");
  FlexTriangleArrangement col = flex_triangle_arrangement(fermat, true, w, seed);
  FlexTriangleArrangement gen = flex_triangle_arrangement(fermat, false, w, seed);
  CurveFile f;
  f.field = w;
  f.curves.push_back(fermat);
  std::vector<std::string> a, b;
  for (auto& l : col.lines) a.push_back(add_curve(f, l, "A" + std::to_string(a.size() + 1)));
  for (auto& l : gen.lines) b.push_back(add_curve(f, l, "B" + std::to_string(b.size() + 1)));
  f.decompositions = {{"collinear", "E", {a}}, {"non-collinear", "E", {b}}};
  f.provenance.push_back({StepKind::FlexTriangles, {}, seed});
  return f;
}

CurveFile tangents_file(std::uint64_t seed) {
  FourTangentArrangement cyc = four_tangent_arrangement(true, seed), full = four_tangent_arrangement(false, seed);
  CurveFile f;
  f.curves.push_back(cyc.dec.ctx.curve);
  f.curves.back().name = "E";
  std::vector<std::vector<std::string>> pc, pf;
  for (int j = 0; j < 2; ++j) {
    std::vector<std::string> gc, gf;
    for (int i = 0; i < 2; ++i) {
      gc.push_back(add_curve(f, cyc.dec.groups[j][i], "L" + std::to_string(j + 1) + std::to_string(i + 1)));
      gf.push_back(add_curve(f, full.dec.groups[j][i], "M" + std::to_string(j + 1) + std::to_string(i + 1)));
    }
    pc.push_back(gc);
    pf.push_back(gf);
  }
  f.decompositions = {{"cyclic", "E", pc}, {"non-cyclic", "E", pf}};
  f.provenance.push_back({StepKind::TangentBundle, {}, seed});
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion divisors, splitting numbers and Zariski pair certification for plane curves"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "random seed for projections, shears and constructions");
  app.add_option("--trials", g.trials, "random projections tried for smoothness certificates");
  app.add_option("--max-sweep", g.max_sweep, "largest n^k swept when computing relation kernels");
  app.add_flag("--json", g.json, "machine-readable report");

  std::string file, a, b, recipe = "transversal", from;
  int d0 = 1, d1 = 4, k = 2;

  auto* inter = app.add_subcommand("intersect", "intersection points of a smooth curve D with a curve C");
  inter->add_option("file", file)->required();
  inter->add_option("D", a)->required();
  inter->add_option("C", b)->required();
  auto* tors = app.add_subcommand("torsion", "n and the torsion order of each part");
  tors->add_option("file", file)->required();
  tors->add_option("decomposition", a)->required();
  auto* split = app.add_subcommand("splitting", "splitting numbers over the index set");
  split->add_option("file", file)->required();
  split->add_option("decomposition", a)->required();
  auto* grp = app.add_subcommand("group", "invariant factors of the torsion group");
  grp->add_option("file", file)->required();
  grp->add_option("decomposition", a)->required();
  auto* cert = app.add_subcommand("certify", "Zariski pair certification of two decompositions");
  cert->add_option("file", file)->required();
  cert->add_option("first", a)->required();
  cert->add_option("second", b)->required();
  auto* ver = app.add_subcommand("verify-type", "certify the type (d0,d1;n,nu) of two curves");
  ver->add_option("file", file)->required();
  ver->add_option("D", a)->required();
  ver->add_option("C", b)->required();
  auto* cons = app.add_subcommand("construct", "build curves and write a curve file");
  cons->add_option("--recipe", recipe, "transversal | power-k | flex-triangles | tangents | type-4663")
      ->check(CLI::IsMember({"transversal", "power-k", "flex-triangles", "tangents", "type-4663"}));
  cons->add_option("--d0", d0, "degree of D for the transversal recipe");
  cons->add_option("--d1", d1, "degree of C for the transversal recipe");
  cons->add_option("--from", from, "curve file with curves D and C for power-k");
  cons->add_option("--k", k, "exponent for power-k");
  cons->add_option("-o,--output", g.output, "output path, - for standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  Run run{g, app.get_subcommands().front()->get_name()};
  try {
    if (*inter) return cmd_intersect(run, file, a, b);
    if (*tors) return cmd_torsion(run, file, a);
    if (*split) return cmd_splitting(run, file, a);
    if (*grp) return cmd_group(run, file, a);
    if (*cert) return cmd_certify(run, file, a, b);
    if (*ver) return cmd_verify(run, file, a, b);
    if (*cons) {
      ConstructionOptions o;
      o.trials = g.trials;
      CurveFile out;
      if (recipe == "transversal") {
        out = pair_file(transversal_seed(d0, d1, g.seed, o));
      } else if (recipe == "power-k") {
        if (from.empty()) throw Error(ErrorCode::InvalidInput, "power-k needs --from FILE");
        out = pair_file(power_of_k(pair_from_file(run.load(from), g.seed, o), k, g.seed, o));
      } else if (recipe == "flex-triangles") {
        out = flex_triangles_file(g.seed);
      } else if (recipe == "tangents") {
        out = tangents_file(g.seed);
      } else {
        Pipeline4663 p = build_4663(g.seed, o);
        out = pair_file(p.pair);
        out.curves.push_back(p.cubic);
      }
      const std::string text = serialize(out);
      if (g.output == "-") {
        std::cout << text;
      } else {
        std::ofstream os(g.output);
        if (!os) throw Error(ErrorCode::InvalidInput, "cannot write " + g.output);
        os << text;
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.message() << "\n";
    return exit_status(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 3;
}
