// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support/helpers.hpp"
#include "support/random_classes.hpp"
#include "zariski/combinatorics.hpp"
#include "zariski/construction.hpp"
#include "zariski/cover.hpp"
#include "zariski/curve_file.hpp"
#include "zariski/elliptic.hpp"

using namespace zariski;
using namespace zariski::testing;

namespace {

// Collects failed expectations of one criterion.
struct Checks {
  std::vector<std::string> failed;
  int count = 0;
  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok) failed.push_back(what);
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<void(Checks&)> body;
};

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

std::string show(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string type_of(const TypedPair& p) {
  std::ostringstream os;
  os << "(" << p.d0() << "," << p.d1() << ";" << p.n << "," << p.nu << ")";
  return os.str();
}

// Shared constructions, built once.
struct Corpus {
  PlaneCurve fermat = curve("x^3+y^3+z^3", nullptr, "E");
  std::optional<FlexTriangleArrangement> collinear, general;
  std::optional<FourTangentArrangement> cyclic, full;
  std::vector<TypedPair> chain_a, chain_b;  // seed and every power step
  std::optional<Pipeline4663> p4663;

  Decomposition pair_dec(const TypedPair& p, const std::string& name) const {
    return build_decomposition(p.d, {{p.c}}, {}, name);
  }
};

Corpus corpus;

Decomposition two_triangles(bool swap) {
  FieldPtr w = eisenstein();
  std::vector<PlaneCurve> first{curve("x+y", w, "A1"), curve("y+z", w, "A2"), curve("x+z", w, "A3")};
  std::vector<PlaneCurve> second{curve("x+w^2*y", w, "B1"), curve("y+w^2*z", w, "B2"), curve("x+w^2*z", w, "B3")};
  DecompositionOptions opt;
  opt.base = w;
  std::vector<std::vector<PlaneCurve>> groups{first, second};
  if (swap) std::swap(groups[0], groups[1]);
  return build_decomposition(corpus.fermat, groups, opt, swap ? "triangles-swapped" : "triangles");
}

void flex_triangles(Checks& c) {
  corpus.collinear = flex_triangle_arrangement(corpus.fermat, true);
  corpus.general = flex_triangle_arrangement(corpus.fermat, false, eisenstein());
  const Decomposition& col = corpus.collinear.value().dec;
  const Decomposition& gen = corpus.general.value().dec;
  TorsionResult t1 = torsion_order(col.ctx, col.classes[0], col.n);
  TorsionResult t3 = torsion_order(gen.ctx, gen.classes[0], gen.n);
  c.expect(t1.order == 1, "collinear order " + std::to_string(t1.order));
  c.expect(t1.witness && *t1.witness == parse_poly("x+y+z"), "collinear witness is not x+y+z");
  c.expect(t3.order == 3, "non-collinear order " + std::to_string(t3.order));
  c.expect(corpus.general.value().flex_determinant.is_zero() == false, "non-collinear flexes are collinear");
  CertificationReport r = certify(col, gen);
  c.expect(r.verdict == Verdict::ZariskiPair, std::string("verdict ") + to_string(r.verdict));
  c.expect(r.rule == Rule::CorOrder, std::string("rule ") + to_string(r.rule));
}

void splitting(Checks& c) {
  Splitting s1 = splitting_number(corpus.collinear.value().dec, {1});
  Splitting s3 = splitting_number(corpus.general.value().dec, {1});
  c.expect(s1.nu == 1 && s1.s == 3, "collinear (nu,s) = (" + std::to_string(s1.nu) + "," + std::to_string(s1.s) + ")");
  c.expect(s3.nu == 3 && s3.s == 1, "non-collinear (nu,s) = (" + std::to_string(s3.nu) + "," + std::to_string(s3.s) + ")");
  std::vector<Decomposition> decs{corpus.collinear.value().dec, corpus.general.value().dec, two_triangles(false),
                                  two_triangles(true)};
  // later criteria append their decompositions through check_phi
  int entries = 0;
  for (auto& d : decs)
    for (auto& e : phi_map(d)) {
      ++entries;
      c.expect(e.s * e.nu == d.n, d.name + " " + to_string(e.a) + ": s*nu != n");
    }
  c.expect(entries >= 4, "too few entries");
}

// s * nu = n on every entry of the later constructions.
void check_phi(Checks& c, const Decomposition& d) {
  for (auto& e : phi_map(d)) c.expect(e.s * e.nu == d.n, d.name + " " + to_string(e.a) + ": s*nu != n");
}

void four_tangents(Checks& c) {
  corpus.cyclic = four_tangent_arrangement(true);
  corpus.full = four_tangent_arrangement(false);
  RelationLattice lc = tau_kernel(corpus.cyclic.value().dec), lf = tau_kernel(corpus.full.value().dec);
  c.expect(lc.invariant_factors == std::vector<Int>{1, 2}, "first group " + show(lc.invariant_factors));
  c.expect(lf.invariant_factors == std::vector<Int>{2, 2}, "second group " + show(lf.invariant_factors));
  CertificationReport r = certify(corpus.cyclic.value().dec, corpus.full.value().dec);
  c.expect(r.same_combinatorics, "combinatorics differ");
  c.expect(r.admissibility.all_equiv_maps_admissible, "an equivalence map is not admissible");
  c.expect(r.admissibility.total_maps > 0 && r.admissibility.admissible_maps == r.admissibility.total_maps,
           "admissible map count");
  c.expect(r.verdict == Verdict::ZariskiPair, std::string("verdict ") + to_string(r.verdict));
  c.expect(r.rule == Rule::CorGroup, std::string("rule ") + to_string(r.rule));
  check_phi(c, corpus.cyclic.value().dec);
  check_phi(c, corpus.full.value().dec);
}

// Runs a chain of power steps, re-deriving nu of each output with a fresh seed.
std::vector<TypedPair> chain(Checks& c, TypedPair p, const std::vector<std::pair<int, std::uint64_t>>& steps) {
  std::vector<TypedPair> out{p};
  for (auto [k, seed] : steps) {
    auto predicted = predicted_power_nu(p.d0(), p.d1(), p.n, p.nu);
    TypedPair q = power_of_k(p, k, seed);
    TypedPair again = verify_type(q.d, q.c, seed + 1000);
    c.expect(predicted.has_value(), type_of(p) + " has no prediction");
    c.expect(predicted && again.nu == *predicted,
             type_of(p) + " ->" + std::to_string(k) + " gives " + type_of(again));
    c.expect(again.n == q.n && again.nu == q.nu, "construction and re-verification disagree on " + type_of(q));
    p = q;
    out.push_back(q);
  }
  return out;
}

void power_chains(Checks& c) {
  corpus.chain_a = chain(c, transversal_seed(1, 4, 11), {{6, 21}});
  corpus.chain_b = chain(c, transversal_seed(2, 2, 5), {{2, 7}, {3, 9}});
  const TypedPair& a = corpus.chain_a.back();
  const TypedPair& b = corpus.chain_b.back();
  c.expect(type_of(a) == "(4,6;6,1)", "first chain ends at " + type_of(a));
  c.expect(type_of(corpus.chain_b[1]) == "(2,4;2,1)", "second chain passes " + type_of(corpus.chain_b[1]));
  c.expect(type_of(b) == "(4,6;6,2)", "second chain ends at " + type_of(b));
  TypedPair replayed = replay(a.provenance);
  c.expect(replayed.d.equation == a.d.equation && replayed.c.equation == a.c.equation, "replay differs");
  for (auto* ch : {&corpus.chain_a, &corpus.chain_b})
    for (std::size_t i = 0; i < ch->size(); ++i) check_phi(c, corpus.pair_dec((*ch)[i], "chain"));
}

void pipeline(Checks& c) {
  corpus.p4663 = build_4663(3);
  const Pipeline4663& p = corpus.p4663.value();
  TypedPair again = verify_type(p.pair.d, p.pair.c, 77);
  c.expect(type_of(again) == "(4,6;6,3)", "pipeline type " + type_of(again));
  Decomposition d = corpus.pair_dec(p.pair, "pipeline");
  for (long v : {1L, 2L}) {
    PrincipalResult r = is_principal(d.ctx, scaled(d.classes[0], v));
    c.expect(!r.principal, std::to_string(v) + " times the class is principal");
  }
  c.expect(p.excluded == std::vector<long>{1, 2}, "excluded set");
  c.expect(p.collinearity_det != 0, "P1, P2, P3 collinear");
  c.expect(p.tangent_conic_bound > p.tangent_conic_bezout,
           "bound " + std::to_string(p.tangent_conic_bound) + " <= " + std::to_string(p.tangent_conic_bezout));
  check_phi(c, d);
}

void tuple(Checks& c) {
  std::vector<Decomposition> members{corpus.pair_dec(corpus.chain_a.back(), "nu1"),
                                     corpus.pair_dec(corpus.chain_b.back(), "nu2"),
                                     corpus.pair_dec(corpus.p4663.value().pair, "nu3")};
  const std::filesystem::path extra = std::filesystem::path(ZARISKI_DATA_DIR) / "type_4666.json";
  if (std::filesystem::exists(extra)) {
    TypedPair p = pair_from_file(read_curve_file(extra.string()));
    c.expect(p.n == 6 && p.nu == 6, "supplied fourth member has type " + type_of(p));
    members.push_back(corpus.pair_dec(p, "nu6"));
  } else {
    std::printf("      no %s: checking the three constructible members\n", extra.filename().c_str());
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      CertificationReport r = certify(members[i], members[j]);
      const std::string tag = members[i].name + "/" + members[j].name;
      c.expect(r.verdict == Verdict::ZariskiPair, tag + " verdict " + to_string(r.verdict));
      c.expect(r.rule == Rule::CorOrder, tag + std::string(" rule ") + to_string(r.rule));
    }
}

void oracle(Checks& c) {
  Rng rng(2024);
  int compared = 0, cubics = 0, finite = 0;
  for (ZooCubic& z : cubic_zoo(11)) {
    PicardContext ctx = make_picard_context(z.curve, nullptr, 5);
    EllipticChart ec(ctx, z.origin);
    const auto pool = point_pool(z, ec);
    int here = 0;
    for (int i = 0; i < 15; ++i) {
      auto cls = random_class(ctx, pool, i % 3 == 2, rng);
      if (!cls) continue;
      const long cap = 6;
      const long lin = torsion_order_capped(ctx, *cls, cap).order;
      const long grp = elliptic_class_order(ec, *cls, cap).order;
      c.expect(lin == grp, z.name + ": " + describe(*cls) + " linear systems " + std::to_string(lin) +
                               ", group law " + std::to_string(grp));
      ++here;
      if (lin > 0) ++finite;
    }
    compared += here;
    if (here > 0) ++cubics;
  }
  c.expect(compared >= 50, "only " + std::to_string(compared) + " classes");
  c.expect(cubics >= 5, "only " + std::to_string(cubics) + " cubics");
  c.expect(finite >= 10, "only " + std::to_string(finite) + " classes of finite order");
  std::printf("      %d classes on %d cubics, %d of order <= 6\n", compared, cubics, finite);
}

void bezout_and_shear(Checks& c) {
  Rng rng(314);
  int done = 0;
  for (int trial = 0; trial < 16; ++trial) {
    const int d0 = 2 + trial % 3, d1 = 1 + trial % 4;
    PlaneCurve d = make_curve(random_form(d0, rng, 5));
    if (check_smooth(d).kind != Smoothness::Smooth) continue;
    PlaneCurve e = make_curve(random_form(d1, rng, 5));
    if (share_component(d.equation, e.equation)) continue;
    IntersectOptions a, b;
    a.seed = 1 + trial;
    b.seed = 500 + trial;
    b.exec = Exec::Serial;
    auto da = intersect(d, e, a), db = intersect(d, e, b);
    c.expect(da.total_degree() == d0 * d1, "Bezout total on trial " + std::to_string(trial));
    bool same = da.points.size() == db.points.size();
    for (auto& p : da.points) {
      int matches = 0;
      for (auto& q : db.points) matches += p.multiplicity == q.multiplicity && same_orbit(p.cluster, q.cluster);
      same = same && matches == 1;
    }
    c.expect(same, "shear dependence on trial " + std::to_string(trial));
    ++done;
  }
  c.expect(done >= 10, "only " + std::to_string(done) + " random intersections");
  for (auto* dec : {&corpus.collinear.value().dec, &corpus.cyclic.value().dec})
    for (auto& cut : dec->cuts) c.expect(cut.total_degree() == dec->ctx.curve.degree() * cut.cut_by.degree(), "cut total");
}

void lattice_properties(Checks& c) {
  std::vector<Decomposition> decs{two_triangles(false), corpus.cyclic.value().dec, corpus.full.value().dec};
  for (auto& d : decs) {
    for (auto& a : theta(d.n, d.degrees).reps)
      for (long l = 1; l < d.n; ++l) {
        if (std::gcd(l, d.n) != 1) continue;
        IntVec scaled_a;
        for (long x : a) scaled_a.push_back((l * x) % d.n);
        c.expect(splitting_number(d, a).nu == splitting_number(d, scaled_a).nu, d.name + " unit scaling " + to_string(a));
      }
    RelationLattice lat = tau_kernel(d);
    for (int j = 0; j < d.k(); ++j) {
      IMatrix rows = lat.hnf;
      std::vector<Int> v(d.k(), Int(0));
      v[j] = d.n;
      rows.push_back(v);
      c.expect(hermite_normal_form(rows) == lat.hnf, d.name + " kernel misses n e_j");
    }
    RelationLattice serial = tau_kernel(d, Exec::Serial);
    c.expect(serial.hnf == lat.hnf, d.name + " serial and parallel sweeps differ");
  }
  RelationLattice t = tau_kernel(decs[0]), ts = tau_kernel(two_triangles(true));
  c.expect(permuted_hnf(t, {1, 0}) == ts.hnf, "triangles: permuted kernel");
  for (auto* a : {&corpus.cyclic.value(), &corpus.full.value()}) {
    const Decomposition& d = a->dec;
    Decomposition sw = build_decomposition(d.ctx.curve, {d.groups[1], d.groups[0]}, {}, d.name + "-swapped");
    c.expect(permuted_hnf(tau_kernel(d), {1, 0}) == tau_kernel(sw).hnf, d.name + ": permuted kernel");
  }
}

void certify_symmetry(Checks& c) {
  std::vector<std::pair<const Decomposition*, const Decomposition*>> pairs{
      {&corpus.collinear.value().dec, &corpus.general.value().dec}, {&corpus.cyclic.value().dec, &corpus.full.value().dec}};
  Decomposition a = corpus.pair_dec(corpus.chain_a.back(), "a"), b = corpus.pair_dec(corpus.chain_b.back(), "b");
  pairs.push_back({&a, &b});
  pairs.push_back({&a, &a});
  for (auto [x, y] : pairs) {
    CertificationReport r1 = certify(*x, *y), r2 = certify(*y, *x);
    c.expect(r1.verdict == r2.verdict && r1.rule == r2.rule, x->name + "/" + y->name + " not symmetric");
  }
}

void round_trips(Checks& c) {
  Rng rng(6);
  FieldPtr w = eisenstein();
  for (int i = 0; i < 60; ++i) {
    const FieldPtr f = i % 2 ? w : nullptr;
    HomogeneousPoly::Terms t;
    for (auto& e : monomials_of_degree(1 + i % 5)) {
      if (rng.uniform(0, 2) == 0) continue;
      const long den = rng.uniform(1, 5);
      AlgNum v = f ? AlgNum(f, {make_rat(rng.uniform(-7, 7), den), make_rat(rng.uniform(-7, 7), den)})
                   : AlgNum(make_rat(rng.uniform(-7, 7), den));
      t.emplace(e, v);
    }
    HomogeneousPoly p(t, f);
    if (p.is_zero()) continue;
    const std::string s = to_string(p);
    HomogeneousPoly q = parse_poly(s, f);
    c.expect(q == p && to_string(q) == s, "polynomial round trip: " + s);
  }
  for (auto& entry : std::filesystem::directory_iterator(ZARISKI_DATA_DIR)) {
    if (entry.path().extension() != ".json") continue;
    const std::string text = read_text(entry.path().string());
    CurveFile f = parse_curve_file(text);
    const std::string once = serialize(f);
    c.expect(serialize(parse_curve_file(once)) == once, entry.path().filename().string() + " round trip");
  }
}

void properties(Checks& c) {
  bezout_and_shear(c);
  lattice_properties(c);
  certify_symmetry(c);
  round_trips(c);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "inflectional triangles on the Fermat cubic", 30, flex_triangles},
      {2, "splitting numbers and s*nu = n", 10, splitting},
      {3, "four tangent lines", 300, four_tangents},
      {4, "power-of-k chains", 600, power_chains},
      {5, "type (4,6;6,3) pipeline", 600, pipeline},
      {6, "Zariski tuple of quartic-sextic pairs", 600, tuple},
      {7, "group law agrees with linear systems", 300, oracle},
      {8, "property suites", 1200, properties},
  };
  int failures = 0;
  for (auto& cr : criteria) {
    Checks checks;
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      cr.body(checks);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::vector<std::string> problems = checks.failed;
    if (!error.empty()) problems.push_back("exception: " + error);
    if (secs > cr.budget_s) problems.push_back("over budget");
    const bool ok = problems.empty();
    failures += !ok;
    std::printf("%s criterion %d: %s (%d checks, %.2f s, budget %.0f s)%s%s\n", ok ? "PASS" : "FAIL", cr.id, cr.title,
                checks.count, secs, cr.budget_s, ok ? "" : ": ", join(problems).c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
