#include "zariski/construction.hpp"

#include <algorithm>
#include <sstream>

#include "zariski/elliptic.hpp"
#include "zariski/errors.hpp"
#include "zariski/linear_algebra.hpp"

namespace zariski {

namespace {

Point3 cross(const Point3& a, const Point3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

AlgNum det3(const Point3& a, const Point3& b, const Point3& c) {
  Point3 ab = cross(a, b);
  return ab[0] * c[0] + ab[1] * c[1] + ab[2] * c[2];
}

Point3 line_coeffs(const HomogeneousPoly& l) {
  return {l.coeff({1, 0, 0}), l.coeff({0, 1, 0}), l.coeff({0, 0, 1})};
}

HomogeneousPoly tangent_at(const HomogeneousPoly& f, const Point3& p) {
  return HomogeneousPoly::linear(f.derivative(0).eval(p), f.derivative(1).eval(p), f.derivative(2).eval(p))
      .normalized();
}

Point3 lift(const Point3& p, const FieldPtr& f) {
  Point3 r;
  for (int i = 0; i < 3; ++i) r[i] = p[i].in_field(f);
  return r;
}

std::string ints(const std::vector<long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

[[noreturn]] void broken(const std::string& what) { fail(ErrorCode::TypeVerification, what); }

}  // namespace

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::TransversalSeed: return "transversal_seed";
    case StepKind::PowerOfK: return "power_of_k";
    case StepKind::FlexTriangles: return "flex-triangles";
    case StepKind::TangentBundle: return "tangent_bundle";
    case StepKind::ConicFlexPipeline: return "conic_flex_pipeline";
    case StepKind::VerifyOnly: return "verify_only";
  }
  return "?";
}

StepKind step_kind_from_string(const std::string& s) {
  for (StepKind k : {StepKind::TransversalSeed, StepKind::PowerOfK, StepKind::FlexTriangles, StepKind::TangentBundle,
                     StepKind::ConicFlexPipeline, StepKind::VerifyOnly})
    if (s == to_string(k)) return k;
  fail(ErrorCode::InvalidInput, "unknown construction step '" + s + "'");
}

HomogeneousPoly random_form(int degree, Rng& rng, long range) {
  if (degree < 0) fail(ErrorCode::InvalidInput, "negative degree");
  const auto mons = monomials_of_degree(degree);
  while (true) {
    HomogeneousPoly::Terms t;
    for (auto& e : mons) {
      long v = rng.uniform(-range, range);
      if (v != 0) t.emplace(e, AlgNum(v));
    }
    if (!t.empty()) return HomogeneousPoly(std::move(t));
  }
}

TypedPair verify_type(const PlaneCurve& d, const PlaneCurve& c, std::uint64_t seed, const ConstructionOptions& opt) {
  const FieldPtr base = join_fields(d.field(), c.field());
  PicardContext ctx;
  try {
    ctx = make_picard_context(d, base, seed, opt.trials);
  } catch (const Error& e) {
    broken("D is not certified smooth: " + std::string(e.what()));
  }
  ctx.intersect.exec = opt.exec;
  SmoothVerdict sc = check_smooth(c, opt.trials, seed);
  if (sc.kind == Smoothness::Singular) broken("C is singular at " + to_string(*sc.witness));
  if (sc.kind == Smoothness::Unknown) broken("C is not certified smooth");
  if (share_component(d.equation, c.equation, seed)) broken("D and C share a component");
  IntersectionDivisor cut = intersect(over_base(ctx, d), over_base(ctx, c), ctx.intersect);
  std::vector<long> mults;
  for (auto& p : cut.points) mults.push_back(p.multiplicity);
  if (mults.empty()) broken("D and C do not meet");
  for (long m : mults)
    if (m != mults[0]) broken("multiplicities not constant: " + ints(mults));
  TypedPair r;
  r.d = d;
  r.c = c;
  r.n = mults[0];
  if (c.degree() % r.n != 0)
    broken("n = " + std::to_string(r.n) + " does not divide deg C = " + std::to_string(c.degree()));
  DivisorClass cls = class_of_cut(ctx, cut, r.n);
  TorsionResult t = torsion_order(ctx, cls, r.n, opt.exec);
  if (t.order == 0) fail(ErrorCode::Internal, "C itself does not cut n times the class");
  r.nu = t.order;
  r.nu_witness = t.witness;
  return r;
}

TypedPair transversal_seed(int d0, int d1, std::uint64_t seed, const ConstructionOptions& opt) {
  if (d0 < 1 || d0 > d1) fail(ErrorCode::InvalidInput, "transversal seed needs 1 <= d0 <= d1");
  Rng rng(seed);
  for (int attempt = 0; attempt < opt.retries; ++attempt) {
    PlaneCurve d = make_curve(random_form(d0, rng, opt.coeff_range), "D");
    PlaneCurve c = make_curve(random_form(d1, rng, opt.coeff_range), "C");
    try {
      TypedPair p = verify_type(d, c, seed, opt);
      if (p.n != 1) continue;
      p.provenance.push_back(
          {StepKind::TransversalSeed, {{"d0", std::to_string(d0)}, {"d1", std::to_string(d1)}}, seed});
      return p;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TypeVerification) throw;
    }
  }
  fail(ErrorCode::RetriesExhausted, "no transversal pair of degrees " + std::to_string(d0) + ", " +
                                        std::to_string(d1) + " after " + std::to_string(opt.retries) + " draws");
}

std::optional<long> predicted_power_nu(long d0, long d1, long n, long nu) {
  if (d0 == d1) return nu;
  if (d0 < d1 && d0 % n == 0) return n;
  return std::nullopt;
}

TypedPair power_of_k(const TypedPair& pair, int k, std::uint64_t seed, const ConstructionOptions& opt) {
  const int d0 = pair.d0(), d1 = pair.d1();
  if (k < 1) fail(ErrorCode::InvalidInput, "k must be positive");
  if (k * d0 < d1)
    fail(ErrorCode::InvalidInput,
         "k*d0 = " + std::to_string(k * d0) + " is smaller than d1 = " + std::to_string(d1));
  IntersectOptions io;
  io.seed = seed;
  io.exec = opt.exec;
  const IntersectionDivisor cut = intersect(pair.d, pair.c, io);
  const std::optional<long> predicted = predicted_power_nu(d0, d1, pair.n, pair.nu);
  Rng rng(seed);
  for (int attempt = 0; attempt < opt.retries; ++attempt) {
    HomogeneousPoly g = random_form(k * d0 - d1, rng, opt.coeff_range);
    bool vanishes = false;
    for (auto& p : cut.points) vanishes = vanishes || p.cluster.embed(g).eval(p.cluster.point).is_zero();
    if (vanishes) continue;
    PlaneCurve b = make_curve(pair.d.equation.pow(k) + pair.c.equation * g, "B");
    if (check_smooth(b, opt.trials, seed).kind != Smoothness::Smooth) continue;
    PlaneCurve c = pair.c;
    c.name = "D";
    b.name = "C";
    TypedPair out;
    try {
      out = verify_type(c, b, seed, opt);
    } catch (const Error& e) {
      fail(ErrorCode::PredictionMismatch, std::string("power-of-k output is not of a type: ") + e.what());
    }
    if (out.n != k * pair.n)
      fail(ErrorCode::PredictionMismatch, "expected multiplicity " + std::to_string(k * pair.n) + ", found " +
                                              std::to_string(out.n));
    if (predicted && out.nu != *predicted)
      fail(ErrorCode::PredictionMismatch,
           "predicted nu = " + std::to_string(*predicted) + ", recomputed " + std::to_string(out.nu));
    out.provenance = pair.provenance;
    out.provenance.push_back({StepKind::PowerOfK,
                              {{"k", std::to_string(k)},
                               {"predicted_nu", predicted ? std::to_string(*predicted) : "none"},
                               {"g", g.to_string()}},
                              seed});
    return out;
  }
  fail(ErrorCode::RetriesExhausted, "no admissible g' after " + std::to_string(opt.retries) + " draws");
}

TypedPair replay(const std::vector<ConstructionStep>& steps, const ConstructionOptions& opt) {
  if (steps.empty()) fail(ErrorCode::InvalidInput, "empty construction chain");
  auto param = [](const ConstructionStep& s, const std::string& key) {
    auto it = s.params.find(key);
    if (it == s.params.end()) fail(ErrorCode::InvalidInput, std::string(to_string(s.kind)) + " step lacks " + key);
    return std::stoi(it->second);
  };
  std::optional<TypedPair> cur;
  for (auto& s : steps) {
    switch (s.kind) {
      case StepKind::TransversalSeed:
        cur = transversal_seed(param(s, "d0"), param(s, "d1"), s.seed, opt);
        break;
      case StepKind::ConicFlexPipeline:
        cur = build_4663(s.seed, opt).pair;
        break;
      case StepKind::PowerOfK:
        if (!cur) fail(ErrorCode::InvalidInput, "power_of_k step without a starting pair");
        cur = power_of_k(*cur, param(s, "k"), s.seed, opt);
        break;
      default:
        fail(ErrorCode::InvalidInput, std::string("step ") + to_string(s.kind) + " cannot be replayed");
    }
  }
  return *cur;
}

// ---------------------------------------------------------------------------

FlexTriangleArrangement flex_triangle_arrangement(const PlaneCurve& cubic, bool collinear, const FieldPtr& base,
                                   std::uint64_t seed) {
  if (cubic.degree() != 3) fail(ErrorCode::InvalidInput, "inflectional triangles need a cubic");
  PicardContext ctx = make_picard_context(cubic, base, seed);
  const PlaneCurve e = over_base(ctx, cubic);
  auto flex_cut = intersect(e, make_curve(hessian(e.equation)), ctx.intersect);
  std::vector<Point3> flexes;
  std::vector<std::string> missing;
  for (auto& p : flex_cut.points) {
    if (p.cluster.is_base_rational())
      flexes.push_back(p.cluster.point);
    else
      missing.push_back(describe(p.cluster));
  }
  const int nf = static_cast<int>(flexes.size());
  for (int a = 0; a < nf; ++a)
    for (int b = a + 1; b < nf; ++b)
      for (int c = b + 1; c < nf; ++c) {
        AlgNum det = det3(flexes[a], flexes[b], flexes[c]);
        if (det.is_zero() != collinear) continue;
        std::vector<PlaneCurve> lines;
        for (int i : {a, b, c})
          lines.push_back(make_curve(tangent_at(e.equation, flexes[i]), "L" + std::to_string(lines.size() + 1)));
        AlgNum ldet = det3(line_coeffs(lines[0].equation), line_coeffs(lines[1].equation),
                           line_coeffs(lines[2].equation));
        if (ldet.is_zero()) continue;
        DecompositionOptions opt;
        opt.seed = seed;
        opt.base = ctx.base;
        FlexTriangleArrangement r{build_decomposition(cubic, {lines}, opt, collinear ? "collinear" : "non-collinear"),
                           {flexes[a], flexes[b], flexes[c]},
                           lines,
                           det,
                           ldet};
        return r;
      }
  std::string msg = std::string("no ") + (collinear ? "collinear" : "non-collinear") +
                    " triple of inflection points with non-concurrent tangents over " +
                    (ctx.base ? "Q(" + ctx.base->symbol() + ")" : std::string("Q"));
  if (!missing.empty()) {
    msg += "; the other inflection points need an extension: ";
    for (std::size_t i = 0; i < missing.size(); ++i) msg += (i ? "; " : "") + missing[i];
  }
  fail(ErrorCode::UnavailableTriple, msg);
}

// ---------------------------------------------------------------------------

namespace {

// The form over K of degree s vanishing on every conjugate of the line through p and q.
HomogeneousPoly conjugate_lines(const ProjPointCluster& cl, const FieldPtr& base, const Point3& p_f) {
  const int s = cl.size();
  const int e = field_degree(base), fdeg = field_degree(cl.field);
  const auto mons = monomials_of_degree(s);
  std::vector<AlgNum> gen_pows;
  AlgNum g = base ? cl.embed(AlgNum::generator(base)) : AlgNum(1);
  AlgNum acc = cl.embed(AlgNum(1));
  for (int l = 0; l < e; ++l) {
    gen_pows.push_back(acc);
    acc = acc * g;
  }
  const int cols = static_cast<int>(mons.size()) * e;
  std::vector<std::vector<Rat>> rows((s + 1) * fdeg, std::vector<Rat>(cols));
  for (std::size_t i = 0; i < mons.size(); ++i)
    for (int l = 0; l < e; ++l) {
      UniPoly r = HomogeneousPoly::monomial(mons[i], gen_pows[l]).restrict_line(cl.point, p_f);
      for (int k = 0; k <= s; ++k)
        for (int c = 0; c < fdeg; ++c) rows[k * fdeg + c][i * e + l] = r.coeff(k).coord(c);
    }
  auto ker = kernel_q(matrix_from_rows(rows));
  if (ker.size() != 1) fail(ErrorCode::Internal, "conjugate tangent lines are not a single curve");
  HomogeneousPoly::Terms t;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    std::vector<Rat> c(ker[0].begin() + static_cast<long>(i) * e, ker[0].begin() + static_cast<long>(i + 1) * e);
    AlgNum a = base ? AlgNum(base, c) : AlgNum(c[0]);
    if (!a.is_zero()) t.emplace(mons[i], a);
  }
  return HomogeneousPoly(std::move(t), base).normalized();
}

int zero_order(const UniPoly& r) {
  int k = 0;
  while (k <= r.degree() && r.coeff(k).is_zero()) ++k;
  return k;
}

}  // namespace

std::vector<TangentLineOrbit> tangent_lines_through(const PlaneCurve& cubic, const Point3& p, const FieldPtr& base,
                                                    std::uint64_t seed) {
  if (cubic.degree() != 3) fail(ErrorCode::InvalidInput, "tangent lines through a point need a cubic");
  PicardContext ctx = make_picard_context(cubic, base, seed);
  const PlaneCurve e = over_base(ctx, cubic);
  const Point3 pk = normalize_point(lift(p, ctx.base));
  if (!e.equation.eval(pk).is_zero()) fail(ErrorCode::InvalidInput, "point " + to_string(pk) + " is not on the cubic");
  auto cut = intersect(e, make_curve(polar_curve(e.equation, pk)), ctx.intersect);
  std::vector<TangentLineOrbit> out;
  int count = 0;
  for (auto& q : cut.points) {
    if (q.cluster.is_base_rational() && same_projective_point(q.cluster.point, pk)) {
      if (q.multiplicity > 2)
        fail(ErrorCode::InvalidInput, to_string(pk) + " is an inflection point of the cubic");
      continue;
    }
    if (q.multiplicity != 1)
      fail(ErrorCode::InvalidInput, "tangency points from " + to_string(pk) + " collide at " + describe(q.cluster));
    const ProjPointCluster& cl = q.cluster;
    const Point3 pf = lift(pk, cl.field);
    const HomogeneousPoly ef = cl.embed(e.equation);
    // f(Q + t p): double root at Q, simple at p (t = infinity)
    UniPoly r = ef.restrict_line(cl.point, pf);
    if (zero_order(r) != 2 || r.degree() != 2)
      fail(ErrorCode::Internal, "line to " + describe(cl) + " is not simply tangent");
    TangentLineOrbit o;
    o.tangency = cl;
    Point3 lc = cross(pf, cl.point);
    o.line = HomogeneousPoly::linear(lc[0], lc[1], lc[2]).normalized();
    o.count = cl.size();
    o.lines = cl.size() == 1 ? HomogeneousPoly::linear(lc[0], lc[1], lc[2]).in_field(ctx.base).normalized()
                             : conjugate_lines(cl, ctx.base, pf);
    count += o.count;
    out.push_back(std::move(o));
  }
  if (count != 4)
    fail(ErrorCode::InvalidInput,
         to_string(pk) + " is not generic: " + std::to_string(count) + " tangency points instead of 4");
  return out;
}

FourTangentArrangement four_tangent_arrangement(bool equal_classes, std::uint64_t seed) {
  HomogeneousPoly::Terms t;
  t.emplace(Exponent{0, 2, 1}, AlgNum(1));
  t.emplace(Exponent{3, 0, 0}, AlgNum(-1));
  t.emplace(Exponent{1, 0, 2}, AlgNum(25));
  PlaneCurve e = make_curve(HomogeneousPoly(std::move(t)), "E");
  PicardContext ctx = make_picard_context(e, nullptr, seed);
  EllipticChart chart(ctx, {AlgNum(0), AlgNum(1), AlgNum(0)});
  const Point3 q0{AlgNum(-4), AlgNum(6), AlgNum(1)};
  FourTangentArrangement r;
  r.bases = {chart.mul(-2, q0), chart.mul(2, q0)};
  std::array<std::vector<PlaneCurve>, 2> through;
  std::array<std::vector<Point3>, 2> touch;
  for (int j = 0; j < 2; ++j) {
    for (auto& o : tangent_lines_through(e, r.bases[j], nullptr, seed)) {
      if (o.count != 1) fail(ErrorCode::Internal, "tangency points on the test cubic should be rational");
      through[j].push_back(make_curve(o.line));
      touch[j].push_back(o.tangency.point);
    }
  }
  auto name = [](int j, int k) { return "L" + std::to_string(j + 1) + std::to_string(k + 1); };
  DecompositionOptions opt;
  opt.seed = seed;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      PlaneCurve l1 = through[0][0], l2 = through[0][1], m1 = through[1][a], m2 = through[1][b];
      l1.name = name(0, 0);
      l2.name = name(0, 1);
      m1.name = name(1, 0);
      m2.name = name(1, 1);
      Decomposition dec = build_decomposition(e, {{l1, l2}, {m1, m2}}, opt, equal_classes ? "cyclic" : "non-cyclic");
      const bool same = is_principal(dec.ctx, combined_class(dec, {1, 1})).principal;
      if (same != equal_classes) continue;
      r.dec = std::move(dec);
      r.tangency = {{{touch[0][0], touch[0][1]}, {touch[1][a], touch[1][b]}}};
      return r;
    }
  fail(ErrorCode::Internal, "no choice of tangent pairs realizes the requested group");
}

// ---------------------------------------------------------------------------

Pipeline4663 build_4663(std::uint64_t seed, const ConstructionOptions& opt) {
  Rng rng(seed);
  const Point3 origin{AlgNum(0), AlgNum(1), AlgNum(0)};
  // cubics with (0:1:0) on z = 0 to order three: no x^2 y, x y^2, y^3
  const std::vector<Exponent> flex_mons{{3, 0, 0}, {2, 0, 1}, {1, 1, 1}, {1, 0, 2}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};
  for (int attempt = 1; attempt <= opt.retries; ++attempt) {
    std::array<Point3, 3> pts;
    for (auto& p : pts) p = {AlgNum(rng.uniform(-4, 4)), AlgNum(rng.uniform(-4, 4)), AlgNum(1)};
    const AlgNum det = det3(pts[0], pts[1], pts[2]);
    if (det.is_zero()) continue;
    std::vector<std::vector<Rat>> rows;
    for (auto& p : pts) {
      std::vector<Rat> row;
      for (auto& m : flex_mons) row.push_back(HomogeneousPoly::monomial(m, AlgNum(1)).eval(p).rational_value());
      rows.push_back(row);
    }
    auto ker = kernel_q(matrix_from_rows(rows));
    std::vector<Rat> coef(flex_mons.size(), Rat(0));
    for (auto& v : ker) {
      const long w = rng.uniform(-3, 3);
      for (std::size_t i = 0; i < coef.size(); ++i) coef[i] += v[i] * w;
    }
    if (coef[0] == 0 || coef[4] == 0) continue;
    HomogeneousPoly::Terms t;
    for (std::size_t i = 0; i < coef.size(); ++i)
      if (coef[i] != 0) t.emplace(flex_mons[i], AlgNum(coef[i]));
    PlaneCurve e = make_curve(HomogeneousPoly(std::move(t)).normalized(), "E");
    if (check_smooth(e, opt.trials, seed).kind != Smoothness::Smooth) continue;
    PicardContext ctx = make_picard_context(e, nullptr, seed, opt.trials);
    ctx.intersect.exec = opt.exec;

    std::vector<DivisorTerm> conds{{rational_cluster(origin), 2}};
    for (auto& p : pts) conds.push_back({rational_cluster(p), 1});
    auto conics = curves_through(ctx, conds, 2, opt.exec);
    if (conics.size() != 1) continue;
    const HomogeneousPoly conic = conics[0].normalized();
    if (share_component(e.equation, conic, seed)) continue;
    auto cut = intersect(e, make_curve(conic), ctx.intersect);
    std::optional<Point3> p4;
    bool expected = cut.total_degree() == 6;
    for (auto& q : cut.points) {
      const Point3& c = q.cluster.point;
      if (!q.cluster.is_base_rational()) {
        expected = false;
        continue;
      }
      if (same_projective_point(c, origin)) {
        expected = expected && q.multiplicity == 2;
      } else if (std::any_of(pts.begin(), pts.end(), [&](const Point3& p) { return same_projective_point(p, c); })) {
        expected = expected && q.multiplicity == 1;
      } else {
        expected = expected && q.multiplicity == 1 && !p4;
        p4 = c;
      }
    }
    if (!expected || !p4) continue;
    std::array<Point3, 4> all{pts[0], pts[1], pts[2], *p4};

    std::vector<std::pair<Point3, long>> triple;
    for (auto& p : all) triple.push_back({p, 3});
    PrincipalResult pr = is_principal(ctx, class_of_points(ctx, triple), opt.exec);
    if (!pr.principal || !pr.witness || pr.witness->degree() != 4)
      fail(ErrorCode::Internal, "3(P1+..+P4) is not cut by a quartic");
    const HomogeneousPoly witness = *pr.witness;

    std::optional<PlaneCurve> quartic;
    for (int i = 0; i < opt.retries && !quartic; ++i) {
      PlaneCurve c4 = make_curve((witness + random_form(1, rng, opt.coeff_range) * e.equation).normalized(), "D");
      if (check_smooth(c4, opt.trials, seed).kind == Smoothness::Smooth) quartic = c4;
    }
    if (!quartic) continue;
    std::optional<PlaneCurve> sextic;
    for (int i = 0; i < opt.retries && !sextic; ++i) {
      PlaneCurve b = make_curve(e.equation.pow(2) + quartic->equation * random_form(2, rng, opt.coeff_range), "C");
      if (check_smooth(b, opt.trials, seed).kind == Smoothness::Smooth) sextic = b;
    }
    if (!sextic) continue;

    Pipeline4663 r;
    r.attempts = attempt;
    r.cubic = e;
    r.origin = origin;
    r.points = all;
    r.conic = conic;
    r.quartic_witness = witness;
    r.collinearity_det = det.rational_value();
    r.pair = verify_type(*quartic, *sextic, seed, opt);
    if (r.pair.n != 6 || r.pair.nu != 3)
      fail(ErrorCode::PredictionMismatch, "pipeline produced type (4,6;" + std::to_string(r.pair.n) + "," +
                                              std::to_string(r.pair.nu) + ")");
    r.pair.provenance.push_back({StepKind::ConicFlexPipeline, {}, seed});
    for (long v = 1; v < r.pair.nu; ++v) r.excluded.push_back(v);

    // E and D osculate to order 3 at each Pi; a conic cutting 2 Pi on D meets E there at least twice
    PicardContext dctx = make_picard_context(*quartic, nullptr, seed, opt.trials);
    auto de = intersect(*quartic, e, dctx.intersect);
    r.tangent_conic_bound = 0;
    for (int i = 0; i < 4; ++i) {
      for (auto& q : de.points)
        if (q.cluster.is_base_rational() && same_projective_point(q.cluster.point, all[i]))
          r.cubic_quartic_mult[i] = q.multiplicity;
      r.tangent_conic_bound += std::min(2, r.cubic_quartic_mult[i]);
    }
    return r;
  }
  fail(ErrorCode::RetriesExhausted, "conic-flex pipeline failed after " + std::to_string(opt.retries) + " attempts");
}

}  // namespace zariski
