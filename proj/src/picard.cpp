#include "zariski/picard.hpp"

#include <sstream>

#include "zariski/errors.hpp"
#include "zariski/linear_algebra.hpp"
#include "zariski/local_param.hpp"

namespace zariski {

namespace {

long binom2(long m) { return m < 0 ? 0 : (m + 1) * (m + 2) / 2; }

}  // namespace

PlaneCurve over_base(const PicardContext& ctx, const PlaneCurve& c) {
  if (!ctx.base) return c;
  PlaneCurve r = c;
  r.equation = c.equation.in_field(join_fields(ctx.base, c.field()));
  return r;
}

PicardContext make_picard_context(const PlaneCurve& d, const FieldPtr& base, std::uint64_t seed, int trials) {
  PicardContext ctx;
  ctx.base = join_fields(base, d.field());
  ctx.curve = d;
  ctx.smooth = check_smooth(d, trials, seed);
  ctx.intersect.seed = seed;
  if (ctx.smooth.kind == Smoothness::Singular)
    fail(ErrorCode::NotSmooth, "curve " + d.name + " is singular at " + to_string(*ctx.smooth.witness));
  if (ctx.smooth.kind == Smoothness::Unknown)
    fail(ErrorCode::SmoothnessUncertified,
         "no smoothness certificate for " + d.name + " after " + std::to_string(trials) + " projections");
  return ctx;
}

long DivisorClass::effective_degree() const {
  long s = 0;
  for (auto& t : terms) s += t.coeff * t.cluster.size();
  return s;
}

DivisorClass zero_class(const PicardContext& ctx) {
  DivisorClass c;
  c.base = ctx.base;
  c.o_multiple = 0;
  return c;
}

DivisorClass scaled(const DivisorClass& c, long k) {
  if (k < 0) fail(ErrorCode::InvalidInput, "negative multiple of an effective class");
  DivisorClass r;
  r.base = c.base;
  r.o_multiple = c.o_multiple * k;
  if (k == 0) return r;
  r.terms = c.terms;
  for (auto& t : r.terms) t.coeff *= k;
  return r;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  if (!same_field(a.base, b.base)) fail(ErrorCode::FieldMismatch, "classes over different base fields");
  DivisorClass r = a;
  r.o_multiple += b.o_multiple;
  for (auto& t : b.terms) {
    bool merged = false;
    for (auto& s : r.terms)
      if (same_orbit(s.cluster, t.cluster)) {
        s.coeff += t.coeff;
        merged = true;
        break;
      }
    if (!merged) r.terms.push_back(t);
  }
  return r;
}

DivisorClass class_of_points(const PicardContext& ctx, const std::vector<std::pair<Point3, long>>& pts) {
  DivisorClass r = zero_class(ctx);
  for (auto& [p, k] : pts) {
    if (k < 0) fail(ErrorCode::InvalidInput, "negative coefficient in an effective divisor");
    if (!ctx.curve.equation.eval(p).is_zero())
      fail(ErrorCode::InvalidInput, "point " + to_string(p) + " is not on " + ctx.curve.name);
    DivisorClass one;
    one.base = ctx.base;
    one.terms.push_back({rational_cluster(p, ctx.base), k});
    one.o_multiple = 0;
    r = r + one;
  }
  r.o_multiple = make_rat(r.effective_degree(), ctx.degree());
  return r;
}

DivisorClass class_of_cut(const PicardContext& ctx, const IntersectionDivisor& cut, long n) {
  if (n < 1) fail(ErrorCode::InvalidInput, "n must be positive");
  const long dj = cut.cut_by.degree();
  DivisorClass r = zero_class(ctx);
  for (auto& p : cut.points) {
    if (!same_field(p.cluster.base, ctx.base)) fail(ErrorCode::FieldMismatch, "cut computed over another field");
    if (p.multiplicity % n != 0)
      fail(ErrorCode::NotDivisible, "n = " + std::to_string(n) + " does not divide the local multiplicity " +
                                        std::to_string(p.multiplicity) + " at " + describe(p.cluster));
    r.terms.push_back({p.cluster, p.multiplicity / n});
  }
  r.o_multiple = make_rat(dj, n);
  return r;
}

DivisorClass class_of_decomposition(const PicardContext& ctx, const PlaneCurve& part, long n) {
  return class_of_cut(ctx, intersect(over_base(ctx, ctx.curve), over_base(ctx, part), ctx.intersect), n);
}

std::string describe(const DivisorClass& c) {
  std::ostringstream os;
  bool first = true;
  for (auto& t : c.terms) {
    os << (first ? "" : " + ") << t.coeff << "*" << describe(t.cluster);
    first = false;
  }
  if (first) os << "0";
  os << " - " << to_string(c.o_multiple) << "*o";
  return os.str();
}

std::vector<HomogeneousPoly> curves_through(const PicardContext& ctx, const std::vector<DivisorTerm>& conditions,
                                            int m, Exec exec) {
  if (m < 0) fail(ErrorCode::InvalidInput, "negative degree");
  const int e = field_degree(ctx.base);
  const std::vector<Exponent> mons = monomials_of_degree(m);
  const int n_mon = static_cast<int>(mons.size());
  const int cols = n_mon * e;

  std::vector<std::vector<Rat>> rows;
  for (auto& cond : conditions) {
    if (cond.coeff <= 0) continue;
    const ProjPointCluster& cl = cond.cluster;
    const int len = static_cast<int>(cond.coeff);
    const int fdeg = field_degree(cl.field);
    const LocalParam lp = local_param(ctx.curve, cl, len - 1);
    std::array<std::vector<Series>, 3> pw;
    for (int v = 0; v < 3; ++v) {
      Series one(len, AlgNum(0));
      one[0] = AlgNum(1);
      pw[v].push_back(one);
      for (int k = 1; k <= m; ++k) pw[v].push_back(series_mul(pw[v].back(), lp.coords[v], len));
    }
    std::vector<AlgNum> gen_pows(e);
    AlgNum g = ctx.base ? cl.embed(AlgNum::generator(ctx.base)) : AlgNum(1);
    AlgNum acc = cl.embed(AlgNum(1));
    for (int l = 0; l < e; ++l) {
      gen_pows[l] = acc;
      acc = acc * g;
    }
    // column block per monomial: len * fdeg rows, e columns
    std::vector<std::vector<Rat>> block(static_cast<std::size_t>(cols));
    auto fill = [&](int i) {
      const Exponent& ex = mons[i];
      Series s = series_mul(series_mul(pw[0][ex[0]], pw[1][ex[1]], len), pw[2][ex[2]], len);
      for (int l = 0; l < e; ++l) {
        std::vector<Rat>& col = block[static_cast<std::size_t>(i) * e + l];
        col.reserve(static_cast<std::size_t>(len) * fdeg);
        for (int k = 0; k < len; ++k) {
          AlgNum v = s[k] * gen_pows[l];
          for (int r = 0; r < fdeg; ++r) col.push_back(v.coord(r));
        }
      }
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (int i = 0; i < n_mon; ++i) fill(i);
    } else {
      for (int i = 0; i < n_mon; ++i) fill(i);
    }
    const int nr = len * fdeg;
    for (int r = 0; r < nr; ++r) {
      std::vector<Rat> row(cols);
      for (int c = 0; c < cols; ++c) row[c] = block[c][r];
      rows.push_back(std::move(row));
    }
  }

  std::vector<std::vector<Rat>> ker;
  if (rows.empty()) {
    for (int c = 0; c < cols; ++c) {
      std::vector<Rat> v(cols, Rat(0));
      v[c] = 1;
      ker.push_back(std::move(v));
    }
  } else {
    ker = kernel_q(matrix_from_rows(rows));
  }
  std::vector<HomogeneousPoly> out;
  for (auto& v : ker) {
    HomogeneousPoly::Terms t;
    for (int i = 0; i < n_mon; ++i) {
      std::vector<Rat> c(v.begin() + static_cast<long>(i) * e, v.begin() + static_cast<long>(i + 1) * e);
      AlgNum a = ctx.base ? AlgNum(ctx.base, c) : AlgNum(c[0]);
      if (!a.is_zero()) t.emplace(mons[i], a);
    }
    out.emplace_back(std::move(t), ctx.base);
  }
  return out;
}

PrincipalResult is_principal(const PicardContext& ctx, const DivisorClass& c, Exec exec) {
  if (c.o_multiple.get_den() != 1)
    fail(ErrorCode::NotTestable, "o-multiple " + to_string(c.o_multiple) + " is not an integer");
  const long m = c.o_multiple.get_num().get_si();
  const long d0 = ctx.degree();
  if (m < 0 || c.effective_degree() != m * d0)
    fail(ErrorCode::InvalidInput, "class " + describe(c) + " does not have degree zero");
  PrincipalResult r;
  const auto basis = curves_through(ctx, c.terms, static_cast<int>(m), exec);
  r.solution_dim = static_cast<int>(basis.size());
  r.trivial_dim = static_cast<int>(binom2(m - d0) * field_degree(ctx.base));
  if (r.solution_dim < r.trivial_dim) fail(ErrorCode::Internal, "linear system smaller than the multiples of D");
  r.principal = r.solution_dim > r.trivial_dim;
  if (!r.principal) return r;
  for (auto& h : basis) {
    if (h.divisible_by(ctx.curve.equation.in_field(ctx.base))) continue;
    for (auto& t : c.terms) {
      OrderAlong o = order_along(ctx.curve, t.cluster, h, static_cast<int>(t.coeff) + 1);
      if (o.kind != OrderAlong::Exact || o.value != t.coeff)
        fail(ErrorCode::Internal, "principal witness fails the order check at " + describe(t.cluster));
    }
    r.witness = h.normalized();
    return r;
  }
  fail(ErrorCode::Internal, "no witness outside the multiples of D");
}

std::vector<long> divisors_of(long n) {
  std::vector<long> out;
  for (long v = 1; v <= n; ++v)
    if (n % v == 0) out.push_back(v);
  return out;
}

namespace {

TorsionResult search(const PicardContext& ctx, const DivisorClass& c, const std::vector<long>& candidates, Exec exec) {
  TorsionResult r;
  for (long v : candidates) {
    r.tested.push_back(v);
    DivisorClass vc = scaled(c, v);
    if (vc.o_multiple.get_den() != 1) continue;
    PrincipalResult p = is_principal(ctx, vc, exec);
    if (p.principal) {
      r.order = v;
      r.witness = p.witness;
      return r;
    }
  }
  return r;
}

}  // namespace

TorsionResult torsion_order(const PicardContext& ctx, const DivisorClass& c, long n, Exec exec) {
  if (n < 1) fail(ErrorCode::InvalidInput, "n must be positive");
  return search(ctx, c, divisors_of(n), exec);
}

TorsionResult torsion_order_capped(const PicardContext& ctx, const DivisorClass& c, long cap, Exec exec) {
  std::vector<long> all;
  for (long v = 1; v <= cap; ++v) all.push_back(v);
  return search(ctx, c, all, exec);
}

}  // namespace zariski
