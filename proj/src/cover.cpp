#include "zariski/cover.hpp"

#include <numeric>
#include <sstream>

#include "zariski/errors.hpp"

namespace zariski {

namespace {

IntersectionDivisor merged_cut(const PicardContext& ctx, const std::vector<PlaneCurve>& group,
                               const HomogeneousPoly& part) {
  IntersectionDivisor out;
  out.on_curve = ctx.curve.equation;
  out.cut_by = part;
  const PlaneCurve d = over_base(ctx, ctx.curve);
  for (auto& c : group) {
    IntersectionDivisor cut = intersect(d, over_base(ctx, c), ctx.intersect);
    out.attempts = std::max(out.attempts, cut.attempts);
    for (auto& p : cut.points) {
      bool merged = false;
      for (auto& q : out.points)
        if (same_orbit(q.cluster, p.cluster)) {
          q.multiplicity += p.multiplicity;
          merged = true;
          break;
        }
      if (!merged) out.points.push_back(p);
    }
  }
  return out;
}

long power_guarded(long n, int k, long guard) {
  long total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > guard / std::max(n, 1L)) return guard + 1;
    total *= n;
  }
  return total;
}

IntVec digits(long index, long n, int k) {
  IntVec a(k);
  for (int j = k - 1; j >= 0; --j) {
    a[j] = index % n;
    index /= n;
  }
  return a;
}

}  // namespace

Decomposition build_decomposition(const PlaneCurve& d, const std::vector<std::vector<PlaneCurve>>& groups,
                                  const DecompositionOptions& opt, std::string name) {
  if (groups.empty()) fail(ErrorCode::InvalidInput, "decomposition without parts");
  Decomposition dec;
  dec.name = std::move(name);
  dec.ctx = make_picard_context(d, opt.base, opt.seed, opt.trials);
  dec.groups = groups;
  std::vector<const PlaneCurve*> all{&dec.ctx.curve};
  for (auto& g : groups) {
    if (g.empty()) fail(ErrorCode::InvalidInput, "empty part in a decomposition");
    for (auto& c : g) all.push_back(&c);
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (share_component(all[i]->equation, all[j]->equation, opt.seed))
        fail(ErrorCode::CommonComponent,
             "curves " + all[i]->name + " and " + all[j]->name + " share a component");
  long n = 0;
  for (auto& g : groups) {
    HomogeneousPoly part = HomogeneousPoly::constant(AlgNum(1));
    for (auto& c : g) part = part * c.equation;
    dec.parts.push_back(part);
    dec.degrees.push_back(part.degree());
    dec.cuts.push_back(merged_cut(dec.ctx, g, part));
    n = std::gcd(n, static_cast<long>(part.degree()));
    for (auto& p : dec.cuts.back().points) n = std::gcd(n, static_cast<long>(p.multiplicity));
  }
  dec.n = n;
  for (auto& cut : dec.cuts) dec.classes.push_back(class_of_cut(dec.ctx, cut, n));
  return dec;
}

IntVec unit_normal_form(const IntVec& a, long n) {
  IntVec best;
  for (long l = 1; l < n; ++l) {
    if (std::gcd(l, n) != 1) continue;
    IntVec b(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) b[j] = ((a[j] * l) % n + n) % n;
    if (best.empty() || b < best) best = b;
  }
  if (best.empty()) {
    best = a;
    for (auto& v : best) v = ((v % n) + n) % n;
  }
  return best;
}

bool in_theta(long n, const IntVec& degrees, const IntVec& a) {
  if (a.size() != degrees.size()) return false;
  long s = 0, g = n;
  for (std::size_t j = 0; j < a.size(); ++j) {
    s = (s + (a[j] % n) * (degrees[j] % n)) % n;
    g = std::gcd(g, std::labs(a[j]));
  }
  return s == 0 && g == 1;
}

ThetaSet theta(long n, const IntVec& degrees) {
  if (n < 2) fail(ErrorCode::InvalidInput, "the index set needs n >= 2");
  const int k = static_cast<int>(degrees.size());
  const long total = power_guarded(n, k, 1000000);
  if (total > 1000000) fail(ErrorCode::SweepGuard, "index set too large to enumerate");
  ThetaSet t;
  t.n = n;
  t.degrees = degrees;
  for (long i = 0; i < total; ++i) {
    IntVec a = digits(i, n, k);
    if (in_theta(n, degrees, a) && unit_normal_form(a, n) == a) t.reps.push_back(a);
  }
  return t;
}

DivisorClass combined_class(const Decomposition& dec, const IntVec& a) {
  if (static_cast<int>(a.size()) != dec.k()) fail(ErrorCode::InvalidInput, "coefficient vector has the wrong length");
  DivisorClass c = zero_class(dec.ctx);
  for (int j = 0; j < dec.k(); ++j) {
    const long r = ((a[j] % dec.n) + dec.n) % dec.n;
    if (r > 0) c = c + scaled(dec.classes[j], r);
  }
  return c;
}

Splitting splitting_number(const Decomposition& dec, const IntVec& a, Exec exec) {
  if (static_cast<int>(a.size()) != dec.k()) fail(ErrorCode::InvalidInput, "coefficient vector has the wrong length");
  Splitting s;
  s.a = a;
  if (dec.n == 1) {
    s.nu = 1;
    s.s = 1;
    return s;
  }
  if (!in_theta(dec.n, dec.degrees, a)) fail(ErrorCode::NotInTheta, to_string(a) + " is not in the index set");
  TorsionResult r = torsion_order(dec.ctx, combined_class(dec, a), dec.n, exec);
  if (r.order == 0) fail(ErrorCode::Internal, "n times the class of " + to_string(a) + " is not principal");
  s.nu = r.order;
  s.s = dec.n / r.order;
  return s;
}

std::vector<Splitting> phi_map(const Decomposition& dec, Exec exec) {
  std::vector<Splitting> out;
  if (dec.n < 2) return out;
  for (auto& a : theta(dec.n, dec.degrees).reps) out.push_back(splitting_number(dec, a, exec));
  return out;
}

RelationLattice tau_kernel(const Decomposition& dec, Exec exec, long max_sweep) {
  RelationLattice lat;
  lat.n = dec.n;
  lat.k = dec.k();
  const long total = power_guarded(dec.n, lat.k, max_sweep);
  if (total > max_sweep)
    fail(ErrorCode::SweepGuard, "n^k exceeds the sweep guard of " + std::to_string(max_sweep));
  std::vector<long> hits = sweep_indices(
      total,
      [&](long i) {
        DivisorClass c = combined_class(dec, digits(i, dec.n, lat.k));
        return is_principal(dec.ctx, c, Exec::Serial).principal;
      },
      exec);
  for (long i : hits) {
    lat.principal.push_back(digits(i, dec.n, lat.k));
    std::vector<Int> row;
    for (long v : lat.principal.back()) row.push_back(Int(v));
    lat.generators.push_back(row);
  }
  for (int j = 0; j < lat.k; ++j) {
    std::vector<Int> row(lat.k, Int(0));
    row[j] = dec.n;
    lat.generators.push_back(row);
  }
  lat.hnf = hermite_normal_form(lat.generators);
  lat.invariant_factors = smith_invariants(lat.generators);
  return lat;
}

IMatrix permuted_hnf(const RelationLattice& lat, const std::vector<int>& rho) {
  IMatrix rows;
  for (auto& r : lat.generators) {
    std::vector<Int> p(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) p[rho[j]] = r[j];
    rows.push_back(p);
  }
  return hermite_normal_form(rows);
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace zariski
