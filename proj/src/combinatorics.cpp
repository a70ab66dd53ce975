#include "zariski/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "zariski/errors.hpp"

namespace zariski {

namespace {

using PairKey = std::pair<int, int>;

PairKey ordered(int a, int b) { return a < b ? PairKey{a, b} : PairKey{b, a}; }

// Incidence data of a point after renaming components by sigma.
std::vector<std::array<int, 3>> signature(const CombPoint& p, const std::vector<int>& sigma) {
  std::vector<std::array<int, 3>> s;
  for (auto& [key, m] : p.pairwise_mult) {
    PairKey k = ordered(sigma[key.first], sigma[key.second]);
    s.push_back({k.first, k.second, m});
  }
  std::sort(s.begin(), s.end());
  return s;
}

// Multiset of (multiplicity, number of components through the point) for a pair.
std::vector<std::pair<int, int>> pair_profile(const CombType& t, int i, int j) {
  std::vector<std::pair<int, int>> out;
  PairKey k = ordered(i, j);
  for (auto& p : t.points) {
    auto it = p.pairwise_mult.find(k);
    if (it == p.pairwise_mult.end()) continue;
    for (int c = 0; c < p.copies; ++c) out.push_back({it->second, static_cast<int>(p.incident.size())});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

Int factorial(long n) {
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

int CombType::point_count() const {
  int s = 0;
  for (auto& p : points) s += p.copies;
  return s;
}

long CombType::pair_total(int i, int j) const {
  long s = 0;
  PairKey k = ordered(i, j);
  for (auto& p : points) {
    auto it = p.pairwise_mult.find(k);
    if (it != p.pairwise_mult.end()) s += static_cast<long>(it->second) * p.copies;
  }
  return s;
}

CombType comb_type(const std::vector<PlaneCurve>& components, const FieldPtr& base, std::uint64_t seed, int trials) {
  FieldPtr k = base;
  for (auto& c : components) k = join_fields(k, c.field());
  CombType t;
  std::vector<PlaneCurve> lifted;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const PlaneCurve& c = components[i];
    SmoothVerdict v = check_smooth(c, trials, seed);
    if (v.kind != Smoothness::Smooth)
      fail(ErrorCode::OutOfScope, "component " + (c.name.empty() ? std::to_string(i) : c.name) +
                                      (v.kind == Smoothness::Singular ? " is singular at " + to_string(*v.witness)
                                                                      : std::string(" is not certified smooth")) +
                                      "; only arrangements of smooth components are supported");
    t.components.push_back({static_cast<int>(i), c.degree(), c.name});
    PlaneCurve l = c;
    if (k) l.equation = c.equation.in_field(k);
    lifted.push_back(l);
  }
  IntersectOptions io;
  io.seed = seed;
  std::vector<ProjPointCluster> orbits;
  for (std::size_t i = 0; i < lifted.size(); ++i)
    for (std::size_t j = i + 1; j < lifted.size(); ++j) {
      if (share_component(lifted[i].equation, lifted[j].equation, seed))
        fail(ErrorCode::CommonComponent, "components " + lifted[i].name + " and " + lifted[j].name + " share a factor");
      auto cut = intersect(lifted[i], lifted[j], io);
      for (auto& q : cut.points) {
        std::size_t o = 0;
        while (o < orbits.size() && !same_orbit(orbits[o], q.cluster)) ++o;
        if (o == orbits.size()) {
          orbits.push_back(q.cluster);
          CombPoint p;
          p.copies = q.cluster.size();
          p.where = describe(q.cluster);
          t.points.push_back(p);
        }
        CombPoint& p = t.points[o];
        p.pairwise_mult[{static_cast<int>(i), static_cast<int>(j)}] = q.multiplicity;
        for (int c : {static_cast<int>(i), static_cast<int>(j)})
          if (std::find(p.incident.begin(), p.incident.end(), c) == p.incident.end()) p.incident.push_back(c);
      }
    }
  for (auto& p : t.points) std::sort(p.incident.begin(), p.incident.end());
  for (std::size_t i = 0; i < lifted.size(); ++i)
    for (std::size_t j = i + 1; j < lifted.size(); ++j)
      if (t.pair_total(static_cast<int>(i), static_cast<int>(j)) != lifted[i].degree() * lifted[j].degree())
        fail(ErrorCode::Internal, "intersection total of " + lifted[i].name + " and " + lifted[j].name +
                                      " violates Bezout");
  return t;
}

CombType comb_type(const Decomposition& dec) {
  std::vector<PlaneCurve> comps{dec.ctx.curve};
  for (auto& g : dec.groups)
    for (auto& c : g) comps.push_back(c);
  return comb_type(comps, dec.ctx.base, dec.ctx.intersect.seed);
}

std::vector<EquivMap> equiv_maps(const CombType& t1, const CombType& t2) {
  std::vector<EquivMap> out;
  const int n = static_cast<int>(t1.components.size());
  if (n != static_cast<int>(t2.components.size()) || t1.point_count() != t2.point_count()) return out;

  std::vector<int> offset1, offset2;
  for (int s = 0; auto& p : t1.points) offset1.push_back(std::exchange(s, s + p.copies));
  for (int s = 0; auto& p : t2.points) offset2.push_back(std::exchange(s, s + p.copies));
  const std::vector<int> id = identity(n);
  using Sig = std::vector<std::array<int, 3>>;
  std::map<Sig, std::vector<int>> target;  // signature -> expanded points of t2
  for (std::size_t o = 0; o < t2.points.size(); ++o)
    for (int c = 0; c < t2.points[o].copies; ++c) target[signature(t2.points[o], id)].push_back(offset2[o] + c);

  std::vector<int> sigma(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(int)> extend = [&](int i) {
    if (i == n) {
      std::map<Sig, std::vector<int>> source;
      for (std::size_t o = 0; o < t1.points.size(); ++o)
        for (int c = 0; c < t1.points[o].copies; ++c)
          source[signature(t1.points[o], sigma)].push_back(offset1[o] + c);
      if (source.size() != target.size()) return;
      EquivMap m;
      m.component_bijection = sigma;
      m.point_bijection.assign(t1.point_count(), -1);
      m.point_choices = 1;
      for (auto& [sig, pts] : source) {
        auto it = target.find(sig);
        if (it == target.end() || it->second.size() != pts.size()) return;
        for (std::size_t q = 0; q < pts.size(); ++q) m.point_bijection[pts[q]] = it->second[q];
        m.point_choices *= factorial(static_cast<long>(pts.size()));
      }
      out.push_back(std::move(m));
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used[j] || t1.components[i].degree != t2.components[j].degree) continue;
      bool ok = true;
      for (int a = 0; a < i && ok; ++a) ok = pair_profile(t1, a, i) == pair_profile(t2, sigma[a], j);
      if (!ok) continue;
      sigma[i] = j;
      used[j] = true;
      extend(i + 1);
      used[j] = false;
      sigma[i] = -1;
    }
  };
  extend(0);
  return out;
}

AdmissibleSet admissible(const Decomposition& dec1, const Decomposition& dec2, const std::vector<EquivMap>& maps) {
  AdmissibleSet r;
  r.total_maps = maps.size();
  const int k = dec1.k();
  // component ids per part, in the order used by comb_type
  auto part_sets = [](const Decomposition& dec) {
    std::vector<std::set<int>> sets;
    int id = 1;
    for (auto& g : dec.groups) {
      std::set<int> s;
      for (std::size_t c = 0; c < g.size(); ++c) s.insert(id++);
      sets.push_back(s);
    }
    return sets;
  };
  const auto parts1 = part_sets(dec1), parts2 = part_sets(dec2);
  std::set<std::vector<int>> rhos;
  for (auto& m : maps) {
    if (k != dec2.k() || m.component_bijection[0] != 0) continue;
    std::vector<int> rho(k, -1);
    bool ok = true;
    for (int j = 0; j < k && ok; ++j) {
      std::set<int> image;
      for (int c : parts1[j]) image.insert(m.component_bijection[c]);
      for (int l = 0; l < k; ++l)
        if (parts2[l] == image) rho[j] = l;
      ok = rho[j] >= 0;
    }
    if (!ok) continue;
    ++r.admissible_maps;
    rhos.insert(rho);
  }
  r.permutations.assign(rhos.begin(), rhos.end());
  r.all_equiv_maps_admissible = !maps.empty() && r.admissible_maps == maps.size();
  return r;
}

const char* to_string(Verdict v) { return v == Verdict::ZariskiPair ? "ZariskiPair" : "Inconclusive"; }

const char* to_string(Rule r) {
  switch (r) {
    case Rule::None: return "none";
    case Rule::Theorem: return "relation kernels differ for every admissible permutation";
    case Rule::CorOrder: return "single part with different torsion orders";
    case Rule::CorOrderTuple: return "torsion order tuples differ for every admissible permutation";
    case Rule::CorGroup: return "non-isomorphic torsion groups";
  }
  return "?";
}

CertificationReport certify(const Decomposition& dec1, const Decomposition& dec2, const CertifyOptions& opt) {
  if (dec1.n != dec2.n)
    fail(ErrorCode::NMismatch, "n = " + std::to_string(dec1.n) + " for " + dec1.name + " but n = " +
                                   std::to_string(dec2.n) + " for " + dec2.name);
  CertificationReport r;
  r.n = dec1.n;
  auto inconclusive = [&](std::string why) {
    r.verdict = Verdict::Inconclusive;
    r.reason = std::move(why);
    return r;
  };
  auto success = [&](Rule rule) {
    r.verdict = Verdict::ZariskiPair;
    r.rule = rule;
    return r;
  };
  if (dec1.k() != dec2.k() || dec1.degrees != dec2.degrees ||
      dec1.ctx.curve.degree() != dec2.ctx.curve.degree())
    return inconclusive("the decompositions have different degrees or numbers of parts");

  const auto maps = equiv_maps(comb_type(dec1), comb_type(dec2));
  r.equivalence_maps = maps.size();
  r.same_combinatorics = !maps.empty();
  if (maps.empty()) return inconclusive("the curves have different combinatorics");
  r.admissibility = admissible(dec1, dec2, maps);
  if (!r.admissibility.all_equiv_maps_admissible)
    return inconclusive("criterion hypothesis fails: an equivalence map is not admissible");

  for (auto& c : dec1.classes) r.orders1.push_back(torsion_order(dec1.ctx, c, r.n, opt.exec).order);
  for (auto& c : dec2.classes) r.orders2.push_back(torsion_order(dec2.ctx, c, r.n, opt.exec).order);
  const auto& rhos = r.admissibility.permutations;
  auto orders_match = [&](const std::vector<int>& rho) {
    for (int j = 0; j < dec1.k(); ++j)
      if (r.orders1[j] != r.orders2[rho[j]]) return false;
    return true;
  };
  if (std::none_of(rhos.begin(), rhos.end(), orders_match))
    return success(dec1.k() == 1 ? Rule::CorOrder : Rule::CorOrderTuple);

  RelationLattice l1 = tau_kernel(dec1, opt.exec, opt.max_sweep);
  RelationLattice l2 = tau_kernel(dec2, opt.exec, opt.max_sweep);
  r.kernels_computed = true;
  r.invariant_factors1 = l1.invariant_factors;
  r.invariant_factors2 = l2.invariant_factors;
  r.hnf1 = l1.hnf;
  r.hnf2 = l2.hnf;
  if (l1.invariant_factors != l2.invariant_factors) return success(Rule::CorGroup);

  bool any_equal = false;
  for (auto& rho : rhos) {
    KernelComparison kc{rho, permuted_hnf(l1, rho) == l2.hnf};
    any_equal = any_equal || kc.equal;
    r.kernels.push_back(kc);
  }
  if (!any_equal) return success(Rule::Theorem);
  return inconclusive("relation kernels agree under an admissible permutation; the criterion is exhausted, "
                      "which does not show the curves are homeomorphic");
}

}  // namespace zariski
