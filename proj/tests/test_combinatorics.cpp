#include <doctest.h>

#include <algorithm>

#include "support/helpers.hpp"
#include "zariski/combinatorics.hpp"
#include "zariski/construction.hpp"

using namespace zariski;
using namespace zariski::testing;

namespace {

int count_points(const CombType& t, std::size_t incident, int mult) {
  int c = 0;
  for (auto& p : t.points)
    if (p.incident.size() == incident &&
        std::all_of(p.pairwise_mult.begin(), p.pairwise_mult.end(), [&](auto& kv) { return kv.second == mult; }))
      c += p.copies;
  return c;
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Decomposition quartic_sextic(const TypedPair& p, const char* name) {
  return build_decomposition(p.d, {{p.c}}, {}, name);
}

}  // namespace

TEST_CASE("combinatorial types of small arrangements") {
  FlexTriangleArrangement col = flex_triangle_arrangement(curve("x^3+y^3+z^3", nullptr, "E"), true);
  CombType t = comb_type(col.dec);
  CHECK(t.components.size() == 4);
  CHECK(t.point_count() == 6);
  CHECK(count_points(t, 2, 3) == 3);
  CHECK(count_points(t, 2, 1) == 3);

  CombType conics = comb_type({curve("x^2+y^2-z^2"), curve("x^2 - 2*y^2 + 3*x*z - z^2")});
  CHECK(conics.point_count() == 4);
  CHECK(count_points(conics, 2, 1) == 4);
  CHECK(conics.pair_total(0, 1) == 4);

  TypedPair p = power_of_k(transversal_seed(1, 4, 11), 6, 21);
  CombType qs = comb_type({p.d, p.c});
  CHECK(qs.point_count() == 4);
  CHECK(count_points(qs, 2, 6) == 4);

  CHECK(code_of([] { comb_type({curve("x^3+y^3+z^3"), curve("x*y")}); }) == ErrorCode::OutOfScope);
}

TEST_CASE("equivalence maps") {
  FourTangentArrangement a = four_tangent_arrangement(false);
  CombType t = comb_type(a.dec);
  // E, four lines; two triple points, four tangencies, four line-line nodes
  CHECK(count_points(t, 3, 1) == 2);
  CHECK(count_points(t, 2, 2) == 4);
  CHECK(count_points(t, 2, 1) == 4);
  auto maps = equiv_maps(t, t);
  REQUIRE(!maps.empty());
  std::vector<std::vector<int>> sigmas;
  for (auto& m : maps) sigmas.push_back(m.component_bijection);
  CHECK(std::find(sigmas.begin(), sigmas.end(), std::vector<int>{0, 1, 2, 3, 4}) != sigmas.end());
  for (auto& m : maps) {
    CHECK(m.component_bijection[0] == 0);
    for (auto& m2 : maps)
      CHECK(std::find(sigmas.begin(), sigmas.end(), compose(m.component_bijection, m2.component_bijection)) !=
            sigmas.end());
  }
  // swapping the lines within a pair and swapping the pairs: 2 * 2 * 2
  CHECK(maps.size() == 8);

  CombType cubic_only = comb_type({curve("x^3+y^3+z^3"), curve("x + 2*y + 3*z")});
  CombType conic_only = comb_type({curve("x^2+y^2-z^2"), curve("x + 2*y + 3*z")});
  CHECK(equiv_maps(cubic_only, conic_only).empty());
}

TEST_CASE("admissibility") {
  // four tangents through one point, grouped two ways
  PlaneCurve e = curve("y^2*z - x^3 + 25*x*z^2", nullptr, "E");
  std::vector<PlaneCurve> l;
  const Point3 base = four_tangent_arrangement(true).bases[0];
  for (auto& o : tangent_lines_through(e, base)) l.push_back(make_curve(o.line, "L" + std::to_string(l.size())));
  REQUIRE(l.size() == 4);
  Decomposition d1 = build_decomposition(e, {{l[0], l[1]}, {l[2], l[3]}});
  Decomposition d2 = build_decomposition(e, {{l[0], l[2]}, {l[1], l[3]}});
  auto maps = equiv_maps(comb_type(d1), comb_type(d2));
  REQUIRE(!maps.empty());
  AdmissibleSet s = admissible(d1, d2, maps);
  CHECK(!s.all_equiv_maps_admissible);
  // the identity of the plane: L1, L2 of d1 are the first and third curves of d2
  bool identity_admissible = admissible(d1, d2, {EquivMap{{0, 1, 3, 2, 4}, {}, 1}}).admissible_maps == 1;
  CHECK(!identity_admissible);

  FourTangentArrangement two = four_tangent_arrangement(true);
  AdmissibleSet self = admissible(two.dec, two.dec, equiv_maps(comb_type(two.dec), comb_type(two.dec)));
  CHECK(self.all_equiv_maps_admissible);
  CHECK(self.permutations.size() == 2);

  TypedPair p = power_of_k(transversal_seed(1, 4, 11), 6, 21);
  Decomposition q = quartic_sextic(p, "q");
  AdmissibleSet one = admissible(q, q, equiv_maps(comb_type(q), comb_type(q)));
  CHECK(one.all_equiv_maps_admissible);
  CHECK(one.permutations == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("certification of the inflectional triangles") {
  PlaneCurve fermat = curve("x^3+y^3+z^3", nullptr, "E");
  FlexTriangleArrangement col = flex_triangle_arrangement(fermat, true);
  FlexTriangleArrangement gen = flex_triangle_arrangement(fermat, false, eisenstein());
  CertificationReport r = certify(col.dec, gen.dec);
  CHECK(r.verdict == Verdict::ZariskiPair);
  CHECK(r.rule == Rule::CorOrder);
  CHECK(r.orders1 == std::vector<long>{1});
  CHECK(r.orders2 == std::vector<long>{3});
  CHECK(certify(gen.dec, col.dec).verdict == Verdict::ZariskiPair);

  CertificationReport same = certify(col.dec, col.dec);
  CHECK(same.verdict == Verdict::Inconclusive);
  REQUIRE(same.kernels.size() == 1);
  CHECK(same.kernels[0].equal);

  FourTangentArrangement a = four_tangent_arrangement(true);
  CHECK(code_of([&] { certify(col.dec, a.dec); }) == ErrorCode::NMismatch);
}

TEST_CASE("certification of the four-tangent arrangements") {
  FourTangentArrangement cyc = four_tangent_arrangement(true);
  FourTangentArrangement full = four_tangent_arrangement(false);
  CertificationReport r = certify(cyc.dec, full.dec);
  CHECK(r.same_combinatorics);
  CHECK(r.admissibility.all_equiv_maps_admissible);
  CHECK(r.verdict == Verdict::ZariskiPair);
  CHECK(r.rule == Rule::CorGroup);
  CHECK(r.invariant_factors1 == std::vector<Int>{1, 2});
  CHECK(r.invariant_factors2 == std::vector<Int>{2, 2});
  CertificationReport back = certify(full.dec, cyc.dec);
  CHECK(back.verdict == r.verdict);
  CHECK(back.rule == r.rule);
}
