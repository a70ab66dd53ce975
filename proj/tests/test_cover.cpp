#include <doctest.h>

#include <algorithm>

#include "support/helpers.hpp"
#include "zariski/construction.hpp"
#include "zariski/cover.hpp"

using namespace zariski;
using namespace zariski::testing;

namespace {

Int lattice_index(const std::vector<Int>& inv) {
  Int p = 1;
  for (auto& v : inv) p *= v;
  return p;
}

// Two inflectional triangles on the Fermat cubic over Q(w); the second has non-collinear flexes.
Decomposition two_triangles(bool swap) {
  FieldPtr w = eisenstein();
  std::vector<PlaneCurve> first{curve("x+y", w, "A1"), curve("y+z", w, "A2"), curve("x+z", w, "A3")};
  std::vector<PlaneCurve> second{curve("x+w^2*y", w, "B1"), curve("y+w^2*z", w, "B2"), curve("x+w^2*z", w, "B3")};
  DecompositionOptions opt;
  opt.base = w;
  std::vector<std::vector<PlaneCurve>> groups{first, second};
  if (swap) std::swap(groups[0], groups[1]);
  return build_decomposition(curve("x^3+y^3+z^3", nullptr, "E"), groups, opt);
}

}  // namespace

TEST_CASE("index set of coefficient vectors") {
  CHECK(theta(2, {2, 2}).reps == std::vector<IntVec>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(theta(2, {1, 1}).reps == std::vector<IntVec>{{1, 1}});
  CHECK(theta(6, {6}).reps == std::vector<IntVec>{{1}});
  // every nonzero residue of the single coordinate is a unit multiple of 1 for prime n
  CHECK(theta(3, {3}).reps == std::vector<IntVec>{{1}});
  CHECK(theta(4, {4}).reps == std::vector<IntVec>{{1}});
  CHECK(in_theta(4, {4}, {2}) == false);
  CHECK(unit_normal_form({2, 3}, 5) == IntVec{1, 4});
  CHECK(code_of([] { theta(1, {3}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("splitting numbers of the inflectional triangles") {
  PlaneCurve fermat = curve("x^3+y^3+z^3", nullptr, "E");
  FlexTriangleArrangement col = flex_triangle_arrangement(fermat, true);
  CHECK(col.dec.n == 3);
  CHECK(col.flex_determinant.is_zero());
  Splitting s = splitting_number(col.dec, {1});
  CHECK(s.nu == 1);
  CHECK(s.s == 3);
  TorsionResult t = torsion_order(col.dec.ctx, col.dec.classes[0], 3);
  REQUIRE(t.witness.has_value());
  CHECK(*t.witness == parse_poly("x+y+z"));

  CHECK(code_of([&] { flex_triangle_arrangement(fermat, false); }) == ErrorCode::UnavailableTriple);

  FlexTriangleArrangement gen = flex_triangle_arrangement(fermat, false, eisenstein());
  CHECK(!gen.flex_determinant.is_zero());
  CHECK(!gen.line_determinant.is_zero());
  Splitting g = splitting_number(gen.dec, {1});
  CHECK(g.nu == 3);
  CHECK(g.s == 1);
  for (auto* dec : {&col.dec, &gen.dec})
    for (auto& e : phi_map(*dec)) CHECK(e.s * e.nu == dec->n);
}

TEST_CASE("coefficient vectors outside the index set") {
  Decomposition dec = two_triangles(false);
  CHECK(dec.n == 3);
  CHECK(code_of([&] { splitting_number(dec, {0, 0}); }) == ErrorCode::NotInTheta);
  CHECK(code_of([&] { splitting_number(dec, {1}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("unit scaling and permutation of parts") {
  Decomposition dec = two_triangles(false);
  for (auto& a : theta(3, dec.degrees).reps) {
    IntVec twice{(2 * a[0]) % 3, (2 * a[1]) % 3};
    Splitting s1 = splitting_number(dec, a), s2 = splitting_number(dec, twice);
    CHECK(s1.nu == s2.nu);
    CHECK(s1.s * s1.nu == 3);
  }
  RelationLattice lat = tau_kernel(dec);
  RelationLattice swapped = tau_kernel(two_triangles(true));
  CHECK(permuted_hnf(lat, {1, 0}) == swapped.hnf);
  CHECK(permuted_hnf(lat, {0, 1}) == lat.hnf);
  // Z^k / ker has order n^k / #principal vectors
  CHECK(lattice_index(lat.invariant_factors) * static_cast<long>(lat.principal.size()) == 9);
  CHECK(lattice_index(lat.invariant_factors) == 3);
}

TEST_CASE("relation lattice of the four-tangent arrangements") {
  FourTangentArrangement cyc = four_tangent_arrangement(true);
  FourTangentArrangement full = four_tangent_arrangement(false);
  for (auto* a : {&cyc, &full}) {
    CHECK(a->dec.n == 2);
    CHECK(a->dec.k() == 2);
    for (auto& c : a->dec.classes) CHECK(torsion_order(a->dec.ctx, c, 2).order == 2);
  }
  RelationLattice lc = tau_kernel(cyc.dec), lf = tau_kernel(full.dec);
  CHECK(lc.invariant_factors == std::vector<Int>{1, 2});
  CHECK(lf.invariant_factors == std::vector<Int>{2, 2});
  for (auto* lat : {&lc, &lf}) {
    // n e_j lies in the kernel
    for (int j = 0; j < 2; ++j) {
      IMatrix rows = lat->hnf;
      std::vector<Int> v(2, Int(0));
      v[j] = 2;
      rows.push_back(v);
      CHECK(hermite_normal_form(rows) == lat->hnf);
    }
    CHECK(lattice_index(lat->invariant_factors) * static_cast<long>(lat->principal.size()) == 4);
  }
}

TEST_CASE("transversal parts give n = 1") {
  Decomposition dec = build_decomposition(curve("x^3+y^3+z^3"), {{curve("x + 2*y + 3*z")}});
  CHECK(dec.n == 1);
  CHECK(phi_map(dec).empty());
  Splitting s = splitting_number(dec, {1});
  CHECK(s.s == 1);
  CHECK(s.nu == 1);
}
