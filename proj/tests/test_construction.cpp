#include <doctest.h>

#include <algorithm>

#include "support/helpers.hpp"
#include "zariski/construction.hpp"
#include "zariski/elliptic.hpp"

using namespace zariski;
using namespace zariski::testing;

TEST_CASE("transversal seeds") {
  TypedPair a = transversal_seed(1, 4, 11);
  CHECK(a.d0() == 1);
  CHECK(a.d1() == 4);
  CHECK(a.n == 1);
  CHECK(a.nu == 1);
  REQUIRE(a.provenance.size() == 1);
  CHECK(a.provenance[0].kind == StepKind::TransversalSeed);

  TypedPair b = transversal_seed(2, 2, 5);
  CHECK(b.n == 1);
  CHECK(b.nu == 1);
  CHECK(code_of([] { transversal_seed(3, 2, 1); }) == ErrorCode::InvalidInput);
}

TEST_CASE("power-of-k predictions") {
  CHECK(predicted_power_nu(1, 4, 1, 1) == 1);
  CHECK(predicted_power_nu(2, 2, 1, 1) == 1);
  CHECK(predicted_power_nu(2, 4, 2, 1) == 2);
  CHECK(predicted_power_nu(3, 4, 2, 1) == std::nullopt);
  CHECK(code_of([] { power_of_k(transversal_seed(1, 4, 11), 3, 1); }) == ErrorCode::InvalidInput);
}

TEST_CASE("power-of-k chain from a line and a quartic") {
  TypedPair seed = transversal_seed(1, 4, 11);
  TypedPair p = power_of_k(seed, 6, 21);
  CHECK(p.d0() == 4);
  CHECK(p.d1() == 6);
  CHECK(p.n == 6);
  CHECK(p.nu == 1);
  CHECK(p.d.equation == seed.c.equation);
  REQUIRE(p.provenance.size() == 2);
  CHECK(p.provenance[1].params.at("predicted_nu") == "1");

  TypedPair again = replay(p.provenance);
  CHECK(again.d.equation == p.d.equation);
  CHECK(again.c.equation == p.c.equation);
}

TEST_CASE("power-of-k chain from two conics") {
  TypedPair p1 = power_of_k(transversal_seed(2, 2, 5), 2, 7);
  CHECK(p1.d0() == 2);
  CHECK(p1.d1() == 4);
  CHECK(p1.n == 2);
  CHECK(p1.nu == 1);
  TypedPair p2 = power_of_k(p1, 3, 9);
  CHECK(p2.d0() == 4);
  CHECK(p2.d1() == 6);
  CHECK(p2.n == 6);
  CHECK(p2.nu == 2);
  // re-verification with another seed reproduces the type
  TypedPair v = verify_type(p2.d, p2.c, 99);
  CHECK(v.n == 6);
  CHECK(v.nu == 2);
}

TEST_CASE("type verification failures") {
  auto msg = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  std::string m = msg([] { verify_type(curve("y*z - x^2"), curve("y*z - x^2 + x*y")); });
  CHECK(m.find("multiplicities not constant") != std::string::npos);
  m = msg([] { verify_type(curve("x^3+y^3+z^3"), curve("x*y")); });
  CHECK(m.find("C is singular") != std::string::npos);
  m = msg([] { verify_type(curve("y^2*z - x^2*(x+z)"), curve("x")); });
  CHECK(m.find("D is not certified smooth") != std::string::npos);
}

TEST_CASE("tangent lines through a point of a cubic") {
  PlaneCurve e = curve("y^2*z - x^3 + 25*x*z^2");
  auto lines = tangent_lines_through(e, pt(-4, 6, 1));
  int total = 0;
  for (auto& o : lines) {
    total += o.count;
    CHECK(o.lines.degree() == o.count);
  }
  CHECK(total == 4);
  CHECK(code_of([&] { tangent_lines_through(e, pt(0, 1, 0)); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { tangent_lines_through(e, pt(1, 1, 1)); }) == ErrorCode::InvalidInput);

  // tangency points from (0:1:1) are not all rational here
  PlaneCurve f = curve("y^2*z - x^3 - x*z^2 - z^3");
  auto conj = tangent_lines_through(f, pt(0, 1, 1));
  total = 0;
  for (auto& o : conj) {
    total += o.count;
    CHECK(o.lines.degree() == o.count);
    CHECK(o.lines.is_rational());
    // the union vanishes at the base point and along the representative line
    CHECK(o.lines.eval(pt(0, 1, 1)).is_zero());
    CHECK(o.tangency.embed(o.lines).divisible_by(o.line));
  }
  CHECK(total == 4);
  CHECK(std::any_of(conj.begin(), conj.end(), [](const TangentLineOrbit& o) { return o.count > 1; }));
}

TEST_CASE("quartic and sextic of order three") {
  Pipeline4663 r = build_4663(3);
  CHECK(r.pair.d0() == 4);
  CHECK(r.pair.d1() == 6);
  CHECK(r.pair.n == 6);
  CHECK(r.pair.nu == 3);
  CHECK(r.quartic_witness.degree() == 4);
  CHECK(r.collinearity_det != 0);
  CHECK(r.excluded == std::vector<long>{1, 2});
  for (int m : r.cubic_quartic_mult) CHECK(m == 3);
  CHECK(r.tangent_conic_bound == 8);
  CHECK(r.tangent_conic_bound > r.tangent_conic_bezout);
  REQUIRE(r.pair.nu_witness.has_value());
  CHECK(r.pair.nu_witness->degree() == 3);
}
