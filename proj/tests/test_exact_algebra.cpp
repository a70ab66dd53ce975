#include <doctest.h>

#include "zariski/dense_poly.hpp"
#include "zariski/homogeneous_poly.hpp"
#include "zariski/integer_lattice.hpp"
#include "zariski/linear_algebra.hpp"
#include "zariski/number_field.hpp"
#include "zariski/qfactor.hpp"

using namespace zariski;

namespace {

QPoly qp(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long a : c) v.push_back(Rat(a));
  return QPoly(v);
}

// Independent oracle: determinant of the Sylvester matrix by naive Gaussian elimination.
Rat sylvester_resultant(const QPoly& p, const QPoly& q) {
  const int m = p.degree(), n = q.degree();
  const int N = m + n;
  std::vector<std::vector<Rat>> a(N, std::vector<Rat>(N, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) a[i][i + j] = p.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) a[n + i][i + j] = q.coeff(n - j);
  Rat det = 1;
  for (int c = 0; c < N; ++c) {
    int piv = -1;
    for (int r = c; r < N; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < N; ++r) {
      Rat f = a[r][c] / a[c][c];
      for (int k = c; k < N; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

QPoly expand(const QFactorization& f) {
  QPoly r = QPoly::constant(f.unit);
  for (auto& [g, e] : f.factors) r = r * g.pow(e);
  return r;
}

QPoly random_poly(Rng& rng, int deg, long bound) {
  std::vector<Rat> c(deg + 1);
  for (auto& v : c) v = Rat(rng.uniform(-bound, bound));
  if (c.back() == 0) c.back() = 1;
  return QPoly(c);
}

}  // namespace

TEST_CASE("resultant examples") {
  CHECK(resultant(qp({-2, 0, 1}), qp({-1, 1})) == Rat(-1));
  QPoly p = qp({3, 1, 4, 1});
  CHECK(resultant(p, p) == Rat(0));
  CHECK(resultant(qp({1, 0, 1}), qp({-2, 0, 1})) == Rat(9));
  CHECK(sylvester_resultant(qp({1, 0, 1}), qp({-2, 0, 1})) == Rat(9));
  CHECK_THROWS_AS(resultant(QPoly(), QPoly()), Error);
}

TEST_CASE("resultant agrees with sylvester oracle and gcd test") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    QPoly a = random_poly(rng, 1 + t % 5, 4);
    QPoly b = random_poly(rng, 1 + (t / 5) % 4, 4);
    if (t % 3 == 0) {
      QPoly common = random_poly(rng, 1, 3);
      a = a * common;
      b = b * common;
    }
    Rat r = resultant(a, b);
    CHECK(r == sylvester_resultant(a, b));
    CHECK((r == 0) == (gcd(a, b).degree() > 0));
  }
}

TEST_CASE("gcd over Q matches the generic euclidean gcd") {
  Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    QPoly a = random_poly(rng, 3, 9), b = random_poly(rng, 2, 9), c = random_poly(rng, 2, 9);
    QPoly g1 = gcd(a * c, b * c);
    QPoly g2 = gcd<Rat>(a * c, b * c);
    CHECK(g1 == g2);
    CHECK((a * c) % g1 == QPoly());
  }
}

TEST_CASE("squarefree decomposition") {
  QPoly f = qp({-1, 1}).pow(2) * qp({2, 1});
  auto d = squarefree_decomposition(f);
  REQUIRE(d.size() == 2);
  CHECK(d[0].first == qp({2, 1}));
  CHECK(d[0].second == 1);
  CHECK(d[1].first == qp({-1, 1}));
  CHECK(d[1].second == 2);
  CHECK(squarefree_part(f) == qp({-1, 1}) * qp({2, 1}));
  QPoly g = qp({1, 0, 0, -2, 0, 0, 1});
  CHECK(qp({-1, 0, 0, 1}).pow(2) == g);  // expansion oracle
  CHECK(squarefree_part(g) == qp({-1, 0, 0, 1}));
  auto dg = squarefree_decomposition(g);
  REQUIRE(dg.size() == 1);
  CHECK(dg[0].second == 2);
  QPoly h = qp({1, 2, 3});
  CHECK(squarefree_part(h) == h.monic());
}

TEST_CASE("factorization examples") {
  auto f = factor_q(qp({-1, 0, 0, 1}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == qp({-1, 1}));
  CHECK(f.factors[1].first == qp({1, 1, 1}));
  CHECK(factor_q(qp({1, 0, 1})).factors.size() == 1);
  QPoly p = qp({6, 0, -5, 0, 1});
  CHECK(qp({-2, 0, 1}) * qp({-3, 0, 1}) == p);
  auto g = factor_q(p);
  REQUIRE(g.factors.size() == 2);
  CHECK(g.factors[0].first == qp({-2, 0, 1}));
  CHECK(g.factors[1].first == qp({-3, 0, 1}));
  CHECK(expand(g) == p);
  CHECK_THROWS_AS(factor_q(QPoly()), Error);
}

TEST_CASE("factorization of a polynomial that splits modulo every prime") {
  // x^4 - 10x^2 + 1 is irreducible over Q but has only linear/quadratic factors mod p
  QPoly sd = qp({1, 0, -10, 0, 1});
  CHECK(is_irreducible_q(sd));
  QPoly prod = sd * qp({1, 0, -10, 0, 1}).compose(qp({1, 1})) * qp({-7, 3});
  auto f = factor_q(prod);
  CHECK(expand(f) == prod);
  CHECK(f.factors.size() == 3);
}

TEST_CASE("factorization re-expands on random products") {
  Rng rng(99);
  for (int t = 0; t < 40; ++t) {
    QPoly p = QPoly::constant(make_rat(rng.uniform(1, 5), rng.uniform(1, 4)));
    int parts = 1 + t % 4;
    for (int i = 0; i < parts; ++i) {
      QPoly q = random_poly(rng, 1 + rng.uniform(0, 3), 12);
      p = p * q.pow(1 + rng.uniform(0, 1));
    }
    auto f = factor_q(p);
    CHECK(expand(f) == p);
    for (auto& [g, e] : f.factors) {
      CHECK(g.leading() == 1);
      if (g.degree() >= 2) CHECK(rational_roots(g).empty());
    }
  }
}

TEST_CASE("number field arithmetic") {
  FieldPtr K = NumberField::make(qp({1, 1, 1}), "w");
  AlgNum w = AlgNum::generator(K);
  CHECK(w * w * w == AlgNum(1));
  CHECK(w * w + w + AlgNum(1) == AlgNum(0));
  AlgNum a = w * AlgNum(3) + AlgNum(make_rat(1, 2));
  CHECK(a * a.inverse() == AlgNum(1));
  // norm of a + b w is a^2 - ab + b^2
  CHECK(a.norm() == make_rat(1, 4) - make_rat(3, 2) + Rat(9));
  CHECK(w.trace() == Rat(-1));
  CHECK(to_string(a) == "3*w + 1/2");
  CHECK_THROWS_AS(NumberField::make(qp({-1, 0, 1})), Error);
  FieldPtr L = NumberField::make(qp({-2, 0, 1}), "s");
  CHECK_THROWS_AS(w + AlgNum::generator(L), Error);
}

TEST_CASE("kernel examples") {
  QMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id(i, i) = 1;
  CHECK(kernel_q(id).empty());
  CHECK(kernel_q(QMatrix(2, 5)).size() == 5);
  auto k = kernel_q(matrix_from_rows<Rat>({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK_THROWS_AS(matrix_from_rows<Rat>({{Rat(1), Rat(1)}, {Rat(2)}}), Error);
}

TEST_CASE("kernel properties on random rank-deficient matrices") {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const int rows = 2 + t % 6, cols = 2 + (t * 7) % 8, rank = 1 + t % 3;
    std::vector<std::vector<Rat>> u(rows, std::vector<Rat>(rank)), v(rank, std::vector<Rat>(cols));
    for (auto& r : u)
      for (auto& x : r) x = make_rat(rng.uniform(-4, 4), rng.uniform(1, 3));
    for (auto& r : v)
      for (auto& x : r) x = Rat(rng.uniform(-4, 4));
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        for (int l = 0; l < rank; ++l) m(i, j) += u[i][l] * v[l][j];
    auto ker = kernel_q(m);
    CHECK(ker == kernel_q_gauss(m));
    CHECK(rank_q(m) + static_cast<int>(ker.size()) == cols);
    for (auto& vec : ker)
      for (int i = 0; i < rows; ++i) {
        Rat s = 0;
        for (int j = 0; j < cols; ++j) s += m(i, j) * vec[j];
        CHECK(s == 0);
      }
  }
}

TEST_CASE("kernel over a number field") {
  FieldPtr K = NumberField::make(qp({1, 1, 1}), "w");
  AlgNum w = AlgNum::generator(K);
  KMatrix m(2, 3);
  m(0, 0) = AlgNum(1);
  m(0, 1) = w;
  m(0, 2) = w * w;
  m(1, 0) = w;
  m(1, 1) = w * w;
  m(1, 2) = AlgNum(1);
  auto ker = kernel_k(m);
  CHECK(ker.size() == 2);
  for (auto& v : ker)
    for (int i = 0; i < 2; ++i) CHECK((m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2]).is_zero());
}

TEST_CASE("smith normal form") {
  auto I = [](std::vector<std::vector<long>> rows) {
    IMatrix m;
    for (auto& r : rows) {
      std::vector<Int> row;
      for (long v : r) row.push_back(Int(v));
      m.push_back(row);
    }
    return m;
  };
  CHECK(smith_normal_form(I({{2, 0}, {0, 2}, {1, 1}})).factors == std::vector<Int>{1, 2});
  CHECK(smith_normal_form(I({{2, 0}, {0, 2}})).factors == std::vector<Int>{2, 2});
  CHECK(smith_normal_form(I({{6}})).factors == std::vector<Int>{6});
  Rng rng(8);
  for (int t = 0; t < 40; ++t) {
    const int r = 1 + t % 4, c = 1 + (t / 4) % 4;
    IMatrix m(r, std::vector<Int>(c));
    for (auto& row : m)
      for (auto& x : row) x = rng.uniform(-9, 9);
    auto s = smith_normal_form(m);
    CHECK(multiply(multiply(s.left, m), s.right) == s.diag);
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
    for (std::size_t i = 0; i + 1 < s.factors.size(); ++i)
      if (s.factors[i + 1] != 0) CHECK(mpz_divisible_p(s.factors[i + 1].get_mpz_t(), s.factors[i].get_mpz_t()));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j) CHECK(s.diag[i][j] == 0);
  }
}

TEST_CASE("hermite normal form is canonical") {
  IMatrix a{{Int(4), Int(6)}, {Int(2), Int(2)}};
  IMatrix b{{Int(2), Int(2)}, {Int(6), Int(8)}};
  CHECK(hermite_normal_form(a) == hermite_normal_form(b));
  CHECK(hermite_normal_form(a) == IMatrix{{Int(2), Int(0)}, {Int(0), Int(2)}});
}

TEST_CASE("homogeneous polynomials") {
  auto x = HomogeneousPoly::variable(0), y = HomogeneousPoly::variable(1), z = HomogeneousPoly::variable(2);
  HomogeneousPoly f = x.pow(3) + y.pow(3) + z.pow(3);
  CHECK(f.degree() == 3);
  CHECK(f.to_string() == "x^3 + y^3 + z^3");
  CHECK((x * y - AlgNum(make_rat(3, 2)) * z * z).to_string() == "x*y - 3/2*z^2");
  CHECK_THROWS_AS(x + x * y, Error);
  Transform3 m = identity_transform();
  m[0][1] = AlgNum(2);
  m[2][0] = AlgNum(-1);
  HomogeneousPoly g = f.substitute(m);
  CHECK(g.substitute(inverse(m)) == f);
  HomogeneousPoly h = (x + y + z) * f;
  auto [q, r] = h.divide(f);
  CHECK(r.is_zero());
  CHECK(q == x + y + z);
  CHECK(!(h + x.pow(4)).divisible_by(f));
  CHECK(f.derivative(0) == AlgNum(3) * x * x);
  Point3 p{AlgNum(1), AlgNum(-1), AlgNum(0)};
  CHECK(f.eval(p).is_zero());
  CHECK(monomials_of_degree(2).size() == 6);
}
