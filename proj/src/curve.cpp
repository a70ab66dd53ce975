#include "zariski/curve.hpp"

#include <sstream>

#include "zariski/errors.hpp"
#include "zariski/kernels.hpp"
#include "zariski/modp.hpp"
#include "zariski/qfactor.hpp"

namespace zariski {

namespace {

constexpr modp::u64 kCertPrimes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL};

std::optional<modp::Poly> reduce_uni(const UniPoly& f, modp::u64 p) {
  modp::Poly out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const AlgNum& c = f.coeffs()[i];
    if (!c.is_rational()) return std::nullopt;
    auto v = modp::reduce(c.rational_value(), p);
    if (!v) return std::nullopt;
    out[i] = *v;
  }
  modp::trim(out);
  return out;
}

// Discriminant-style certificate modulo p; true only when it proves smoothness.
bool modular_certificate(const BiPoly& g, const BiPoly& gz, int n, modp::u64 p) {
  std::vector<modp::Poly> gp, gzp;
  for (auto& c : g) {
    auto r = reduce_uni(c, p);
    if (!r) return false;
    gp.push_back(*r);
  }
  for (auto& c : gz) {
    auto r = reduce_uni(c, p);
    if (!r) return false;
    gzp.push_back(*r);
  }
  if (gp.back().empty() || gzp.back().empty()) return false;
  std::vector<modp::u64> xs(n + 1), ys(n + 1);
  for (int i = 0; i <= n; ++i) {
    xs[i] = i;
    modp::Poly a(gp.size()), b(gzp.size());
    for (std::size_t j = 0; j < gp.size(); ++j) a[j] = modp::eval(gp[j], i, p);
    for (std::size_t j = 0; j < gzp.size(); ++j) b[j] = modp::eval(gzp[j], i, p);
    modp::trim(a);
    modp::trim(b);
    if (modp::degree(a) != static_cast<int>(gp.size()) - 1) return false;
    if (modp::degree(b) != static_cast<int>(gzp.size()) - 1) return false;
    ys[i] = modp::resultant(a, b, p);
  }
  modp::Poly disc = modp::interpolate(xs, ys, p);
  return modp::degree(disc) == n && modp::is_squarefree(disc, p);
}

std::optional<Point3> singular_witness(const HomogeneousPoly& f, const HomogeneousPoly& g,
                                       const Transform3& a, const UniPoly& disc, FieldPtr& field_out) {
  std::vector<Rat> coeffs;
  for (auto& c : disc.coeffs()) coeffs.push_back(c.rational_value());
  QPoly b(coeffs);
  QPoly rep = gcd(b, b.derivative());
  if (rep.degree() < 1) return std::nullopt;
  const HomogeneousPoly gx = g.derivative(0), gy = g.derivative(1), gz = g.derivative(2);
  for (auto& [q, m] : factor_q(rep).factors) {
    (void)m;
    FieldPtr F;
    AlgNum x0;
    if (q.degree() == 1) {
      x0 = AlgNum(-q.coeffs()[0]);
    } else {
      F = NumberField::make(q, "a", false);
      x0 = AlgNum::generator(F);
    }
    const Point3 base{x0, AlgNum(1), AlgNum(0)};
    const Point3 dir{AlgNum(0), AlgNum(0), AlgNum(1)};
    UniPoly h = g.restrict_line(base, dir);
    for (const HomogeneousPoly* p : {&gx, &gy, &gz}) h = gcd(h, p->restrict_line(base, dir));
    if (h.degree() != 1) continue;
    AlgNum z0 = -h.coeff(0) / h.coeff(1);
    Point3 pt = normalize_point(transform_point(a, Point3{x0, AlgNum(1), z0}));
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) ok = f.derivative(i).eval(pt).is_zero();
    if (ok) {
      field_out = F;
      return pt;
    }
  }
  return std::nullopt;
}

}  // namespace

bool certify_reduced(const HomogeneousPoly& f, std::uint64_t seed, int trials) {
  const int d = f.degree();
  if (d <= 1) return d == 1;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Point3 base, dir;
    for (int i = 0; i < 3; ++i) {
      base[i] = AlgNum(rng.uniform(-9, 9));
      dir[i] = AlgNum(rng.uniform(-9, 9));
    }
    UniPoly r = f.restrict_line(base, dir);
    if (r.degree() != d) continue;
    if (is_squarefree(r)) return true;
  }
  return false;
}

PlaneCurve make_curve(HomogeneousPoly equation, std::string name, std::uint64_t seed, int trials) {
  if (equation.is_zero()) fail(ErrorCode::ZeroPolynomial, "curve equation is zero");
  if (equation.degree() < 1) fail(ErrorCode::InvalidInput, "curve equation has degree 0");
  PlaneCurve c;
  c.reduced = certify_reduced(equation, seed, trials);
  c.equation = std::move(equation);
  c.name = std::move(name);
  return c;
}

const char* to_string(Smoothness s) {
  switch (s) {
    case Smoothness::Smooth: return "smooth";
    case Smoothness::Singular: return "singular";
    case Smoothness::Unknown: return "unknown";
  }
  return "unknown";
}

Transform3 random_transform(Rng& rng, long range) {
  while (true) {
    Transform3 m;
    for (auto& row : m)
      for (auto& v : row) v = AlgNum(rng.uniform(-range, range));
    if (!det(m).is_zero()) return m;
  }
}

SmoothVerdict check_smooth(const PlaneCurve& c, int trials, std::uint64_t seed) {
  const HomogeneousPoly& f = c.equation;
  const int d = f.degree();
  if (d < 1) fail(ErrorCode::InvalidInput, "smoothness of a degree-0 curve");
  SmoothVerdict v;
  v.projection = identity_transform();
  if (d == 1) {
    v.kind = Smoothness::Smooth;
    return v;
  }
  Rng rng(seed);
  const int n = d * (d - 1);
  for (int attempt = 1; attempt <= trials; ++attempt) {
    v.attempts = attempt;
    Transform3 a = random_transform(rng, 3);
    HomogeneousPoly g = f.substitute(a);
    if (g.coeff({0, 0, d}).is_zero()) continue;
    BiPoly gb = dehomogenize(g, 2, 1);
    BiPoly gzb = dehomogenize(g.derivative(2), 2, 1);
    if (!f.field()) {
      const modp::u64 p = kCertPrimes[(attempt - 1) % 3];
      if (modular_certificate(gb, gzb, n, p)) {
        v.kind = Smoothness::Smooth;
        v.projection = a;
        v.modular = true;
        v.prime = p;
        return v;
      }
    }
    UniPoly disc = resultant_in_v(gb, gzb, n);
    if (disc.degree() == n && is_squarefree(disc)) {
      v.kind = Smoothness::Smooth;
      v.projection = a;
      return v;
    }
    if (disc.is_zero() || f.field()) continue;
    FieldPtr wf;
    if (auto w = singular_witness(f, g, a, disc, wf)) {
      v.kind = Smoothness::Singular;
      v.projection = a;
      v.witness = *w;
      v.witness_field = wf;
      return v;
    }
  }
  v.kind = Smoothness::Unknown;
  return v;
}

HomogeneousPoly polar_curve(const HomogeneousPoly& f, const Point3& p) {
  if (is_zero_point(p)) fail(ErrorCode::InvalidInput, "polar with respect to the zero vector");
  HomogeneousPoly r;
  for (int i = 0; i < 3; ++i) r += p[i] * f.derivative(i);
  return r;
}

HomogeneousPoly hessian(const HomogeneousPoly& f) {
  std::array<std::array<HomogeneousPoly, 3>, 3> h;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = f.derivative(i).derivative(j);
  return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
         h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

bool is_zero_point(const Point3& p) { return p[0].is_zero() && p[1].is_zero() && p[2].is_zero(); }

Point3 normalize_point(const Point3& p) {
  for (int i = 0; i < 3; ++i)
    if (!p[i].is_zero()) {
      AlgNum inv = p[i].inverse();
      Point3 r;
      for (int j = 0; j < 3; ++j) r[j] = j == i ? AlgNum(1).in_field(p[i].field()) : p[j] * inv;
      return r;
    }
  fail(ErrorCode::InvalidInput, "zero vector is not a projective point");
}

bool same_projective_point(const Point3& a, const Point3& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  return true;
}

std::string to_string(const Point3& p) {
  std::ostringstream os;
  os << "(" << to_string(p[0]) << " : " << to_string(p[1]) << " : " << to_string(p[2]) << ")";
  return os.str();
}

}  // namespace zariski
