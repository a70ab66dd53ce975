#include "zariski/local_param.hpp"

#include "zariski/errors.hpp"

namespace zariski {

Series series_mul(const Series& a, const Series& b, int len) {
  Series c(len, AlgNum(0));
  for (int i = 0; i < static_cast<int>(a.size()) && i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < static_cast<int>(b.size()) && i + j < len; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

namespace {

Series inverse_trunc(const Series& a, int len) {
  Series inv(len, AlgNum(0));
  const AlgNum a0inv = a[0].inverse();
  inv[0] = a0inv;
  for (int k = 1; k < len; ++k) {
    AlgNum s(0);
    for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j) s += a[j] * inv[k - j];
    inv[k] = -s * a0inv;
  }
  return inv;
}

// h with the chart coordinate set to 1 and the parameter coordinate u0 + s,
// as a polynomial in the solved coordinate whose coefficients are polynomials in s.
std::vector<Series> chart_form(const HomogeneousPoly& h, int param_var, int solved_var, const AlgNum& u0) {
  const int d = std::max(h.degree(), 0);
  // (u0 + s)^a, exact
  std::vector<Series> shift(d + 1);
  shift[0] = {AlgNum(1)};
  for (int a = 1; a <= d; ++a) {
    Series next(a + 1, AlgNum(0));
    for (int i = 0; i < a; ++i) {
      next[i] += shift[a - 1][i] * u0;
      next[i + 1] += shift[a - 1][i];
    }
    shift[a] = next;
  }
  std::vector<Series> out(d + 1, Series(d + 1, AlgNum(0)));
  for (auto& [e, c] : h.terms()) {
    const Series& s = shift[e[param_var]];
    Series& row = out[e[solved_var]];
    for (std::size_t i = 0; i < s.size(); ++i) row[i] += c * s[i];
  }
  return out;
}

Series horner(const std::vector<Series>& form, const Series& v, int len) {
  Series r(len, AlgNum(0));
  for (int j = static_cast<int>(form.size()) - 1; j >= 0; --j) {
    r = series_mul(r, v, len);
    for (int i = 0; i < len && i < static_cast<int>(form[j].size()); ++i) r[i] += form[j][i];
  }
  return r;
}

}  // namespace

LocalParam local_param(const PlaneCurve& d, const ProjPointCluster& c, int order) {
  if (order < 0) fail(ErrorCode::InvalidInput, "negative truncation order");
  const HomogeneousPoly f = c.embed(d.equation);
  if (!f.eval(c.point).is_zero()) fail(ErrorCode::InvalidInput, "point " + describe(c) + " is not on the curve");
  LocalParam p;
  p.field = c.field;
  p.order = order;
  // chart: the last nonzero coordinate
  int chart = 2;
  while (chart >= 0 && c.point[chart].is_zero()) --chart;
  const AlgNum inv = c.point[chart].inverse();
  Point3 pt;
  for (int i = 0; i < 3; ++i) pt[i] = c.point[i] * inv;
  p.center = pt;
  p.chart = chart;
  int a = (chart + 1) % 3, b = (chart + 2) % 3;
  if (a > b) std::swap(a, b);
  // prefer solving for the later coordinate
  int solved = b, param = a;
  if (f.derivative(solved).eval(pt).is_zero()) std::swap(solved, param);
  if (f.derivative(solved).eval(pt).is_zero())
    fail(ErrorCode::InvalidInput, "singular point " + describe(c) + " has no smooth branch");
  p.param_var = param;
  p.solved_var = solved;

  const int len = order + 1;
  const auto form = chart_form(f, param, solved, pt[param]);
  std::vector<Series> dform;
  for (std::size_t j = 1; j < form.size(); ++j) {
    Series row = form[j];
    for (auto& v : row) v = v * AlgNum(static_cast<long>(j));
    dform.push_back(row);
  }
  Series v{pt[solved]};
  int prec = 1;
  while (prec < len) {
    prec = std::min(2 * prec, len);
    v.resize(prec, AlgNum(0));
    Series e = horner(form, v, prec);
    Series dv = horner(dform, v, prec);
    Series corr = series_mul(e, inverse_trunc(dv, prec), prec);
    for (int i = 0; i < prec; ++i) v[i] -= corr[i];
  }
  v.resize(len, AlgNum(0));
  p.coords[chart] = Series(len, AlgNum(0));
  p.coords[chart][0] = AlgNum(1);
  p.coords[param] = Series(len, AlgNum(0));
  p.coords[param][0] = pt[param];
  if (len > 1) p.coords[param][1] = AlgNum(1);
  p.coords[solved] = v;
  for (auto& s : p.coords)
    for (auto& x : s) x = c.field ? x.in_field(c.field) : x;
  return p;
}

Series evaluate_along(const LocalParam& p, const ProjPointCluster& c, const HomogeneousPoly& h) {
  const int len = p.order + 1;
  const HomogeneousPoly g = c.embed(h);
  const auto form = chart_form(g, p.param_var, p.solved_var, p.center[p.param_var]);
  return horner(form, p.coords[p.solved_var], len);
}

OrderAlong order_along(const PlaneCurve& d, const ProjPointCluster& c, const LocalParam& param,
                       const HomogeneousPoly& h, int cap) {
  if (h.is_zero()) return {OrderAlong::VanishesOnCurve, cap};
  if (param.order + 1 < cap) fail(ErrorCode::Internal, "parametrization shorter than the cap");
  Series s = evaluate_along(param, c, h);
  for (int i = 0; i < cap; ++i)
    if (!s[i].is_zero()) return {OrderAlong::Exact, i};
  if (h.divisible_by(d.equation)) return {OrderAlong::VanishesOnCurve, cap};
  return {OrderAlong::AtLeast, cap};
}

OrderAlong order_along(const PlaneCurve& d, const ProjPointCluster& c, const HomogeneousPoly& h, int cap) {
  if (cap < 1) fail(ErrorCode::InvalidInput, "cap must be positive");
  return order_along(d, c, local_param(d, c, cap - 1), h, cap);
}

}  // namespace zariski
