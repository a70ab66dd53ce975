#include "zariski/kernels.hpp"

#include "zariski/errors.hpp"

namespace zariski {

BiPoly dehomogenize(const HomogeneousPoly& f, int eliminated, int fixed) {
  const int u = 3 - eliminated - fixed;
  const int d = f.degree();
  std::vector<std::vector<AlgNum>> c(d + 1, std::vector<AlgNum>(d + 1, AlgNum(0)));
  for (auto& [e, v] : f.terms()) c[e[eliminated]][e[u]] = v;
  BiPoly out;
  for (auto& row : c) out.emplace_back(row);
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

namespace {

UniPoly specialize(const BiPoly& f, const AlgNum& u) {
  std::vector<AlgNum> c;
  c.reserve(f.size());
  for (auto& p : f) c.push_back(p.eval(u));
  return UniPoly(std::move(c));
}

AlgNum resultant_at(const BiPoly& f, const BiPoly& g, long u) {
  return resultant(specialize(f, AlgNum(u)), specialize(g, AlgNum(u)));
}

}  // namespace

UniPoly resultant_in_v(const BiPoly& f, const BiPoly& g, int bound, Exec exec) {
  if (f.empty() || g.empty()) fail(ErrorCode::UndefinedResultant, "zero input to the bivariate resultant");
  if (!f.back().is_constant() || !g.back().is_constant())
    fail(ErrorCode::Internal, "leading coefficient in v is not constant");
  const int n = bound + 1;
  std::vector<AlgNum> values(n);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) values[i] = resultant_at(f, g, i);
  } else {
    for (int i = 0; i < n; ++i) values[i] = resultant_at(f, g, i);
  }
  std::vector<Rat> nodes(n);
  for (int i = 0; i < n; ++i) nodes[i] = i;
  return interpolate(nodes, values);
}

}  // namespace zariski
