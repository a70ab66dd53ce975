#include "zariski/qfactor.hpp"

#include <algorithm>
#include <cmath>

#include "zariski/errors.hpp"
#include "zariski/modp.hpp"

namespace zariski {

namespace {

using IPoly = std::vector<Int>;
using modp::u64;

void trim_i(IPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

IPoly mul_i(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim_i(c);
  return c;
}

IPoly mod_i(IPoly a, const Int& m) {
  for (auto& v : a) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  trim_i(a);
  return a;
}

IPoly symmetric(IPoly a, const Int& m) {
  Int half = m / 2;
  for (auto& v : a) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (v > half) v -= m;
  }
  trim_i(a);
  return a;
}

IPoly lift_poly(const modp::Poly& a) {
  IPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Int(static_cast<unsigned long>(a[i]));
  return r;
}

void primitive(IPoly& a) {
  Int g = 0;
  for (auto& v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (sgn(g) == 0) return;
  if (sgn(a.back()) < 0) g = -g;
  for (auto& v : a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Exact division over Z; returns false when b does not divide a.
bool divides_i(IPoly a, const IPoly& b, IPoly& q) {
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return a.empty();
  q.assign(a.size() - b.size() + 1, Int(0));
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    if (sgn(a[i]) == 0) continue;
    if (!mpz_divisible_p(a[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    Int f = a[i] / b.back();
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
  }
  for (int i = 0; i < db; ++i)
    if (sgn(a[i]) != 0) return false;
  trim_i(q);
  return true;
}

// Lift f = g*h (mod p), g monic, to f = G*H (mod p^k).
void hensel_pair(const IPoly& f, const modp::Poly& g, const modp::Poly& h, u64 p, int k, IPoly& G,
                 IPoly& H) {
  modp::Poly s, t;
  modp::Poly one = modp::ext_gcd(g, h, p, s, t);
  if (modp::degree(one) != 0) fail(ErrorCode::Internal, "hensel factors not coprime");
  G = lift_poly(g);
  H = lift_poly(h);
  Int m = Int(static_cast<unsigned long>(p));
  for (int j = 1; j < k; ++j) {
    IPoly e = f;
    IPoly gh = mul_i(G, H);
    if (e.size() < gh.size()) e.resize(gh.size(), Int(0));
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    for (auto& v : e) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    trim_i(e);
    modp::Poly ep = modp::reduce(e, p);
    modp::Poly q, dg;
    modp::divrem(modp::mul(t, ep, p), g, p, q, dg);
    modp::Poly dh = modp::add(modp::mul(s, ep, p), modp::mul(q, h, p), p);
    IPoly DG = lift_poly(dg), DH = lift_poly(dh);
    if (G.size() < DG.size()) G.resize(DG.size(), Int(0));
    if (H.size() < DH.size()) H.resize(DH.size(), Int(0));
    for (std::size_t i = 0; i < DG.size(); ++i) G[i] += m * DG[i];
    for (std::size_t i = 0; i < DH.size(); ++i) H[i] += m * DH[i];
    m *= p;
    G = mod_i(G, m);
    H = mod_i(H, m);
  }
}

std::vector<IPoly> hensel_all(const IPoly& f, const std::vector<modp::Poly>& fs, u64 p, int k,
                              const Int& pk) {
  if (fs.size() == 1) {
    Int inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
    IPoly r = f;
    for (auto& v : r) v *= inv;
    return {mod_i(r, pk)};
  }
  const std::size_t half = fs.size() / 2;
  std::vector<modp::Poly> left(fs.begin(), fs.begin() + half), right(fs.begin() + half, fs.end());
  modp::Poly g{1}, h{modp::reduce(f.back(), p)};
  for (auto& a : left) g = modp::mul(g, a, p);
  for (auto& a : right) h = modp::mul(h, a, p);
  IPoly G, H;
  hensel_pair(f, g, h, p, k, G, H);
  auto a = hensel_all(G, left, p, k, pk);
  auto b = hensel_all(H, right, p, k, pk);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool next_subset(std::vector<int>& idx, int n) {
  const int s = static_cast<int>(idx.size());
  int i = s - 1;
  while (i >= 0 && idx[i] == n - s + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

// Irreducible factors of a primitive squarefree integer polynomial.
std::vector<IPoly> zassenhaus(IPoly f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  std::vector<IPoly> out;
  // strip a factor x
  if (sgn(f[0]) == 0) {
    out.push_back({Int(0), Int(1)});
    f.erase(f.begin());
    if (f.size() <= 2) {
      if (f.size() == 2) out.push_back(f);
      return out;
    }
  }
  const int deg = static_cast<int>(f.size()) - 1;

  u64 best_p = 0;
  int best_count = 1 << 30;
  int good = 0;
  for (u64 p = 7; good < 5; p = modp::next_prime(p + 1)) {
    if (modp::reduce(f.back(), p) == 0) continue;
    modp::Poly fp = modp::reduce(f, p);
    if (!modp::is_squarefree(fp, p)) continue;
    ++good;
    int c = modp::count_factors(fp, p);
    if (c < best_count) {
      best_count = c;
      best_p = p;
    }
    if (c == 1) break;
  }
  if (best_count == 1) {
    out.push_back(f);
    return out;
  }
  const u64 p = best_p;
  Rng rng(p * 7919 + deg);
  std::vector<modp::Poly> fs = modp::factor_squarefree(modp::reduce(f, p), p, rng);

  // coefficient bound for lc(f) * (any factor)
  Int norm2 = 0;
  for (auto& v : f) norm2 += v * v;
  Int root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Int bound = root * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), deg);
  bound *= 2;
  int k = 1;
  Int pk = Int(static_cast<unsigned long>(p));
  while (pk <= bound) {
    pk *= p;
    ++k;
  }
  std::vector<IPoly> lifted = hensel_all(f, fs, p, k, pk);

  int s = 1;
  while (2 * s <= static_cast<int>(lifted.size())) {
    bool found = false;
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    do {
      IPoly g{f.back()};
      for (int i : idx) g = mod_i(mul_i(g, lifted[i]), pk);
      g = symmetric(g, pk);
      primitive(g);
      if (sgn(f[0]) != 0 && !mpz_divisible_p(f[0].get_mpz_t(), g[0].get_mpz_t())) continue;
      IPoly q;
      if (divides_i(f, g, q)) {
        out.push_back(g);
        f = q;
        primitive(f);
        for (int j = s - 1; j >= 0; --j) lifted.erase(lifted.begin() + idx[j]);
        found = true;
        break;
      }
    } while (next_subset(idx, static_cast<int>(lifted.size())));
    if (!found) ++s;
  }
  if (f.size() > 1) out.push_back(f);
  return out;
}

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeffs()[i] != b.coeffs()[i]) {
      const Rat aa = abs(a.coeffs()[i]), bb = abs(b.coeffs()[i]);
      if (aa != bb) return aa < bb;
      return a.coeffs()[i] < b.coeffs()[i];
    }
  return false;
}

}  // namespace

QFactorization factor_q(const QPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  QFactorization r;
  r.unit = p.leading();
  for (auto& [g, mult] : squarefree_decomposition(p)) {
    for (auto& h : zassenhaus(primitive_integer_coeffs(g)))
      r.factors.emplace_back(from_integer_coeffs(h).monic(), mult);
  }
  std::sort(r.factors.begin(), r.factors.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return poly_less(a.first, b.first);
    return a.second < b.second;
  });
  return r;
}

bool is_irreducible_q(const QPoly& p) {
  if (p.degree() < 1) return false;
  auto f = factor_q(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

std::vector<Rat> rational_roots(const QPoly& p) {
  std::vector<Rat> out;
  if (p.degree() < 1) return out;
  for (auto& [g, m] : factor_q(p).factors)
    if (g.degree() == 1) out.push_back(-g.coeffs()[0]);
  return out;
}

}  // namespace zariski
