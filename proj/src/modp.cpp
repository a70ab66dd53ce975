#include "zariski/modp.hpp"

#include <algorithm>

#include "zariski/errors.hpp"

namespace zariski::modp {

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) fail(ErrorCode::Internal, "inverse of zero mod p");
  return powmod(a, p - 2, p);
}

u64 reduce(const Int& a, u64 p) {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p);
  return r.get_ui();
}

std::optional<u64> reduce(const Rat& a, u64 p) {
  u64 d = reduce(Int(a.get_den()), p);
  if (d == 0) return std::nullopt;
  return mulmod(reduce(Int(a.get_num()), p), invmod(d, p), p);
}

std::optional<Poly> reduce(const QPoly& f, u64 p) {
  Poly out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto v = reduce(f.coeffs()[i], p);
    if (!v) return std::nullopt;
    out[i] = *v;
  }
  trim(out);
  return out;
}

Poly reduce(const std::vector<Int>& f, u64 p) {
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = reduce(f[i], p);
  trim(out);
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 next_prime(u64 start) {
  u64 n = std::max<u64>(start, 2);
  while (!is_prime(n)) ++n;
  return n;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + b[i]) % p;
  trim(c);
  return c;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + p - b[i]) % p;
  trim(c);
  return c;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(c);
  return c;
}

Poly scale(const Poly& a, u64 c, u64 p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], c, p);
  trim(r);
  return r;
}

void divrem(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r) {
  if (b.empty()) fail(ErrorCode::Internal, "mod p division by zero");
  r = a;
  if (a.size() < b.size()) {
    q.clear();
    return;
  }
  const int db = degree(b);
  q.assign(a.size() - b.size() + 1, 0);
  const u64 inv = invmod(b.back(), p);
  for (int i = degree(a); i >= db; --i) {
    if (r[i] == 0) continue;
    u64 f = mulmod(r[i], inv, p);
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + p - mulmod(f, b[j], p)) % p;
  }
  r.resize(db);
  trim(r);
  trim(q);
}

Poly rem(const Poly& a, const Poly& b, u64 p) {
  Poly q, r;
  divrem(a, b, p, q, r);
  return r;
}

Poly monic(const Poly& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, invmod(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly ext_gcd(const Poly& a, const Poly& b, u64 p, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    Poly q, r;
    divrem(r0, r1, p, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = s0;
    t = t0;
    return r0;
  }
  u64 inv = invmod(r0.back(), p);
  s = scale(s0, inv, p);
  t = scale(t0, inv, p);
  return scale(r0, inv, p);
}

Poly derivative(const Poly& a, u64 p) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mulmod(a[i], i % p, p);
  trim(d);
  return d;
}

Poly powmod_poly(const Poly& base, const Int& e, const Poly& mod, u64 p) {
  Poly r{1};
  r = rem(r, mod, p);
  Poly b = rem(base, mod, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = rem(mul(r, r, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, b, p), mod, p);
  }
  return r;
}

bool is_squarefree(const Poly& f, u64 p) {
  if (degree(f) < 1) return true;
  Poly d = derivative(f, p);
  if (d.empty()) return false;
  return degree(gcd(f, d, p)) == 0;
}

u64 eval(const Poly& f, u64 x, u64 p) {
  u64 r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = (mulmod(r, x, p) + f[i]) % p;
  return r;
}

u64 resultant(Poly a, Poly b, u64 p) {
  if (a.empty() || b.empty()) return 0;
  u64 acc = 1;
  while (true) {
    const int m = degree(a), n = degree(b);
    if (n == 0) return mulmod(acc, powmod(b[0], m, p), p);
    if (m == 0) return mulmod(acc, powmod(a[0], n, p), p);
    Poly r = rem(a, b, p);
    if (r.empty()) return 0;
    if ((m & 1) && (n & 1)) acc = (p - acc) % p;
    acc = mulmod(acc, powmod(b.back(), m - degree(r), p), p);
    a = std::move(b);
    b = std::move(r);
  }
}

Poly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
  const std::size_t n = xs.size();
  std::vector<u64> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      u64 den = (xs[i] + p - xs[i - j]) % p;
      dd[i] = mulmod((dd[i] + p - dd[i - 1]) % p, invmod(den, p), p);
    }
  Poly r;
  for (std::size_t k = n; k-- > 0;) {
    r = mul(r, Poly{(p - xs[k] % p) % p, 1}, p);
    r = add(r, Poly{dd[k]}, p);
  }
  return r;
}

namespace {

// Distinct-degree factorization: pairs (product of all degree-d factors, d).
std::vector<std::pair<Poly, int>> distinct_degree(Poly f, u64 p) {
  std::vector<std::pair<Poly, int>> out;
  const Poly x{0, 1};
  Poly h = x;
  int d = 0;
  while (2 * (d + 1) <= degree(f)) {
    ++d;
    h = powmod_poly(h, Int(p), f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      Poly q, r;
      divrem(f, g, p, q, r);
      f = q;
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.emplace_back(monic(f, p), degree(f));
  return out;
}

void equal_degree(const Poly& g, int d, u64 p, Rng& rng, std::vector<Poly>& out) {
  if (degree(g) == d) {
    out.push_back(monic(g, p));
    return;
  }
  Int pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
  Int e = (pd - 1) / 2;
  while (true) {
    Poly a(degree(g));
    for (auto& c : a) c = rng.next() % p;
    trim(a);
    if (degree(a) < 1) continue;
    Poly b = sub(powmod_poly(a, e, g, p), Poly{1}, p);
    Poly h = gcd(g, b, p);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      Poly q, r;
      divrem(g, h, p, q, r);
      equal_degree(h, d, p, rng, out);
      equal_degree(q, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& f, u64 p, Rng& rng) {
  std::vector<Poly> out;
  if (degree(f) < 1) return out;
  for (auto& [g, d] : distinct_degree(monic(f, p), p)) equal_degree(g, d, p, rng, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

int count_factors(const Poly& f, u64 p) {
  int n = 0;
  for (auto& [g, d] : distinct_degree(monic(f, p), p)) n += degree(g) / d;
  return n;
}

}  // namespace zariski::modp
