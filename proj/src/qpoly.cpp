#include <sstream>

#include "zariski/dense_poly.hpp"
#include "zariski/modp.hpp"

namespace zariski {

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rat c = p.coeffs()[i];
    if (is_zero(c)) continue;
    if (sgn(c) < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (i == 0 || c != 1) {
      os << to_string(c);
      if (i > 0) os << "*";
    }
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::vector<Int> primitive_integer_coeffs(const QPoly& p) {
  if (p.is_zero()) return {};
  Int l = lcm_of_denominators(p.coeffs());
  std::vector<Int> c(p.coeffs().size());
  Int g = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = Int(p.coeffs()[i] * l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c[i].get_mpz_t());
  }
  if (sgn(c.back()) < 0) g = -g;
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return c;
}

QPoly from_integer_coeffs(const std::vector<Int>& c) {
  std::vector<Rat> r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = Rat(c[i]);
  return QPoly(std::move(r));
}

namespace {

using IPoly = std::vector<Int>;

void trim_i(IPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

void make_primitive(IPoly& a) {
  Int g = 0;
  for (auto& v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (sgn(g) == 0) return;
  if (sgn(a.back()) < 0) g = -g;
  for (auto& v : a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// lc(b)^(deg a - deg b + 1) * a mod b
IPoly pseudo_rem(IPoly a, const IPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const Int& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    Int la = a.back();
    for (auto& v : a) v *= lb;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
    trim_i(a);
  }
  return a;
}

}  // namespace

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return QPoly::constant(Rat(1));
  IPoly x = primitive_integer_coeffs(a), y = primitive_integer_coeffs(b);
  // a modular image of degree 0 proves coprimality
  for (modp::u64 p : {1000003ULL, 998244353ULL}) {
    if (modp::reduce(x.back(), p) == 0 || modp::reduce(y.back(), p) == 0) continue;
    if (modp::degree(modp::gcd(modp::reduce(x, p), modp::reduce(y, p), p)) == 0)
      return QPoly::constant(Rat(1));
    break;
  }
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IPoly r = pseudo_rem(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return from_integer_coeffs(x).monic();
}

}  // namespace zariski
