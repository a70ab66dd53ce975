#include "zariski/rational.hpp"

#include "zariski/errors.hpp"

namespace zariski {

Rat make_rat(long num, long den) {
  if (den == 0) fail(ErrorCode::InvalidInput, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) fail(ErrorCode::Syntax, "bad rational '" + s + "'");
  if (r.get_den() == 0) fail(ErrorCode::InvalidInput, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }
std::string to_string(const Int& r) { return r.get_str(10); }

Int lcm_of_denominators(const std::vector<Rat>& v) {
  Int l = 1;
  for (const auto& r : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  return l;
}

Int gcd_of_numerators(const std::vector<Rat>& v) {
  Int g = 0;
  for (const auto& r : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_num_mpz_t());
  return g;
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

long Rng::uniform(long lo, long hi) {
  if (hi < lo) fail(ErrorCode::InvalidInput, "empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return lo + static_cast<long>(v % span);
}

std::uint64_t Rng::fork() { return engine_() ^ 0x9e3779b97f4a7c15ULL; }

}  // namespace zariski
