#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace zariski {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_zero(const Int& r) { return sgn(r) == 0; }

Rat make_rat(long num, long den = 1);
Rat parse_rat(const std::string& s);
std::string to_string(const Rat& r);
std::string to_string(const Int& r);

Int lcm_of_denominators(const std::vector<Rat>& v);
Int gcd_of_numerators(const std::vector<Rat>& v);

// Deterministic generator; std distributions are not portable across libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  // uniform in [lo, hi]
  long uniform(long lo, long hi);
  std::uint64_t fork();

 private:
  std::mt19937_64 engine_;
};

}  // namespace zariski
