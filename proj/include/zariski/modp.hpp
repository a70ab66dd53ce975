#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zariski/dense_poly.hpp"
#include "zariski/rational.hpp"

// Dense polynomials over Z/p for word-sized odd primes p < 2^31.
namespace zariski::modp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // low degree first, no trailing zeros

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);
u64 reduce(const Int& a, u64 p);
// nullopt when p divides the denominator
std::optional<u64> reduce(const Rat& a, u64 p);
std::optional<Poly> reduce(const QPoly& f, u64 p);
Poly reduce(const std::vector<Int>& f, u64 p);

bool is_prime(u64 n);
// primes starting at `start`, in increasing order
u64 next_prime(u64 start);

void trim(Poly& f);
int degree(const Poly& f);
Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly scale(const Poly& a, u64 c, u64 p);
void divrem(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r);
Poly rem(const Poly& a, const Poly& b, u64 p);
Poly monic(const Poly& a, u64 p);
Poly gcd(Poly a, Poly b, u64 p);
// s*a + t*b = g with g monic
Poly ext_gcd(const Poly& a, const Poly& b, u64 p, Poly& s, Poly& t);
Poly derivative(const Poly& a, u64 p);
Poly powmod_poly(const Poly& base, const Int& e, const Poly& mod, u64 p);
bool is_squarefree(const Poly& f, u64 p);
u64 eval(const Poly& f, u64 x, u64 p);

u64 resultant(Poly a, Poly b, u64 p);
Poly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p);

// Monic irreducible factors of a squarefree monic polynomial.
std::vector<Poly> factor_squarefree(const Poly& f, u64 p, Rng& rng);
// Number of irreducible factors (distinct-degree counts only).
int count_factors(const Poly& f, u64 p);

}  // namespace zariski::modp
