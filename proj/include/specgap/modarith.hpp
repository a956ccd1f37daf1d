#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace specgap::modp {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);
bool is_prime(u64 n);

// Deterministic stream of 62-bit primes, largest first.
class PrimeGen {
 public:
  PrimeGen();
  u64 next();

 private:
  u64 cursor_;
};

// Dense univariate polynomial over Z/p, coefficient of t^i at index i, no
// trailing zeros.
using Poly = std::vector<u64>;

void trim(Poly& f);
inline int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly reduce(const std::vector<mpz_class>& f, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly rem(const Poly& a, const Poly& b, u64 p);
Poly gcd_monic(Poly a, Poly b, u64 p);
u64 eval(const Poly& f, u64 t, u64 p);

// Resultant of a and b over Z/p (det of their Sylvester matrix mod p).
u64 resultant(Poly a, Poly b, u64 p);

// Newton interpolation through (xs[i], ys[i]); all xs distinct mod p.
Poly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p);

// Incremental Chinese remaindering with balanced lift.
class Crt {
 public:
  void add(u64 residue, u64 p);
  const mpz_class& modulus() const { return modulus_; }
  mpz_class balanced() const;

 private:
  mpz_class value_{0};
  mpz_class modulus_{1};
};

}  // namespace specgap::modp
