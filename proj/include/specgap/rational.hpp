#pragma once

#include <gmpxx.h>

#include <string>

namespace specgap {

// Exact rational scalar used by all symbolic computations. mpq_class keeps
// values canonical: gcd(|num|, den) = 1 and den > 0, with 0 stored as 0/1.
using Rational = mpq_class;

// Parses "17", "-3/4" or a decimal string such as "-2.3" (exactly -23/10).
// Scientific notation ("1e-4") is accepted. Throws std::invalid_argument on
// malformed input.
Rational rat_from_string(const std::string& text);

std::string rat_to_string(const Rational& q);

inline double rat_to_double(const Rational& q) { return q.get_d(); }

inline int sign_of(const Rational& q) { return sgn(q); }

Rational rat_pow(const Rational& base, unsigned exp);

// mpq_class(n, d) stores the pair verbatim; this helper canonicalizes, which
// every later arithmetic operation relies on.
inline Rational make_rational(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline mpz_class num_of(const Rational& q) { return q.get_num(); }
inline mpz_class den_of(const Rational& q) { return q.get_den(); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// The coarsest dyadic rational strictly inside (a, b); keeps substitution
// points cheap when segments are wide.
Rational simple_rational_inside(const Rational& a, const Rational& b);

}  // namespace specgap
