#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "specgap/rational.hpp"

namespace specgap {

// The four indeterminates the library ever needs: position, the Gaussian
// width, the energy and the quartic shape parameter.
enum class Var : unsigned { x = 0, lam = 1, E = 2, s = 3 };

constexpr std::array<Var, 4> kAllVars{Var::x, Var::lam, Var::E, Var::s};

const char* var_name(Var v);

// A monomial packs the four exponents into one 64-bit key (16 bits each, x in
// the low bits). Plain integer comparison of keys is a lexicographic monomial
// order with s > E > lam > x, so map iteration order is a term order.
using Mono = std::uint64_t;

inline unsigned mono_exp(Mono m, Var v) {
  return static_cast<unsigned>((m >> (16u * static_cast<unsigned>(v))) & 0xFFFFu);
}

Mono mono_mul(Mono a, Mono b);            // throws on 16-bit overflow
bool mono_divides(Mono a, Mono b);        // a | b componentwise
Mono mono_div(Mono b, Mono a);            // requires mono_divides(a, b)

// Sparse multivariate polynomial over Rational. Zero coefficients are never
// stored; equal polynomials have identical term maps. Immutable in practice:
// every operation returns a fresh value.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(const Rational& c);
  explicit MPoly(long c);

  static MPoly variable(Var v, unsigned power = 1);
  static MPoly monomial(const Rational& c,
                        std::initializer_list<std::pair<Var, unsigned>> exps);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial (zero polynomial gives 0); throws otherwise.
  Rational constant_value() const;

  // -1 for the zero polynomial.
  int degree(Var v) const;
  int total_degree() const;
  int total_degree(std::initializer_list<Var> vars) const;
  bool uses(Var v) const { return degree(v) > 0; }
  std::vector<Var> variables() const;

  std::size_t term_count() const { return terms_.size(); }
  const std::map<Mono, Rational>& terms() const { return terms_; }
  Rational coeff(Mono m) const;

  MPoly derivative(Var v) const;
  // Partial substitution; substituting every present variable yields a
  // constant polynomial.
  MPoly eval(const std::vector<std::pair<Var, Rational>>& assignment) const;
  // Polynomial coefficient of v^k in *this.
  MPoly coeff_of(Var v, unsigned k) const;

  MPoly pow(int k) const;  // k < 0 throws "unsupported exponent"

  // Writes *this as scale * P with P integer-coefficient, primitive and
  // positive leading coefficient (in the monomial order). Zero gives (0, 1).
  std::pair<MPoly, Rational> primitive_scaled() const;

  // Leading term in the monomial order.
  Mono leading_mono() const;
  const Rational& leading_coeff() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rational& c, const MPoly& p);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  std::string str() const;

  void add_term(Mono m, const Rational& c);  // accumulate, drop zeros

 private:
  std::map<Mono, Rational> terms_;
};

MPoly operator*(const MPoly& p, const Rational& c);
MPoly operator+(const MPoly& a, long b);
MPoly operator-(const MPoly& a, long b);
MPoly operator*(long c, const MPoly& p);

// Exact quotient f / g; throws std::domain_error when the division is not
// exact. Used by fraction-free elimination where exactness is guaranteed.
MPoly divide_exact(const MPoly& f, const MPoly& g);

// Univariate view: f = sum coeffs[k] * main^k with coefficients free of the
// main variable. The coefficient list carries no trailing zero entry.
class UView {
 public:
  UView(Var main, const MPoly& p);
  static UView from_coeffs(Var main, std::vector<MPoly> coeffs);

  Var main() const { return main_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const MPoly& lc() const;
  const MPoly& coeff(std::size_t k) const;  // zero MPoly beyond degree
  const std::vector<MPoly>& coeffs() const { return coeffs_; }

  // True when every coefficient is a rational constant.
  bool rational_coeffs() const;

  MPoly to_mpoly() const;
  UView derivative() const;

 private:
  UView() = default;
  void trim();
  Var main_{Var::x};
  std::vector<MPoly> coeffs_;
};

// Closed rational interval, lo <= hi.
struct Interval {
  Rational lo;
  Rational hi;
  Interval(Rational l, Rational h);
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }
};

}  // namespace specgap
