#pragma once

#include <string>
#include <vector>

#include "specgap/mpoly.hpp"

namespace specgap {

// Even polynomial potential with positive leading coefficient. The quartic
// family V(x) = (s/2) x^2 + (1/4) x^4 can keep s as a symbolic indeterminate,
// which is what the closed-form discriminant computations use.
class PotentialSpec {
 public:
  PotentialSpec() = default;  // unset placeholder; factories build usable values

  static PotentialSpec quartic(const Rational& s);
  static PotentialSpec quartic_symbolic();
  static PotentialSpec sextic();  // V(x) = x^6
  static PotentialSpec custom(std::vector<Rational> coeffs);

  bool symbolic_s() const { return symbolic_s_; }
  bool is_quartic_family() const { return quartic_family_; }
  // shape parameter of the quartic family; throws for other potentials
  const Rational& s_value() const;

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_even() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  MPoly to_mpoly() const;  // in x (and s when symbolic)
  double eval_double(double x) const;

  // Largest rational lower bound p/q <= min V the bisection search certifies
  // within tol; exact -s^2/4 for the quartic family.
  Rational min_value_lower_bound(const Rational& tol) const;

  std::string label() const;

  friend bool operator==(const PotentialSpec& a, const PotentialSpec& b);

 private:
  std::vector<Rational> coeffs_;  // coeffs_[k] multiplies x^k
  bool symbolic_s_ = false;
  bool quartic_family_ = false;
  Rational s_;
};

}  // namespace specgap
