#include "specgap/potential.hpp"

#include <sstream>
#include <stdexcept>

#include "specgap/roots.hpp"

namespace specgap {

namespace {

void validate(const std::vector<Rational>& c) {
  if (c.size() < 3) throw std::invalid_argument("potential degree must be at least 2");
  int deg = static_cast<int>(c.size()) - 1;
  if (deg % 2 != 0) throw std::invalid_argument("potential degree must be even");
  if (c.back() <= 0) throw std::invalid_argument("potential needs a positive leading coefficient");
}

}  // namespace

PotentialSpec PotentialSpec::quartic(const Rational& s) {
  PotentialSpec p;
  p.coeffs_ = {Rational(0), Rational(0), s / 2, Rational(0), Rational(1, 4)};
  p.quartic_family_ = true;
  p.s_ = s;
  validate(p.coeffs_);
  return p;
}

PotentialSpec PotentialSpec::quartic_symbolic() {
  PotentialSpec p = quartic(Rational(0));
  p.symbolic_s_ = true;
  return p;
}

PotentialSpec PotentialSpec::sextic() {
  PotentialSpec p;
  p.coeffs_.assign(7, Rational(0));
  p.coeffs_[6] = 1;
  validate(p.coeffs_);
  return p;
}

PotentialSpec PotentialSpec::custom(std::vector<Rational> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  validate(coeffs);
  PotentialSpec p;
  p.coeffs_ = std::move(coeffs);
  return p;
}

const Rational& PotentialSpec::s_value() const {
  if (!quartic_family_) throw std::logic_error("potential has no shape parameter");
  return s_;
}

bool PotentialSpec::is_even() const {
  for (std::size_t k = 1; k < coeffs_.size(); k += 2)
    if (coeffs_[k] != 0) return false;
  return true;
}

MPoly PotentialSpec::to_mpoly() const {
  if (symbolic_s_) {
    return MPoly::monomial(Rational(1, 2), {{Var::s, 1}, {Var::x, 2}}) +
           MPoly::monomial(Rational(1, 4), {{Var::x, 4}});
  }
  MPoly v;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    v += MPoly::monomial(coeffs_[k], {{Var::x, static_cast<unsigned>(k)}});
  return v;
}

double PotentialSpec::eval_double(double x) const {
  if (symbolic_s_) throw std::logic_error("cannot evaluate a symbolic potential");
  double acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + rat_to_double(coeffs_[k]);
  return acc;
}

Rational PotentialSpec::min_value_lower_bound(const Rational& tol) const {
  if (symbolic_s_) throw std::logic_error("cannot bound a symbolic potential");
  if (quartic_family_) {
    if (s_ >= 0) return Rational(0);
    return -(s_ * s_) / 4;
  }
  // critical points of V, then the smallest V value over certified brackets
  MPoly v = to_mpoly();
  MPoly dv = v.derivative(Var::x);
  UView dvu(Var::x, dv);
  Rational best = coeffs_[0];  // V(0) is always an upper bound for min V
  for (const Interval& iv : isolate_real_roots(dvu)) {
    Rational x0 = refine_root(dvu, iv, tol);
    Rational vlo = v.eval({{Var::x, x0 - tol}}).constant_value();
    Rational vhi = v.eval({{Var::x, x0 + tol}}).constant_value();
    Rational vmid = v.eval({{Var::x, x0}}).constant_value();
    Rational m = std::min(std::min(vlo, vhi), vmid);
    if (m < best) best = m;
  }
  // pad by the local variation so the bound is certified below min V
  return best - tol;
}

std::string PotentialSpec::label() const {
  std::ostringstream os;
  if (quartic_family_) {
    os << "quartic";
    return os.str();
  }
  if (coeffs_.size() == 7 && coeffs_[6] == 1) {
    bool pure = true;
    for (std::size_t k = 0; k < 6; ++k) pure = pure && coeffs_[k] == 0;
    if (pure) return "sextic";
  }
  os << "custom(";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) os << ",";
    os << rat_to_string(coeffs_[k]);
  }
  os << ")";
  return os.str();
}

bool operator==(const PotentialSpec& a, const PotentialSpec& b) {
  return a.coeffs_ == b.coeffs_ && a.symbolic_s_ == b.symbolic_s_;
}

}  // namespace specgap
