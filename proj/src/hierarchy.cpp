#include "specgap/hierarchy.hpp"

#include <sstream>
#include <stdexcept>

namespace specgap {

int DiffOperator::order() const {
  for (std::size_t k = coeffs.size(); k-- > 0;)
    if (!coeffs[k].is_zero()) return static_cast<int>(k);
  return -1;
}

bool DiffOperator::is_zero() const { return order() < 0; }

const MPoly& DiffOperator::coeff(std::size_t k) const {
  static const MPoly kZero;
  return k < coeffs.size() ? coeffs[k] : kZero;
}

DiffOperator DiffOperator::output_derivative() const {
  DiffOperator out;
  out.coeffs.resize(coeffs.size() + 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out.coeffs[k] += coeffs[k].derivative(Var::x);
    out.coeffs[k + 1] += coeffs[k];
  }
  return out;
}

Rational DiffOperator::apply_at(const MPoly& a0, const Rational& x, const Rational& e) const {
  MPoly d = a0;
  Rational acc(0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) {
      Rational ck = coeffs[k].eval({{Var::x, x}, {Var::E, e}}).constant_value();
      acc += ck * d.eval({{Var::x, x}, {Var::E, e}}).constant_value();
    }
    d = d.derivative(Var::x);
  }
  return acc;
}

std::string DiffOperator::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs[k].str() << ")*a0";
    if (k == 1)
      os << "'";
    else if (k == 2)
      os << "''";
    else if (k == 3)
      os << "'''";
    else if (k > 3)
      os << "^(" << k << ")";
  }
  if (first) os << "0";
  return os.str();
}

std::vector<DiffOperator> build_a_chain(const PotentialSpec& v, int n_order) {
  if (n_order <= 0) throw std::invalid_argument("chain order must be positive");
  const MPoly two_v_minus_e =
      Rational(2) * (v.to_mpoly() - MPoly::variable(Var::E));
  std::vector<DiffOperator> a(static_cast<std::size_t>(n_order) + 1);
  a[0].coeffs = {MPoly(1L)};
  for (int n = 0; n < n_order; ++n) {
    const DiffOperator& cur = a[static_cast<std::size_t>(n)];
    DiffOperator next = cur.output_derivative();
    const Rational inv = make_rational(-1, n + 1);
    for (MPoly& c : next.coeffs) c = inv * c;
    if (n >= 1) {
      const Rational w = make_rational(n_order - n + 1, n + 1);
      const MPoly factor = Rational(-w) * two_v_minus_e;
      const DiffOperator& prev = a[static_cast<std::size_t>(n - 1)];
      if (next.coeffs.size() < prev.coeffs.size()) next.coeffs.resize(prev.coeffs.size());
      for (std::size_t k = 0; k < prev.coeffs.size(); ++k)
        next.coeffs[k] += factor * prev.coeffs[k];
    }
    a[static_cast<std::size_t>(n + 1)] = std::move(next);
  }
  return a;
}

DiffOperator build_F_N(const PotentialSpec& v, int n_order) {
  auto chain = build_a_chain(v, n_order);
  const MPoly two_v_minus_e =
      Rational(2) * (v.to_mpoly() - MPoly::variable(Var::E));
  DiffOperator f = chain[static_cast<std::size_t>(n_order)].output_derivative();
  const DiffOperator& prev = chain[static_cast<std::size_t>(n_order - 1)];
  if (f.coeffs.size() < prev.coeffs.size()) f.coeffs.resize(prev.coeffs.size());
  for (std::size_t k = 0; k < prev.coeffs.size(); ++k)
    f.coeffs[k] += two_v_minus_e * prev.coeffs[k];
  return f;
}

MPoly gauss_derivative(const MPoly& p) {
  return p.derivative(Var::x) - MPoly::variable(Var::lam) * MPoly::variable(Var::x) * p;
}

MPoly build_Q(const PotentialSpec& v, const MPoly& p) {
  if (!v.is_even()) throw std::invalid_argument("Gaussian reduction needs an even potential");
  const MPoly vp = v.to_mpoly();
  const MPoly dp = gauss_derivative(p);
  const MPoly d3p = gauss_derivative(gauss_derivative(dp));
  const MPoly v_minus_e = vp - MPoly::variable(Var::E);
  return d3p - Rational(8) * v_minus_e * dp - Rational(4) * vp.derivative(Var::x) * p;
}

bool check_decay_admissible(const PotentialSpec& v) { return v.degree() >= 4; }

}  // namespace specgap
