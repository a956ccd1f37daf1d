#pragma once

#include <string>
#include <vector>

#include "specgap/potential.hpp"

namespace specgap {

// Linear differential operator with polynomial coefficients, acting on a free
// profile function a0: a0 |-> sum_k coeffs[k] * d^k a0 / dx^k. Coefficients
// are polynomials in x, E (and s for the symbolic quartic family).
struct DiffOperator {
  std::vector<MPoly> coeffs;

  int order() const;
  bool is_zero() const;
  const MPoly& coeff(std::size_t k) const;
  // operator mapping a0 to the x-derivative of (*this applied to a0)
  DiffOperator output_derivative() const;
  // evaluate (*this applied to a0) at rational x, E for a concrete polynomial a0
  Rational apply_at(const MPoly& a0, const Rational& x, const Rational& e) const;
  std::string str() const;
};

// The chain a_0 .. a_N generated by the two-term recurrence
//   a_{n+1} = -a_n'/(n+1) - 2 (N-n+1) (V-E) a_{n-1} / (n+1),   a_{-1} = 0,
// starting from the identity on a0. Throws for N <= 0.
std::vector<DiffOperator> build_a_chain(const PotentialSpec& v, int n_order);

// The sign-test operator F_N = a_N' + 2 (V-E) a_{N-1}. Even N makes its
// pointwise sign independent of the wavefunction; an everywhere-positive F_N
// certifies that E is not an eigenvalue.
DiffOperator build_F_N(const PotentialSpec& v, int n_order);

// Derivative conjugated by the Gaussian weight exp(-lam x^2 / 2):
// D(P) = P' - lam x P. Iterating k times gives
// exp(lam x^2/2) d^k/dx^k [P exp(-lam x^2/2)].
MPoly gauss_derivative(const MPoly& p);

// The polynomial Q with F_2[P exp(-lam x^2/2)] = (1/2) Q exp(-lam x^2/2):
// Q = D^3 P - 8 (V-E) D P - 4 V' P. For the quartic family this reproduces
// the classical expansion coefficient by coefficient.
MPoly build_Q(const PotentialSpec& v, const MPoly& p);

// Whether the Gaussian ansatz decays fast enough relative to any bound state:
// true for deg V >= 4, false for the harmonic case.
bool check_decay_admissible(const PotentialSpec& v);

}  // namespace specgap
