#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

#include "specgap/potential.hpp"

// Reference spectrum by diagonalization in a scaled harmonic-oscillator
// basis. Floating point on purpose: this module validates gap reports, it
// does not certify anything.
namespace specgap::oracle {

struct NotConverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SplittingUnresolvable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BasisConfig {
  int size = 64;        // K >= 16
  double omega = 1.0;   // basis frequency > 0
};

struct SpectrumResult {
  std::vector<double> energies;  // ascending
  int basis_size_used = 0;
  double convergence_estimate = 0;
};

// H = P^2/2 + sum_k c_k X^k in the omega-scaled oscillator basis, dense K x K,
// exactly symmetric by construction. Supports deg V <= 8.
Eigen::MatrixXd build_hamiltonian(const PotentialSpec& v, const BasisConfig& cfg);

// All eigenvalues, ascending. Throws std::invalid_argument when H deviates
// from symmetry by more than 1e-12 relative to its largest entry.
std::vector<double> eigensolve_symmetric(const Eigen::MatrixXd& h);

// Doubles the basis from K = 64 until the lowest n_levels eigenvalues move
// less than tol, optimizing the basis scale on a coarse grid first. Throws
// NotConverged beyond K = 2048. For even potentials the even/odd parity
// blocks are diagonalized separately and merged.
SpectrumResult converged_spectrum(const PotentialSpec& v, int n_levels, double tol);

// Tunnelling splitting E1 - E0 of the quartic double well, with the tolerance
// tightened to splitting/100. Requires both levels below the barrier top.
double doublet_splitting(const Rational& s, double tol);

// Root of s -> E1(s) for the quartic family (both lowest levels turn negative
// below it), located by bisection.
double find_s0();

// Semiclassical large-|s| estimate of the doublet splitting.
double splitting_asymptotic(double s);

}  // namespace specgap::oracle
