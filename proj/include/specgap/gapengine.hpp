#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specgap/potential.hpp"
#include "specgap/zpoly.hpp"

namespace specgap {

// Raised when an elimination degenerates (identically vanishing eliminant).
struct DegenerateElimination : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Odd ansatz profile P(x) = sum_{m=0}^{M} p[m] x^(2m+1) with p[0] = 1 and the
// higher coefficients solved so the 2m-th coefficients of Q vanish for m < M.
struct AnsatzFamily {
  int M = 0;
  std::vector<MPoly> p;  // polynomials in (lam, E[, s]), total degree <= index

  MPoly profile() const;  // P(x)
};

AnsatzFamily solve_p_chain(const PotentialSpec& v, int m_order);

// Closed-form recurrence for the even-power coefficients of Q in the quartic
// family; returns q_0 .. q_{M+3} for given ansatz coefficients. Used as an
// independent cross-check of the coefficients extracted from build_Q.
std::vector<MPoly> qm_recurrence(int m_order, const std::vector<MPoly>& p,
                                 const PotentialSpec& v);

// Q reduced against the solved ansatz: Q = x^(2M+2) R + q_constraint x^(2M),
// with R of degree deg V in x.
struct ReducedSystem {
  PotentialSpec potential;
  int M = 0;
  MPoly q_constraint;        // q_M(lam, E[, s])
  MPoly R;                   // R(x, lam, E[, s])
  std::vector<MPoly> q_all;  // extracted q_0 .. q_{M + deg V / 2 + 1}
};

ReducedSystem reduce_system(const PotentialSpec& v, int m_order);

// Eliminant of the constraint q and the discriminant of R (as a polynomial in
// x^2): a polynomial in E (and s when symbolic) whose real roots propose the
// gap boundaries. Content and repeated factors are removed. Quartic only.
MPoly discriminant_path(const PotentialSpec& quartic_v, int m_order);

// One isolated real root of a boundary-system eliminant.
struct CandidateRoot {
  Interval iv;
  bool suspect = false;  // came from the lc(R) branch (degree-drop events)
  int branch = 0;        // 0: fold branch {q, R, dR/dx}; 1: {q, R, dq/dlam}
  std::shared_ptr<const zp::ZPoly> eliminant;  // squarefree, for refinement
};

std::vector<CandidateRoot> eqgap_candidates(const PotentialSpec& v, int m_order);
std::vector<CandidateRoot> eqgap_candidates(const ReducedSystem& rs);

// Proof that a fixed energy is not an eigenvalue: a real root lam* of
// q(., energy) isolated by lambda_witness such that R(., lam*, energy) has no
// real root of odd multiplicity, certified by constant signs of disc(R),
// lc(R) and R(0) across the whole witness interval.
struct ExclusionCertificate {
  Rational energy;
  Interval lambda_witness{Rational(0), Rational(0)};
  Rational lambda_sample;
  int disc_sign = 0;
  int lead_sign = 0;
  int r0_sign = 0;
  bool q_identically_zero = false;
};

std::optional<ExclusionCertificate> pointwise_exclusion(const PotentialSpec& v, int m_order,
                                                        const Rational& energy);
std::optional<ExclusionCertificate> pointwise_exclusion(const ReducedSystem& rs,
                                                        const Rational& energy);

struct GapInterval {
  double lo = 0;
  double hi = 0;
  ExclusionCertificate sample;  // certificate at one interior point
};

struct GapReport {
  PotentialSpec potential;
  int M = 0;
  std::string method = "eqgap";
  std::vector<GapInterval> gaps;  // sorted, disjoint
  int certificates_sampled = 0;
};

// Certified eigenvalue-free intervals inside the window: candidate boundary
// energies partition it, every segment midpoint is tested for an exclusion
// certificate, and maximal excluded runs become gaps with boundaries refined
// to 1e-6.
GapReport compute_gaps(const PotentialSpec& v, int m_order, const Interval& window);

// Classifier in the style of the published quartic tables: a gap is a maximal
// window segment on which the eliminant of q and disc(R) is negative. A
// negative eliminant forces an odd number of real lambda-roots with negative
// disc(R), so every reported segment carries a genuine certificate; segments
// where an even number of such roots exists are left out, which makes this
// method strictly weaker than the pointwise engine but shape-faithful to the
// tables. Quartic family only.
GapReport discriminant_gaps(const PotentialSpec& quartic_v, int m_order, const Interval& window);

// Interval union of reports for the same potential, clipped below at min V.
GapReport union_gaps(const std::vector<GapReport>& reports);

}  // namespace specgap
