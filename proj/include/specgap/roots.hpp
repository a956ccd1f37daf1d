#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "specgap/mpoly.hpp"

// Real-root machinery for univariate polynomials with rational coefficients.
namespace specgap {

struct SquarefreeDecomposition {
  Rational constant;                           // f = constant * prod factor^mult
  std::vector<std::pair<MPoly, int>> factors;  // primitive, positive lc, pairwise coprime
};

SquarefreeDecomposition squarefree_decompose(const UView& f);

// Distinct real roots in the open window (or the whole line), via Sturm
// sign-variation counts on the square-free part.
int count_real_roots(const UView& f, const std::optional<Interval>& window = std::nullopt);

// True iff some real root of f has odd multiplicity, i.e. the product of the
// odd-multiplicity square-free factors has a real root.
bool has_odd_multiplicity_real_root(const UView& f);

// Disjoint rational intervals, one distinct real root each, covering all real
// roots. Exact rational roots come back as point intervals.
std::vector<Interval> isolate_real_roots(const UView& f);

// Shrinks an isolating bracket to width <= tol by bisection on the sign of the
// square-free part; returns the midpoint (or an exact root). Throws
// std::domain_error("empty bracket") if the interval contains no root.
Rational refine_root(const UView& f, const Interval& iv, const Rational& tol);

}  // namespace specgap
