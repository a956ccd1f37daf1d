#pragma once

#include "specgap/mpoly.hpp"

namespace specgap {

// Resultant of f and g with respect to their shared main variable: the
// determinant of the Sylvester matrix, computed exactly. Small or genuinely
// multivariate inputs go through fraction-free Bareiss elimination on the
// Sylvester matrix; large inputs whose coefficients involve a single other
// variable go through modular evaluation/interpolation with a rigorous
// coefficient bound, which reconstructs the same determinant.
// Throws std::invalid_argument when f or g is the zero polynomial.
MPoly resultant(const UView& f, const UView& g);

// (-1)^(n(n-1)/2) * resultant(f, f') / lc(f); disc(a u^2 + b u + c) = b^2 - 4ac.
// Throws for degree < 1.
MPoly discriminant(const UView& f);

// Determinant of a square MPoly matrix by fraction-free Bareiss elimination.
MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m);

// Sylvester matrix of f and g (degree f + degree g square).
std::vector<std::vector<MPoly>> sylvester_matrix(const UView& f, const UView& g);

// gcd of f and g as univariate polynomials in f.main() whose coefficients may
// involve one more variable; returned primitive with respect to coefficient
// content. Used to strip repeated factors from bivariate eliminants.
MPoly gcd_bivariate(const UView& f, const UView& g);

// f divided by its repeated factors, as a polynomial in main; coefficients may
// involve at most one other variable.
MPoly squarefree_bivariate(const UView& f);

}  // namespace specgap
