#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "specgap/mpoly.hpp"

// Dense univariate integer polynomials. This is the engine behind gcds,
// square-free decomposition, Sturm counting and real-root isolation; the
// sparse MPoly layer converts down to it for anything univariate-heavy.
namespace specgap::zp {

using Z = mpz_class;
using ZPoly = std::vector<Z>;  // coefficient of t^i at index i, no trailing zeros

void trim(ZPoly& f);
inline int deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }
inline bool is_zero(const ZPoly& f) { return f.empty(); }

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly neg(ZPoly f);
ZPoly scal_mul(const ZPoly& f, const Z& c);
ZPoly derivative(const ZPoly& f);

Z content(const ZPoly& f);                  // non-negative; 0 for zero poly
ZPoly primitive_part(const ZPoly& f);       // sign of lc preserved
ZPoly primitive_positive(const ZPoly& f);   // lc > 0

// Exact division; returns false when b does not divide a over Z.
bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quot);

// r with lc(b)^(deg a - deg b + 1) * a = q*b + r; only r is returned.
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b);

Z eval_z(const ZPoly& f, const Z& t);
int sign_at(const ZPoly& f, const Rational& t);
int sign_at_inf(const ZPoly& f, bool plus);

// Primitive positive-lc gcd. Small degrees run a primitive PRS; large ones a
// CRT-verified modular gcd.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

ZPoly squarefree_part(const ZPoly& f);

// Yun decomposition of a primitive f: list of (squarefree factor, multiplicity),
// factors primitive with positive lc, pairwise coprime.
std::vector<std::pair<ZPoly, int>> yun_decompose(const ZPoly& f);

// Power-of-two B with all real roots of f strictly inside (-B, B).
Rational root_bound(const ZPoly& f);

// Sturm chain of the squarefree part; exposed for tests.
std::vector<ZPoly> sturm_chain(const ZPoly& squarefree);

// Number of distinct real roots of the squarefree sf in the open interval
// (lo, hi); endpoints may be roots (they are not counted).
int sturm_count_open(const std::vector<ZPoly>& chain, const Rational& lo, const Rational& hi);
int sturm_count_line(const std::vector<ZPoly>& chain);

// Disjoint isolating intervals for all distinct real roots of f (not
// necessarily squarefree). Exact rational roots come back as point intervals.
// Degrees above a crossover use Descartes subdivision, below it Sturm
// bisection; both are exact.
std::vector<Interval> isolate_roots(const ZPoly& f);

// Same, restricted to roots in the closed window [lo, hi].
std::vector<Interval> isolate_roots_in(const ZPoly& f, const Rational& lo, const Rational& hi);

// Forces the Descartes subdivision engine regardless of degree (the automatic
// dispatch uses it only above the Sturm crossover); used to cross-check the
// two engines against each other.
std::vector<Interval> isolate_roots_in_descartes(const ZPoly& f, const Rational& lo,
                                                 const Rational& hi);

// Shrinks an isolating bracket of f to width <= tol and returns its midpoint
// (or the exact root when one is hit). Throws "empty bracket" when the
// square-free part of f has no sign change and no root on the interval.
Rational refine_root(const ZPoly& f, const Interval& iv, const Rational& tol);

// Conversions. p = scale * result with result primitive (positive lc).
ZPoly from_univariate(const MPoly& p, Var v, Rational& scale);
MPoly to_mpoly(const ZPoly& f, Var v);

}  // namespace specgap::zp
