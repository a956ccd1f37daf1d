#include "specgap/roots.hpp"

#include <stdexcept>

#include "specgap/zpoly.hpp"

namespace specgap {

namespace {

zp::ZPoly to_zpoly_checked(const UView& f, Rational& scale) {
  if (f.is_zero()) throw std::invalid_argument("operation needs a nonzero polynomial");
  if (!f.rational_coeffs())
    throw std::invalid_argument("operation needs rational coefficients");
  return zp::from_univariate(f.to_mpoly(), f.main(), scale);
}

}  // namespace

SquarefreeDecomposition squarefree_decompose(const UView& f) {
  Rational scale;
  zp::ZPoly z = to_zpoly_checked(f, scale);
  SquarefreeDecomposition out;
  out.constant = scale;
  if (zp::deg(z) == 0) {
    out.constant *= Rational(z[0]);
    return out;
  }
  auto parts = zp::yun_decompose(z);
  zp::ZPoly check{mpz_class(1)};
  for (auto& [factor, mult] : parts) {
    out.factors.emplace_back(zp::to_mpoly(factor, f.main()), mult);
    for (int i = 0; i < mult; ++i) check = zp::mul(check, factor);
  }
  // z and the factor product are associates; fold the unit into the constant
  out.constant *= Rational(z.back()) / Rational(check.back());
  return out;
}

int count_real_roots(const UView& f, const std::optional<Interval>& window) {
  Rational scale;
  zp::ZPoly z = to_zpoly_checked(f, scale);
  if (zp::deg(z) == 0) return 0;
  zp::ZPoly sf = zp::squarefree_part(z);
  if (zp::deg(sf) == 0) return 0;
  auto chain = zp::sturm_chain(sf);
  if (!window) return zp::sturm_count_line(chain);
  return zp::sturm_count_open(chain, window->lo, window->hi);
}

bool has_odd_multiplicity_real_root(const UView& f) {
  Rational scale;
  zp::ZPoly z = to_zpoly_checked(f, scale);
  if (zp::deg(z) == 0) return false;
  auto parts = zp::yun_decompose(z);
  zp::ZPoly odd{mpz_class(1)};
  for (auto& [factor, mult] : parts)
    if (mult % 2 == 1) odd = zp::mul(odd, factor);
  if (zp::deg(odd) <= 0) return false;
  auto chain = zp::sturm_chain(odd);  // product of coprime squarefree factors stays squarefree
  return zp::sturm_count_line(chain) > 0;
}

std::vector<Interval> isolate_real_roots(const UView& f) {
  Rational scale;
  zp::ZPoly z = to_zpoly_checked(f, scale);
  if (zp::deg(z) == 0) return {};
  return zp::isolate_roots(z);
}

Rational refine_root(const UView& f, const Interval& iv, const Rational& tol) {
  Rational scale;
  zp::ZPoly z = to_zpoly_checked(f, scale);
  return zp::refine_root(z, iv, tol);
}

}  // namespace specgap
