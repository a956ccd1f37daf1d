#include "specgap/resultant.hpp"

#include <optional>
#include <stdexcept>

#include "specgap/modarith.hpp"
#include "specgap/zpoly.hpp"

namespace specgap {

std::vector<std::vector<MPoly>> sylvester_matrix(const UView& f, const UView& g) {
  const int m = f.degree();
  const int n = g.degree();
  if (m < 0 || n < 0) throw std::invalid_argument("resultant of zero polynomial");
  const int size = m + n;
  std::vector<std::vector<MPoly>> s(static_cast<std::size_t>(size),
                                    std::vector<MPoly>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f.coeff(static_cast<std::size_t>(m - k));
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = g.coeff(static_cast<std::size_t>(n - k));
  return s;
}

MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly(1L);
  for (auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  int sign = 1;
  MPoly prev(1L);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // pick the sparsest nonzero pivot in column k
    std::size_t pivot = n;
    std::size_t best = 0;
    for (std::size_t i = k; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      if (pivot == n || m[i][k].term_count() < best) {
        pivot = i;
        best = m[i][k].term_count();
      }
    }
    if (pivot == n) return MPoly();  // singular
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = divide_exact(t, prev);
      }
      m[i][k] = MPoly();
    }
    prev = m[k][k];
  }
  MPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

namespace {

// integer coefficient vectors in `keep` for each power of the main variable
struct BivarInt {
  std::vector<zp::ZPoly> coeffs;
  Rational scale;
  mpz_class one_norm() const {
    mpz_class s(0);
    for (const auto& c : coeffs)
      for (const auto& z : c) s += abs(z);
    return s;
  }
};

zp::ZPoly raw_zpoly(const MPoly& p, Var keep) {
  int d = p.degree(keep);
  zp::ZPoly out(d >= 0 ? static_cast<std::size_t>(d) + 1 : 0, mpz_class(0));
  for (auto& [mono, c] : p.terms()) {
    if (c.get_den() != 1) throw std::logic_error("non-integral coefficient after scaling");
    out[mono_exp(mono, keep)] = c.get_num();
  }
  zp::trim(out);
  return out;
}

BivarInt to_bivar_int(const UView& f, Var keep) {
  BivarInt out;
  auto [prim, scale] = f.to_mpoly().primitive_scaled();
  out.scale = scale;
  out.coeffs.resize(static_cast<std::size_t>(f.degree()) + 1);
  for (int k = 0; k <= f.degree(); ++k)
    out.coeffs[static_cast<std::size_t>(k)] = raw_zpoly(prim.coeff_of(f.main(), static_cast<unsigned>(k)), keep);
  return out;
}

int max_keep_degree(const BivarInt& f) {
  int d = 0;
  for (const auto& c : f.coeffs) d = std::max(d, zp::deg(c));
  return d;
}

// exact resultant of two integer univariate polynomials by CRT
mpz_class resultant_int(const zp::ZPoly& a, const zp::ZPoly& b) {
  mpz_class na(0), nb(0);
  for (const auto& z : a) na += abs(z);
  for (const auto& z : b) nb += abs(z);
  mpz_class bound(1);
  mpz_pow_ui(bound.get_mpz_t(), na.get_mpz_t(), static_cast<unsigned long>(zp::deg(b)));
  mpz_class t(1);
  mpz_pow_ui(t.get_mpz_t(), nb.get_mpz_t(), static_cast<unsigned long>(zp::deg(a)));
  bound *= t;
  modp::PrimeGen primes;
  modp::Crt crt;
  while (crt.modulus() <= 2 * bound + 1) {
    modp::u64 p = primes.next();
    if (mpz_divisible_ui_p(a.back().get_mpz_t(), p) || mpz_divisible_ui_p(b.back().get_mpz_t(), p))
      continue;
    crt.add(modp::resultant(modp::reduce(a, p), modp::reduce(b, p), p), p);
  }
  return crt.balanced();
}

MPoly resultant_rational(const UView& f, const UView& g) {
  Rational sf, sg;
  zp::ZPoly a = zp::from_univariate(f.to_mpoly(), f.main(), sf);
  zp::ZPoly b = zp::from_univariate(g.to_mpoly(), g.main(), sg);
  mpz_class r = resultant_int(a, b);
  Rational out(r);
  out *= rat_pow(sf, static_cast<unsigned>(g.degree()));
  out *= rat_pow(sg, static_cast<unsigned>(f.degree()));
  return MPoly(out);
}

// Modular evaluation/interpolation reconstruction of the Sylvester
// determinant when coefficients live in a single extra variable.
MPoly resultant_bivar_modular(const UView& f, const UView& g, Var keep) {
  BivarInt F = to_bivar_int(f, keep);
  BivarInt G = to_bivar_int(g, keep);
  const int df = f.degree();
  const int dg = g.degree();
  const int dmax = dg * max_keep_degree(F) + df * max_keep_degree(G);

  mpz_class bound(1), t(1);
  mpz_class nf = F.one_norm(), ng = G.one_norm();
  mpz_pow_ui(bound.get_mpz_t(), nf.get_mpz_t(), static_cast<unsigned long>(dg));
  mpz_pow_ui(t.get_mpz_t(), ng.get_mpz_t(), static_cast<unsigned long>(df));
  bound *= t;

  modp::PrimeGen primes;
  std::vector<modp::Crt> crt(static_cast<std::size_t>(dmax) + 1);
  mpz_class modulus(1);
  while (modulus <= 2 * bound + 1) {
    modp::u64 p = primes.next();
    std::vector<modp::Poly> fc(F.coeffs.size()), gc(G.coeffs.size());
    for (std::size_t i = 0; i < F.coeffs.size(); ++i) fc[i] = modp::reduce(F.coeffs[i], p);
    for (std::size_t i = 0; i < G.coeffs.size(); ++i) gc[i] = modp::reduce(G.coeffs[i], p);
    if (fc.back().empty() || gc.back().empty()) continue;  // leading coeff died mod p

    std::vector<modp::u64> xs, ys;
    xs.reserve(static_cast<std::size_t>(dmax) + 1);
    for (modp::u64 pt = 0; static_cast<int>(xs.size()) <= dmax; ++pt) {
      if (pt >= p) throw std::runtime_error("ran out of evaluation points");
      if (modp::eval(fc.back(), pt, p) == 0 || modp::eval(gc.back(), pt, p) == 0) continue;
      modp::Poly fv(fc.size()), gv(gc.size());
      for (std::size_t i = 0; i < fc.size(); ++i) fv[i] = modp::eval(fc[i], pt, p);
      for (std::size_t i = 0; i < gc.size(); ++i) gv[i] = modp::eval(gc[i], pt, p);
      modp::trim(fv);
      modp::trim(gv);
      xs.push_back(pt);
      ys.push_back(modp::resultant(fv, gv, p));
    }
    modp::Poly res_p = modp::interpolate(xs, ys, p);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(dmax); ++i)
      crt[i].add(i < res_p.size() ? res_p[i] : 0, p);
    modulus *= mpz_class(static_cast<unsigned long>(p));
  }

  zp::ZPoly out(static_cast<std::size_t>(dmax) + 1);
  for (std::size_t i = 0; i <= static_cast<std::size_t>(dmax); ++i) out[i] = crt[i].balanced();
  zp::trim(out);
  MPoly result = zp::to_mpoly(out, keep);
  Rational scale = rat_pow(F.scale, static_cast<unsigned>(dg)) * rat_pow(G.scale, static_cast<unsigned>(df));
  return scale * result;
}

std::optional<Var> single_coefficient_var(const UView& f, const UView& g) {
  std::optional<Var> found;
  for (const UView* u : {&f, &g}) {
    for (const MPoly& c : u->coeffs()) {
      for (Var v : c.variables()) {
        if (found && *found != v) return std::nullopt;
        found = v;
      }
    }
  }
  return found;
}

}  // namespace

MPoly resultant(const UView& f, const UView& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
  if (f.main() != g.main()) throw std::invalid_argument("resultant: main variable mismatch");
  const int df = f.degree();
  const int dg = g.degree();
  if (df == 0 && dg == 0) return MPoly(1L);
  if (df == 0) return f.lc().pow(dg);
  if (dg == 0) return g.lc().pow(df);

  if (f.rational_coeffs() && g.rational_coeffs()) return resultant_rational(f, g);

  std::optional<Var> keep = single_coefficient_var(f, g);
  if (keep && df + dg > 14) return resultant_bivar_modular(f, g, *keep);
  return bareiss_determinant(sylvester_matrix(f, g));
}

MPoly discriminant(const UView& f) {
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("discriminant needs degree >= 1");
  MPoly r = resultant(f, f.derivative());
  MPoly d = divide_exact(r, f.lc());
  if ((static_cast<unsigned>(n) * static_cast<unsigned>(n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

namespace {

// content of the coefficient list as a polynomial in the (single) coefficient
// variable; constant 1-ish content comes back as a constant MPoly
MPoly coefficient_content(const UView& f, Var w) {
  zp::ZPoly acc;
  Rational scale_acc(0);
  for (const MPoly& c : f.coeffs()) {
    if (c.is_zero()) continue;
    Rational sc;
    zp::ZPoly z = zp::from_univariate(c, w, sc);
    acc = zp::gcd(acc, z);
    // rational contents combine by gcd of numerators over lcm of denominators
    if (scale_acc == 0)
      scale_acc = rat_abs(sc);
    else {
      mpz_class gn, dl;
      mpz_gcd(gn.get_mpz_t(), scale_acc.get_num().get_mpz_t(), sc.get_num().get_mpz_t());
      mpz_lcm(dl.get_mpz_t(), scale_acc.get_den().get_mpz_t(), sc.get_den().get_mpz_t());
      scale_acc = Rational(gn, dl);
      scale_acc.canonicalize();
    }
  }
  if (acc.empty()) throw std::domain_error("content of zero polynomial");
  return scale_acc * zp::to_mpoly(acc, w);
}

UView primitive_uview(const UView& f, Var w) {
  MPoly cont = coefficient_content(f, w);
  std::vector<MPoly> out;
  out.reserve(f.coeffs().size());
  for (const MPoly& c : f.coeffs()) out.push_back(c.is_zero() ? MPoly() : divide_exact(c, cont));
  return UView::from_coeffs(f.main(), std::move(out));
}

UView pseudo_rem_uview(const UView& a, const UView& b) {
  std::vector<MPoly> r = a.coeffs();
  auto degree_of = [](const std::vector<MPoly>& c) {
    int d = static_cast<int>(c.size()) - 1;
    while (d >= 0 && c[static_cast<std::size_t>(d)].is_zero()) --d;
    return d;
  };
  const int db = b.degree();
  const MPoly& lb = b.lc();
  int dr = degree_of(r);
  while (dr >= db && dr >= 0) {
    MPoly lr = r[static_cast<std::size_t>(dr)];
    for (int i = 0; i <= dr; ++i) r[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)] * lb;
    const int shift = dr - db;
    for (int i = 0; i <= db; ++i)
      r[static_cast<std::size_t>(shift + i)] -= lr * b.coeff(static_cast<std::size_t>(i));
    int nd = degree_of(r);
    if (nd >= dr) throw std::logic_error("pseudo-division failed to reduce degree");
    dr = nd;
  }
  r.resize(dr >= 0 ? static_cast<std::size_t>(dr) + 1 : 0);
  return UView::from_coeffs(a.main(), std::move(r));
}

Var pick_coefficient_var(const UView& f, const UView& g) {
  std::optional<Var> v = single_coefficient_var(f, g);
  if (v) return *v;
  // pure rational coefficients: any unused variable serves as the formal one
  return f.main() == Var::s ? Var::E : Var::s;
}

}  // namespace

MPoly gcd_bivariate(const UView& f, const UView& g) {
  if (f.is_zero()) return g.to_mpoly();
  if (g.is_zero()) return f.to_mpoly();
  if (f.main() != g.main()) throw std::invalid_argument("gcd: main variable mismatch");
  if (!single_coefficient_var(f, g) && !(f.rational_coeffs() && g.rational_coeffs()))
    throw std::invalid_argument("gcd_bivariate: coefficients involve several variables");
  Var w = pick_coefficient_var(f, g);

  UView a = primitive_uview(f, w);
  UView b = primitive_uview(g, w);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero() && b.degree() >= 0) {
    UView r = pseudo_rem_uview(a, b);
    a = b;
    if (r.is_zero()) {
      b = r;
      break;
    }
    b = primitive_uview(r, w);
  }
  if (!b.is_zero()) return MPoly(1L);  // remainder chain ended at a nonzero constant-degree poly
  MPoly out = a.to_mpoly();
  auto [prim, scale] = out.primitive_scaled();
  return prim;
}

MPoly squarefree_bivariate(const UView& f) {
  if (f.is_zero()) throw std::invalid_argument("square-free part of zero polynomial");
  if (f.degree() == 0) return MPoly(1L);
  MPoly g = gcd_bivariate(f, f.derivative());
  if (g.degree(f.main()) <= 0) {
    auto [prim, scale] = f.to_mpoly().primitive_scaled();
    return prim;
  }
  MPoly quot = divide_exact(f.to_mpoly(), g);
  auto [prim, scale] = quot.primitive_scaled();
  return prim;
}

}  // namespace specgap
