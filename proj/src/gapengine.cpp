#include "specgap/gapengine.hpp"

#include <algorithm>
#include <map>

#include "specgap/hierarchy.hpp"
#include "specgap/resultant.hpp"
#include "specgap/roots.hpp"

namespace specgap {

namespace {

const MPoly kLam = MPoly::variable(Var::lam);
const MPoly kE = MPoly::variable(Var::E);

MPoly x_power(unsigned k) { return MPoly::variable(Var::x, k); }

}  // namespace

MPoly AnsatzFamily::profile() const {
  MPoly out;
  for (std::size_t m = 0; m < p.size(); ++m)
    out += p[m] * x_power(2 * static_cast<unsigned>(m) + 1);
  return out;
}

AnsatzFamily solve_p_chain(const PotentialSpec& v, int m_order) {
  if (m_order < 0) throw std::invalid_argument("ansatz order must be non-negative");
  AnsatzFamily fam;
  fam.M = m_order;
  fam.p.push_back(MPoly(1L));
  MPoly profile = x_power(1);
  for (int m = 0; m < m_order; ++m) {
    // only p_{m+1} (through P''') reaches the x^{2m} coefficient beyond the
    // part built so far, with the fixed integer factor below
    MPoly q_m = build_Q(v, profile).coeff_of(Var::x, 2 * static_cast<unsigned>(m));
    long factor = static_cast<long>(2 * m + 3) * (2 * m + 2) * (2 * m + 1);
    MPoly p_next = make_rational(-1, factor) * q_m;
    if (p_next.total_degree({Var::lam, Var::E}) > m + 1)
      throw std::logic_error("ansatz coefficient degree bound violated");
    profile += p_next * x_power(2 * static_cast<unsigned>(m + 1) + 1);
    fam.p.push_back(std::move(p_next));
  }
  return fam;
}

std::vector<MPoly> qm_recurrence(int m_order, const std::vector<MPoly>& p,
                                 const PotentialSpec& v) {
  if (!v.is_quartic_family())
    throw std::invalid_argument("closed-form recurrence applies to the quartic family only");
  const MPoly s_poly = v.symbolic_s() ? MPoly::variable(Var::s) : MPoly(v.s_value());
  auto p_at = [&](int i) -> MPoly {
    if (i < 0 || i > m_order) return MPoly();
    return i < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i)] : MPoly();
  };
  std::vector<MPoly> q;
  for (int m = 0; m <= m_order + 3; ++m) {
    const long c3 = static_cast<long>(2 * m + 3) * (2 * m + 2) * (2 * m + 1);
    MPoly qm = Rational(c3) * p_at(m + 1);
    qm -= Rational(2 * m + 1) * (Rational(3 * (2 * m + 1)) * kLam - Rational(8) * kE) * p_at(m);
    qm += (Rational(2 * m) * (Rational(3) * kLam * kLam - Rational(4) * s_poly) -
           Rational(8) * kE * kLam) *
          p_at(m - 1);
    qm -= (kLam.pow(3) - Rational(4) * s_poly * kLam + MPoly(Rational(4 * m - 2))) * p_at(m - 2);
    qm += Rational(2) * kLam * p_at(m - 3);
    q.push_back(std::move(qm));
  }
  return q;
}

ReducedSystem reduce_system(const PotentialSpec& v, int m_order) {
  if (!v.is_even() || v.degree() < 4)
    throw std::invalid_argument("reduction needs an even potential of degree >= 4");
  ReducedSystem rs;
  rs.potential = v;
  rs.M = m_order;
  AnsatzFamily fam = solve_p_chain(v, m_order);
  const MPoly big_q = build_Q(v, fam.profile());
  const int half_deg = v.degree() / 2;

  for (int m = 0; m <= m_order + half_deg + 1; ++m)
    rs.q_all.push_back(big_q.coeff_of(Var::x, 2 * static_cast<unsigned>(m)));
  for (int m = 0; m < m_order; ++m)
    if (!rs.q_all[static_cast<std::size_t>(m)].is_zero())
      throw std::logic_error("ansatz chain failed to cancel a low coefficient");
  rs.q_constraint = rs.q_all[static_cast<std::size_t>(m_order)];
  if (rs.q_constraint.total_degree({Var::lam, Var::E}) > m_order + 1)
    throw std::logic_error("constraint degree bound violated");

  for (int j = 0; j <= half_deg; ++j)
    rs.R += rs.q_all[static_cast<std::size_t>(m_order + 1 + j)] * x_power(2 * static_cast<unsigned>(j));
  if (rs.R.degree(Var::x) != v.degree())
    throw std::logic_error("reduced polynomial has the wrong degree");

  MPoly recomposed = x_power(2 * static_cast<unsigned>(m_order) + 2) * rs.R +
                     rs.q_constraint * x_power(2 * static_cast<unsigned>(m_order));
  if (recomposed != big_q) throw std::logic_error("reduction identity failed");

  if (v.is_quartic_family()) {
    auto closed = qm_recurrence(m_order, fam.p, v);
    for (std::size_t m = 0; m < closed.size(); ++m)
      if (closed[m] != rs.q_all[m])
        throw std::logic_error("closed-form coefficient recurrence disagrees with the expansion");
  }
  return rs;
}

namespace {

// R as a polynomial in u = x^2, with coefficients in (lam, E[, s]). The main
// variable slot is reused for u.
UView u_view(const ReducedSystem& rs) {
  const int half_deg = rs.potential.degree() / 2;
  std::vector<MPoly> coeffs;
  for (int j = 0; j <= half_deg; ++j)
    coeffs.push_back(rs.R.coeff_of(Var::x, 2 * static_cast<unsigned>(j)));
  return UView::from_coeffs(Var::x, std::move(coeffs));
}

MPoly eliminate_lambda(const MPoly& q, const MPoly& w) {
  return resultant(UView(Var::lam, q), UView(Var::lam, w));
}

}  // namespace

MPoly discriminant_path(const PotentialSpec& quartic_v, int m_order) {
  if (!quartic_v.is_quartic_family())
    throw std::invalid_argument("discriminant path applies to the quartic family only");
  ReducedSystem rs = reduce_system(quartic_v, m_order);
  MPoly disc = discriminant(u_view(rs));
  MPoly delta = eliminate_lambda(rs.q_constraint, disc);
  if (delta.is_zero()) throw DegenerateElimination("degenerate elimination");
  auto [prim, scale] = delta.primitive_scaled();
  if (prim.is_constant()) return prim;
  if (quartic_v.symbolic_s()) return squarefree_bivariate(UView(Var::E, prim));
  Rational sc;
  zp::ZPoly z = zp::from_univariate(prim, Var::E, sc);
  return zp::to_mpoly(zp::squarefree_part(z), Var::E);
}

std::vector<CandidateRoot> eqgap_candidates(const ReducedSystem& rs) {
  if (rs.potential.symbolic_s())
    throw std::invalid_argument("boundary candidates need a numeric potential");
  const UView ru = u_view(rs);
  const MPoly disc = discriminant(ru);

  struct BranchPoly {
    MPoly w;
    bool suspect;
    int branch;
  };
  std::vector<BranchPoly> branch_polys{
      {disc, false, 0},
      {ru.coeff(0), false, 0},                             // root of R crossing x = 0
      {ru.lc(), true, 0},                                  // degree drop of R
      {rs.q_constraint.derivative(Var::lam), false, 1},
  };

  std::vector<CandidateRoot> out;
  for (const auto& bp : branch_polys) {
    if (bp.w.is_zero()) throw DegenerateElimination("degenerate branch; perturb s");
    if (bp.w.is_constant()) continue;  // never vanishes
    MPoly elim;
    if (bp.w.degree(Var::lam) <= 0) {
      elim = bp.w;  // lambda-free factor: its energy roots are the candidates
    } else {
      elim = eliminate_lambda(rs.q_constraint, bp.w);
      if (elim.is_zero()) {
        // repeated lambda-factor in the constraint; strip it and retry once
        MPoly q_sf = squarefree_bivariate(UView(Var::lam, rs.q_constraint));
        elim = eliminate_lambda(q_sf, bp.w);
        if (elim.is_zero()) throw DegenerateElimination("degenerate branch; perturb s");
      }
    }
    if (elim.is_constant()) continue;
    Rational sc;
    zp::ZPoly z = zp::from_univariate(elim, Var::E, sc);
    auto sf = std::make_shared<const zp::ZPoly>(zp::squarefree_part(z));
    Rational bound = zp::root_bound(*sf);
    for (Interval& iv : zp::isolate_roots_in(*sf, -bound, bound))
      out.push_back({iv, bp.suspect, bp.branch, sf});
  }
  return out;
}

std::vector<CandidateRoot> eqgap_candidates(const PotentialSpec& v, int m_order) {
  return eqgap_candidates(reduce_system(v, m_order));
}

namespace {

struct LambdaSlice {
  zp::ZPoly disc;  // disc of R in u at fixed energy, as a sign-faithful poly in lam
  zp::ZPoly lead;
  zp::ZPoly r0;
  std::vector<MPoly> f_coeffs;  // exact u-coefficients of R, polynomials in lam
};

// primitive integer image that keeps the sign of the original polynomial
zp::ZPoly lam_zpoly(const MPoly& p) {
  Rational sc;
  zp::ZPoly z = zp::from_univariate(p, Var::lam, sc);
  if (sc < 0)
    for (auto& c : z) c = -c;
  return z;
}

LambdaSlice slice_at_energy(const ReducedSystem& rs, const Rational& energy) {
  LambdaSlice s;
  const int half_deg = rs.potential.degree() / 2;
  std::vector<MPoly> coeffs;
  for (int j = 0; j <= half_deg; ++j)
    coeffs.push_back(rs.R.coeff_of(Var::x, 2 * static_cast<unsigned>(j)).eval({{Var::E, energy}}));
  UView fu = UView::from_coeffs(Var::x, coeffs);
  if (fu.degree() != half_deg) throw std::logic_error("R degenerated at a rational energy");
  s.disc = lam_zpoly(discriminant(fu));
  s.lead = lam_zpoly(coeffs[static_cast<std::size_t>(half_deg)]);
  s.r0 = lam_zpoly(coeffs[0]);
  s.f_coeffs = std::move(coeffs);
  return s;
}

// R in the variable u = x^2 at a fixed rational lam, denominators cleared;
// the relative normalization of the coefficients is exact
zp::ZPoly u_poly_at(const LambdaSlice& s, const Rational& lam) {
  std::vector<Rational> vals;
  for (auto& c : s.f_coeffs) {
    MPoly at = c.eval({{Var::lam, lam}});
    vals.push_back(at.is_zero() ? Rational(0) : at.constant_value());
  }
  mpz_class den_lcm(1);
  for (auto& v : vals) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  zp::ZPoly fz(vals.size());
  for (std::size_t j = 0; j < vals.size(); ++j)
    fz[j] = vals[j].get_num() * (den_lcm / vals[j].get_den());
  zp::trim(fz);
  return fz;
}

// distinct positive real roots of R(., lam) in u at a fixed rational lam
int positive_u_roots(const LambdaSlice& s, const Rational& lam) {
  zp::ZPoly fz = u_poly_at(s, lam);
  if (fz.empty()) return -1;  // identically zero slice
  if (zp::deg(fz) == 0) return 0;
  auto chain = zp::sturm_chain(zp::squarefree_part(fz));
  return zp::sturm_count_open(chain, Rational(0), zp::root_bound(fz));
}

// positive u-roots of odd multiplicity; exact at any rational lam
int positive_odd_multiplicity_u_roots(const LambdaSlice& s, const Rational& lam) {
  zp::ZPoly fz = u_poly_at(s, lam);
  if (fz.empty()) return -1;
  if (zp::deg(fz) == 0) return 0;
  zp::ZPoly odd{mpz_class(1)};
  for (auto& [factor, mult] : zp::yun_decompose(fz))
    if (mult % 2 == 1) odd = zp::mul(odd, factor);
  if (zp::deg(odd) <= 0) return 0;
  auto chain = zp::sturm_chain(odd);
  return zp::sturm_count_open(chain, Rational(0), zp::root_bound(odd));
}

bool sign_constant_on(const zp::ZPoly& w, const Rational& lo, const Rational& hi, int& sign_out) {
  if (w.empty()) return false;
  if (zp::deg(w) == 0) {
    sign_out = sgn(w[0]);
    return sign_out != 0;
  }
  int slo = zp::sign_at(w, lo);
  int shi = zp::sign_at(w, hi);
  if (slo == 0 || shi == 0 || slo != shi) return false;
  auto chain = zp::sturm_chain(zp::squarefree_part(w));
  if (zp::sturm_count_open(chain, lo, hi) != 0) return false;
  sign_out = slo;
  return true;
}

// At a rational witness the multiplicity structure is fully computable, so the
// exact odd-multiplicity criterion applies directly.
std::optional<ExclusionCertificate> certificate_from_rational_lambda(
    const LambdaSlice& s, const Rational& energy, const Rational& lam, bool q_vanished) {
  if (positive_odd_multiplicity_u_roots(s, lam) != 0) return std::nullopt;
  ExclusionCertificate cert;
  cert.energy = energy;
  cert.lambda_witness = Interval(lam, lam);
  cert.lambda_sample = lam;
  cert.disc_sign = zp::sign_at(s.disc, lam);
  cert.lead_sign = zp::sign_at(s.lead, lam);
  cert.r0_sign = zp::sign_at(s.r0, lam);
  cert.q_identically_zero = q_vanished;
  return cert;
}

}  // namespace

std::optional<ExclusionCertificate> pointwise_exclusion(const ReducedSystem& rs,
                                                        const Rational& energy) {
  if (!check_decay_admissible(rs.potential)) return std::nullopt;
  if (rs.potential.symbolic_s())
    throw std::invalid_argument("exclusion certificates need a numeric potential");
  const LambdaSlice s = slice_at_energy(rs, energy);

  const MPoly q_at = rs.q_constraint.eval({{Var::E, energy}});
  if (q_at.is_zero()) {
    // no constraint on lam at this energy: any rational lam qualifies
    for (long num : {0L, 1L, -1L, 2L, -2L, 4L, -4L}) {
      auto cert = certificate_from_rational_lambda(s, energy, make_rational(num, 2), true);
      if (cert) return cert;
    }
    return std::nullopt;
  }

  zp::ZPoly qz = lam_zpoly(q_at);
  zp::ZPoly qsf = zp::squarefree_part(qz);
  if (zp::deg(qsf) == 0) return std::nullopt;  // constant nonzero: no admissible lam

  for (const Interval& iv : zp::isolate_roots(qsf)) {
    if (iv.is_point()) {
      auto cert = certificate_from_rational_lambda(s, energy, iv.lo, false);
      if (cert) {
        // the witness root is the exact rational lambda
        return cert;
      }
      continue;
    }
    // skip witness roots at which a control polynomial vanishes exactly;
    // those energies sit on the candidate set itself
    bool shared_root = false;
    for (const zp::ZPoly* w : {&s.disc, &s.lead, &s.r0}) {
      if (zp::deg(*w) <= 0) {
        if (w->empty() || (*w)[0] == 0) shared_root = true;
        continue;
      }
      zp::ZPoly g = zp::gcd(qsf, *w);
      if (zp::deg(g) > 0) {
        auto chain = zp::sturm_chain(g);
        if (zp::sturm_count_open(chain, iv.lo, iv.hi) > 0 || zp::sign_at(g, iv.lo) == 0 ||
            zp::sign_at(g, iv.hi) == 0)
          shared_root = true;
      }
      if (shared_root) break;
    }
    if (shared_root) continue;

    Rational lo = iv.lo, hi = iv.hi;
    int slo = zp::sign_at(qsf, lo);
    int dsign = 0, lsign = 0, rsign = 0;
    bool stable = false;
    for (int round = 0; round < 256; ++round) {
      if (sign_constant_on(s.disc, lo, hi, dsign) && sign_constant_on(s.lead, lo, hi, lsign) &&
          sign_constant_on(s.r0, lo, hi, rsign)) {
        stable = true;
        break;
      }
      Rational mid = (lo + hi) / 2;
      int sm = zp::sign_at(qsf, mid);
      if (sm == 0) {
        lo = hi = mid;
        break;
      }
      if (sm == slo)
        lo = mid;
      else
        hi = mid;
    }
    if (lo == hi) {
      auto cert = certificate_from_rational_lambda(s, energy, lo, false);
      if (cert) return cert;
      continue;
    }
    if (!stable) continue;

    Rational sample = (lo + hi) / 2;
    if (positive_u_roots(s, sample) != 0) continue;
    ExclusionCertificate cert;
    cert.energy = energy;
    cert.lambda_witness = Interval(lo, hi);
    cert.lambda_sample = sample;
    cert.disc_sign = dsign;
    cert.lead_sign = lsign;
    cert.r0_sign = rsign;
    cert.q_identically_zero = false;
    return cert;
  }
  return std::nullopt;
}

std::optional<ExclusionCertificate> pointwise_exclusion(const PotentialSpec& v, int m_order,
                                                        const Rational& energy) {
  return pointwise_exclusion(reduce_system(v, m_order), energy);
}

namespace {

constexpr double kBoundaryTol = 1e-6;

Rational refine_candidate(const CandidateRoot& c, const Rational& tol) {
  return zp::refine_root(*c.eliminant, c.iv, tol);
}

}  // namespace

GapReport compute_gaps(const PotentialSpec& v, int m_order, const Interval& window) {
  ReducedSystem rs = reduce_system(v, m_order);
  GapReport report;
  report.potential = v;
  report.M = m_order;
  report.method = "eqgap";

  const Rational refine_tol(1, 1L << 27);  // well under the 1e-6 boundary tolerance
  std::vector<Rational> cuts;
  for (const CandidateRoot& c : eqgap_candidates(rs)) {
    if (c.iv.hi < window.lo || c.iv.lo > window.hi) continue;
    cuts.push_back(refine_candidate(c, refine_tol));
  }
  std::sort(cuts.begin(), cuts.end());
  // merge candidates from different branches that describe one boundary
  const Rational merge_eps(1, 10000000);
  std::vector<Rational> merged;
  for (const Rational& c : cuts) {
    if (merged.empty() || c - merged.back() > merge_eps)
      merged.push_back(c);
  }
  // keep only cuts strictly inside the window
  std::vector<Rational> points{window.lo};
  for (const Rational& c : merged)
    if (c > window.lo && c < window.hi) points.push_back(c);
  points.push_back(window.hi);

  std::vector<std::optional<ExclusionCertificate>> seg(points.size() - 1);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    seg[i] = pointwise_exclusion(rs, simple_rational_inside(points[i], points[i + 1]));
    if (seg[i]) ++report.certificates_sampled;
  }

  for (std::size_t i = 0; i + 1 < points.size();) {
    if (!seg[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < seg.size() && seg[j + 1]) ++j;
    GapInterval gap;
    gap.lo = rat_to_double(points[i]);
    gap.hi = rat_to_double(points[j + 1]);
    gap.sample = *seg[(i + j) / 2];
    report.gaps.push_back(std::move(gap));
    i = j + 1;
  }
  return report;
}

GapReport discriminant_gaps(const PotentialSpec& quartic_v, int m_order, const Interval& window) {
  if (!quartic_v.is_quartic_family() || quartic_v.symbolic_s())
    throw std::invalid_argument("table classifier needs a numeric quartic potential");
  ReducedSystem rs = reduce_system(quartic_v, m_order);
  GapReport report;
  report.potential = quartic_v;
  report.M = m_order;
  report.method = "discriminant";

  MPoly raw = eliminate_lambda(rs.q_constraint, discriminant(u_view(rs)));
  if (raw.is_zero()) throw DegenerateElimination("degenerate elimination");
  Rational scale;
  zp::ZPoly prim = zp::from_univariate(raw, Var::E, scale);
  const int scale_sign = sign_of(scale);
  auto sign_between = [&](const Rational& a, const Rational& b) {
    return scale_sign * zp::sign_at(prim, simple_rational_inside(a, b));
  };

  const Rational refine_tol(1, 1L << 27);
  std::vector<Rational> points{window.lo};
  for (const Interval& iv : zp::isolate_roots_in(prim, window.lo, window.hi)) {
    Rational r = zp::refine_root(prim, iv, refine_tol);
    if (r > window.lo && r < window.hi) points.push_back(r);
  }
  points.push_back(window.hi);

  for (std::size_t i = 0; i + 1 < points.size();) {
    if (sign_between(points[i], points[i + 1]) >= 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < points.size() - 1 && sign_between(points[j + 1], points[j + 2]) < 0) ++j;
    GapInterval gap;
    gap.lo = rat_to_double(points[i]);
    gap.hi = rat_to_double(points[j + 1]);
    auto cert = pointwise_exclusion(rs, simple_rational_inside(points[i], points[j + 1]));
    if (!cert) throw std::logic_error("negative eliminant segment without a certificate");
    gap.sample = *cert;
    ++report.certificates_sampled;
    report.gaps.push_back(std::move(gap));
    i = j + 1;
  }
  return report;
}

GapReport union_gaps(const std::vector<GapReport>& reports) {
  if (reports.empty()) throw std::invalid_argument("union of no reports");
  GapReport out;
  out.potential = reports.front().potential;
  out.method = reports.front().method;
  out.M = reports.front().M;
  for (const GapReport& r : reports) {
    if (!(r.potential == out.potential))
      throw std::invalid_argument("union of reports for different potentials");
    out.M = std::max(out.M, r.M);
    out.certificates_sampled += r.certificates_sampled;
  }
  const double floor_v = rat_to_double(out.potential.min_value_lower_bound(Rational(1, 1000000000)));
  std::vector<GapInterval> all;
  for (const GapReport& r : reports)
    for (const GapInterval& g : r.gaps) {
      if (g.hi <= floor_v) continue;  // below the trivial bound min V
      GapInterval t = g;
      t.lo = std::max(t.lo, floor_v);
      all.push_back(t);
    }
  std::sort(all.begin(), all.end(),
            [](const GapInterval& a, const GapInterval& b) { return a.lo < b.lo; });
  for (const GapInterval& g : all) {
    if (!out.gaps.empty() && g.lo <= out.gaps.back().hi) {
      out.gaps.back().hi = std::max(out.gaps.back().hi, g.hi);
    } else {
      out.gaps.push_back(g);
    }
  }
  return out;
}

}  // namespace specgap
