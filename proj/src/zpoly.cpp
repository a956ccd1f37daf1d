#include "specgap/zpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "specgap/modarith.hpp"

namespace specgap::zp {

namespace {
constexpr int kSturmIsolationMaxDegree = 48;
constexpr int kPrsGcdMaxDegree = 56;
}  // namespace

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()), Z(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()), Z(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Z(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

ZPoly neg(ZPoly f) {
  for (Z& c : f) c = -c;
  return f;
}

ZPoly scal_mul(const ZPoly& f, const Z& c) {
  if (c == 0) return {};
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * c;
  return out;
}

ZPoly derivative(const ZPoly& f) {
  if (f.size() <= 1) return {};
  ZPoly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * static_cast<long>(i);
  trim(out);
  return out;
}

Z content(const ZPoly& f) {
  Z g(0);
  for (const Z& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.empty()) return {};
  Z g = content(f);
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] / g;
  return out;
}

ZPoly primitive_positive(const ZPoly& f) {
  ZPoly out = primitive_part(f);
  if (!out.empty() && out.back() < 0)
    for (Z& c : out) c = -c;
  return out;
}

bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quot) {
  quot.clear();
  if (b.empty()) return false;
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  ZPoly r = a;
  quot.assign(a.size() - b.size() + 1, Z(0));
  const Z& lb = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    Z q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), lb.get_mpz_t());
    if (rem != 0) return false;
    std::size_t shift = r.size() - b.size();
    quot[shift] = q;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= q * b[i];
    trim(r);
  }
  return r.empty();
}

ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("pseudo-division by zero polynomial");
  ZPoly r = a;
  trim(r);
  if (r.size() < b.size()) return r;
  const Z& lb = b.back();
  int steps = static_cast<int>(r.size() - b.size()) + 1;
  while (!r.empty() && r.size() >= b.size()) {
    Z lr = r.back();
    std::size_t shift = r.size() - b.size();
    for (Z& c : r) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= lr * b[i];
    trim(r);
    --steps;
  }
  // keep the full lc(b)^(delta+1) normalization so callers know the multiplier
  while (steps-- > 0)
    for (Z& c : r) c *= lb;
  return r;
}

Z eval_z(const ZPoly& f, const Z& t) {
  Z acc(0);
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * t + f[i];
  return acc;
}

int sign_at(const ZPoly& f, const Rational& t) {
  if (f.empty()) return 0;
  const Z n = t.get_num();
  const Z d = t.get_den();
  Z acc = f.back();
  Z dpow(1);
  for (std::size_t i = f.size() - 1; i-- > 0;) {
    dpow *= d;
    acc = acc * n + f[i] * dpow;
  }
  return sgn(acc);
}

int sign_at_inf(const ZPoly& f, bool plus) {
  if (f.empty()) return 0;
  int s = sgn(f.back());
  if (!plus && (deg(f) & 1)) s = -s;
  return s;
}

namespace {

ZPoly gcd_prs(ZPoly a, ZPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  if (!a.empty() && a.back() < 0)
    for (Z& c : a) c = -c;
  return a;
}

ZPoly gcd_modular(const ZPoly& a, const ZPoly& b) {
  ZPoly pa = primitive_part(a);
  ZPoly pb = primitive_part(b);
  Z gamma;
  mpz_gcd(gamma.get_mpz_t(), pa.back().get_mpz_t(), pb.back().get_mpz_t());

  modp::PrimeGen primes;
  int best_deg = std::min(deg(pa), deg(pb)) + 1;
  std::vector<modp::Crt> crt;
  // generous iteration cap; the exact-division check certifies the answer
  for (int iter = 0; iter < 4096; ++iter) {
    modp::u64 p = primes.next();
    if (mpz_divisible_ui_p(pa.back().get_mpz_t(), p) || mpz_divisible_ui_p(pb.back().get_mpz_t(), p))
      continue;
    modp::Poly ga = modp::gcd_monic(modp::reduce(pa, p), modp::reduce(pb, p), p);
    int d = modp::deg(ga);
    if (d == 0) return {Z(1)};
    if (d > best_deg) continue;  // unlucky prime
    if (d < best_deg) {
      best_deg = d;
      crt.assign(static_cast<std::size_t>(d) + 1, modp::Crt());
    }
    mpz_class gm = gamma % mpz_class(static_cast<unsigned long>(p));
    if (gm < 0) gm += static_cast<unsigned long>(p);
    for (int i = 0; i <= d; ++i)
      crt[static_cast<std::size_t>(i)].add(modp::mulmod(ga[static_cast<std::size_t>(i)], gm.get_ui(), p), p);
    ZPoly cand(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) cand[static_cast<std::size_t>(i)] = crt[static_cast<std::size_t>(i)].balanced();
    trim(cand);
    if (deg(cand) != best_deg) continue;
    cand = primitive_positive(cand);
    ZPoly q;
    if (divide_exact(pa, cand, q) && divide_exact(pb, cand, q)) return cand;
  }
  throw std::runtime_error("modular gcd did not stabilize");
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return primitive_positive(b);
  if (b.empty()) return primitive_positive(a);
  if (deg(a) <= kPrsGcdMaxDegree && deg(b) <= kPrsGcdMaxDegree) return gcd_prs(a, b);
  return gcd_modular(a, b);
}

ZPoly squarefree_part(const ZPoly& f) {
  if (f.empty()) throw std::domain_error("square-free part of zero polynomial");
  ZPoly pf = primitive_positive(f);
  if (deg(pf) == 0) return {Z(1)};
  ZPoly g = gcd(pf, derivative(pf));
  if (deg(g) == 0) return pf;
  ZPoly h;
  if (!divide_exact(pf, g, h)) throw std::logic_error("gcd does not divide its polynomial");
  return primitive_positive(h);
}

std::vector<std::pair<ZPoly, int>> yun_decompose(const ZPoly& f) {
  if (f.empty()) throw std::domain_error("square-free decomposition of zero polynomial");
  std::vector<std::pair<ZPoly, int>> out;
  ZPoly pf = primitive_positive(f);
  if (deg(pf) == 0) return out;
  ZPoly g = gcd(pf, derivative(pf));
  ZPoly w, y;
  if (!divide_exact(pf, g, w)) throw std::logic_error("yun: gcd division failed");
  if (!divide_exact(derivative(pf), g, y)) throw std::logic_error("yun: gcd division failed");
  int i = 1;
  ZPoly z = sub(y, derivative(w));
  while (deg(w) > 0) {
    ZPoly gi = gcd(w, z);
    if (deg(gi) > 0) out.emplace_back(gi, i);
    ZPoly w2, z2;
    if (!divide_exact(w, gi, w2)) throw std::logic_error("yun: factor division failed");
    if (!divide_exact(z, gi, z2)) throw std::logic_error("yun: factor division failed");
    w = std::move(w2);
    z = sub(z2, derivative(w));
    ++i;
  }
  return out;
}

Rational root_bound(const ZPoly& f) {
  if (f.empty()) throw std::domain_error("root bound of zero polynomial");
  ZPoly g = f;
  trim(g);
  int n = deg(g);
  if (n == 0) return Rational(2);
  std::size_t lead_bits = mpz_sizeinbase(g.back().get_mpz_t(), 2);
  long m = 1;
  for (int k = 1; k <= n; ++k) {
    const Z& c = g[static_cast<std::size_t>(n - k)];
    if (c == 0) continue;
    long delta = static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)) -
                 static_cast<long>(lead_bits) + 1;
    long mk = (delta + k - 1) / k + 2;  // ceil(delta/k) + margin covers Fujiwara's 2*max(...)
    m = std::max(m, mk);
  }
  Z b(1);
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(m));
  return Rational(b);
}

std::vector<ZPoly> sturm_chain(const ZPoly& squarefree) {
  std::vector<ZPoly> chain;
  chain.push_back(primitive_part(squarefree));
  ZPoly d = derivative(squarefree);
  if (d.empty()) return chain;
  chain.push_back(primitive_part(d));
  while (deg(chain.back()) > 0) {
    const ZPoly& a = chain[chain.size() - 2];
    const ZPoly& b = chain.back();
    ZPoly r = pseudo_rem(a, b);
    if (r.empty()) break;  // squarefree input never gets here
    // pseudo_rem multiplies by lc(b)^(delta+1); fix the sign when that factor
    // is negative so the chain keeps the Sturm sign property
    int delta = deg(a) - deg(b);
    if (b.back() < 0 && ((delta + 1) & 1))
      for (Z& c : r) c = -c;
    ZPoly next = primitive_part(r);
    for (Z& c : next) c = -c;
    chain.push_back(std::move(next));
  }
  return chain;
}

namespace {

int variations_at(const std::vector<ZPoly>& chain, const Rational& t) {
  int var = 0, last = 0;
  for (const ZPoly& f : chain) {
    int s = sign_at(f, t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

int variations_at_inf(const std::vector<ZPoly>& chain, bool plus) {
  int var = 0, last = 0;
  for (const ZPoly& f : chain) {
    int s = sign_at_inf(f, plus);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

}  // namespace

int sturm_count_open(const std::vector<ZPoly>& chain, const Rational& lo, const Rational& hi) {
  if (lo >= hi) return 0;
  int c = variations_at(chain, lo) - variations_at(chain, hi);
  if (sign_at(chain[0], hi) == 0) --c;  // (lo, hi] -> (lo, hi)
  return c;
}

int sturm_count_line(const std::vector<ZPoly>& chain) {
  return variations_at_inf(chain, false) - variations_at_inf(chain, true);
}

namespace {

// one bisection step keeping the single interior root; count-based so an
// exact root sitting on a (closed) endpoint cannot steal the bracket
void shrink_once(Interval& iv, const ZPoly& sf, const std::vector<ZPoly>& chain) {
  if (iv.is_point()) return;
  Rational m = iv.mid();
  if (sign_at(sf, m) == 0) {
    iv = Interval(m, m);
    return;
  }
  if (sturm_count_open(chain, iv.lo, m) == 1)
    iv = Interval(iv.lo, m);
  else
    iv = Interval(m, iv.hi);
}

// sorted intervals may share bisection endpoints; shrink until the closed
// intervals are pairwise disjoint
void separate_intervals(std::vector<Interval>& ivs, const ZPoly& sf,
                        const std::vector<ZPoly>& chain) {
  for (std::size_t i = 1; i < ivs.size(); ++i) {
    while (ivs[i - 1].hi >= ivs[i].lo) {
      if (!ivs[i].is_point())
        shrink_once(ivs[i], sf, chain);
      else if (!ivs[i - 1].is_point())
        shrink_once(ivs[i - 1], sf, chain);
      else
        throw std::logic_error("coincident isolated roots");
    }
  }
}

// ---- Sturm bisection isolation (desk-scale degrees) ----

void isolate_sturm_rec(const std::vector<ZPoly>& chain, const ZPoly& sf,
                       const Rational& lo, const Rational& hi, int count,
                       std::vector<Interval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (sign_at(sf, mid) == 0) {
    out.emplace_back(mid, mid);
    // shave a root-free collar around the exact root before recursing
    Rational w = (hi - lo) / 4;
    while (sturm_count_open(chain, mid - w, mid + w) != 1 ||
           sign_at(sf, mid - w) == 0 || sign_at(sf, mid + w) == 0)
      w /= 2;
    int cl = sturm_count_open(chain, lo, mid - w);
    int cr = sturm_count_open(chain, mid + w, hi);
    isolate_sturm_rec(chain, sf, lo, mid - w, cl, out);
    isolate_sturm_rec(chain, sf, mid + w, hi, cr, out);
    return;
  }
  int cl = sturm_count_open(chain, lo, mid);
  isolate_sturm_rec(chain, sf, lo, mid, cl, out);
  isolate_sturm_rec(chain, sf, mid, hi, count - cl, out);
}

std::vector<Interval> isolate_sturm(const ZPoly& sf, const Rational& lo, const Rational& hi) {
  std::vector<Interval> out;
  std::vector<ZPoly> chain = sturm_chain(sf);
  if (sign_at(sf, lo) == 0) out.emplace_back(lo, lo);
  if (sign_at(sf, hi) == 0) out.emplace_back(hi, hi);
  isolate_sturm_rec(chain, sf, lo, hi, sturm_count_open(chain, lo, hi), out);
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  separate_intervals(out, sf, chain);
  return out;
}

// ---- Descartes subdivision isolation (high degrees) ----

// polynomial with coefficients c after t -> t + 1
void taylor_shift_1(ZPoly& c) {
  const std::size_t n = c.size();
  if (n < 2) return;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) c[j] += c[j + 1];
}

ZPoly reversed(const ZPoly& c) {
  ZPoly out(c.rbegin(), c.rend());
  trim(out);
  return out;
}

int descartes_variations(const ZPoly& c) {
  int var = 0, last = 0;
  for (const Z& z : c) {
    int s = sgn(z);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

// variation bound for roots of q in (0,1): var of (1+t)^n q(1/(1+t))
int variation_01(const ZPoly& q) {
  ZPoly t = reversed(q);
  taylor_shift_1(t);
  return descartes_variations(t);
}

// 2^n q(t/2)
ZPoly scale_half(const ZPoly& q) {
  ZPoly out = q;
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i)
    mpz_mul_2exp(out[i].get_mpz_t(), out[i].get_mpz_t(), static_cast<unsigned long>(n - 1 - i));
  return out;
}

struct DescNode {
  ZPoly q;        // exact poly on the node's dyadic subinterval mapped to (0,1)
  Rational lo;    // original coordinates
  Rational hi;
  int depth;
};

// isolates roots of q01 in the open unit interval; [lo, hi] are the original
// coordinates of that interval. q01 must be squarefree with q01(0) != 0 and
// q01(1) != 0.
void isolate_descartes_01(ZPoly q01, const Rational& lo, const Rational& hi,
                          std::vector<Interval>& out) {
  std::vector<DescNode> stack;
  stack.push_back({std::move(q01), lo, hi, 0});
  while (!stack.empty()) {
    DescNode node = std::move(stack.back());
    stack.pop_back();
    int var = variation_01(node.q);
    if (var == 0) continue;
    if (var == 1) {
      // shrink until both endpoints are strictly inside the node, so emitted
      // intervals never share an endpoint with a sibling or a point root;
      // node polynomials have no root at 0 or 1, so the sign test is safe
      Rational lo_u(0), hi_u(1);
      int s0 = sgn(node.q[0]);
      bool emitted_point = false;
      while (lo_u == 0 || hi_u == 1) {
        Rational m = (lo_u + hi_u) / 2;
        int sm = sign_at(node.q, m);
        if (sm == 0) {
          Rational at = node.lo + (node.hi - node.lo) * m;
          out.emplace_back(at, at);
          emitted_point = true;
          break;
        }
        if (sm == s0)
          lo_u = m;
        else
          hi_u = m;
      }
      if (!emitted_point)
        out.emplace_back(node.lo + (node.hi - node.lo) * lo_u,
                         node.lo + (node.hi - node.lo) * hi_u);
      continue;
    }
    if (node.depth > 4000) throw std::runtime_error("descartes isolation depth blown");
    Rational mid = (node.lo + node.hi) / 2;
    ZPoly left = scale_half(node.q);
    ZPoly right;
    // root exactly at the midpoint: left child has it at t=1
    Z at1(0);
    for (const Z& z : left) at1 += z;
    if (at1 == 0) {
      out.emplace_back(mid, mid);
      ZPoly lin{Z(-1), Z(1)};
      ZPoly quot;
      if (!divide_exact(left, lin, quot)) throw std::logic_error("descartes midpoint deflation failed");
      left = std::move(quot);
    }
    right = left;
    taylor_shift_1(right);
    stack.push_back({std::move(right), mid, node.hi, node.depth + 1});
    stack.push_back({std::move(left), node.lo, mid, node.depth + 1});
  }
}

// maps [lo, hi] onto [0, 1]: integer poly whose roots in (0,1) are the roots
// of f in (lo, hi) under t -> lo + (hi - lo) t
ZPoly map_to_unit(const ZPoly& f, const Rational& lo, const Rational& hi) {
  // lo + (hi - lo) t = (a + b t) / q with integer a, b, q; result is
  // q^n f((a + b t)/q) evaluated by Horner
  Rational width = hi - lo;
  Z q;
  mpz_lcm(q.get_mpz_t(), lo.get_den().get_mpz_t(), width.get_den().get_mpz_t());
  Z a = lo.get_num() * (q / lo.get_den());
  Z b = width.get_num() * (q / width.get_den());
  ZPoly affine{a, b};
  ZPoly acc{f.back()};
  Z qp(1);
  for (std::size_t i = f.size() - 1; i-- > 0;) {
    acc = mul(acc, affine);
    if (acc.empty()) acc.push_back(Z(0));
    qp *= q;
    acc[0] += f[i] * qp;
    trim(acc);
  }
  return acc;
}

std::vector<Interval> isolate_descartes(const ZPoly& sf, const Rational& lo, const Rational& hi) {
  std::vector<Interval> out;
  if (sign_at(sf, lo) == 0) out.emplace_back(lo, lo);
  if (sign_at(sf, hi) == 0) out.emplace_back(hi, hi);
  ZPoly q01 = map_to_unit(sf, lo, hi);
  // strip exact endpoint roots: t | q01 and (t-1) | q01
  while (!q01.empty() && q01[0] == 0) q01.erase(q01.begin());
  Z at1(0);
  for (const Z& z : q01) at1 += z;
  if (at1 == 0) {
    ZPoly lin{Z(-1), Z(1)}, quot;
    if (!divide_exact(q01, lin, quot)) throw std::logic_error("endpoint deflation failed");
    q01 = std::move(quot);
  }
  if (!q01.empty() && deg(q01) > 0) isolate_descartes_01(std::move(q01), lo, hi, out);
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace

std::vector<Interval> isolate_roots_in(const ZPoly& f, const Rational& lo, const Rational& hi) {
  if (f.empty()) throw std::domain_error("root isolation of zero polynomial");
  if (lo > hi) return {};
  ZPoly sf = squarefree_part(f);
  if (deg(sf) == 0) return {};
  if (lo == hi) {
    if (sign_at(sf, lo) == 0) return {Interval(lo, lo)};
    return {};
  }
  if (deg(sf) <= kSturmIsolationMaxDegree) return isolate_sturm(sf, lo, hi);
  return isolate_descartes(sf, lo, hi);
}

std::vector<Interval> isolate_roots_in_descartes(const ZPoly& f, const Rational& lo,
                                                 const Rational& hi) {
  if (f.empty()) throw std::domain_error("root isolation of zero polynomial");
  if (lo >= hi) return isolate_roots_in(f, lo, hi);
  ZPoly sf = squarefree_part(f);
  if (deg(sf) == 0) return {};
  return isolate_descartes(sf, lo, hi);
}

std::vector<Interval> isolate_roots(const ZPoly& f) {
  if (f.empty()) throw std::domain_error("root isolation of zero polynomial");
  ZPoly sf = squarefree_part(f);
  if (deg(sf) == 0) return {};
  Rational b = root_bound(sf);
  return isolate_roots_in(sf, -b, b);
}

Rational refine_root(const ZPoly& f, const Interval& iv, const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("refine_root needs tol > 0");
  ZPoly sf = squarefree_part(f);
  Rational lo = iv.lo, hi = iv.hi;
  int slo = sign_at(sf, lo);
  if (slo == 0) return lo;
  int shi = sign_at(sf, hi);
  if (shi == 0) return hi;
  if (slo == shi) throw std::domain_error("empty bracket");
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    int sm = sign_at(sf, mid);
    if (sm == 0) return mid;
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

ZPoly from_univariate(const MPoly& p, Var v, Rational& scale) {
  for (Var w : kAllVars)
    if (w != v && p.uses(w)) throw std::invalid_argument("polynomial is not univariate");
  auto [prim, sc] = p.primitive_scaled();
  scale = sc;
  int d = prim.degree(v);
  ZPoly out(d >= 0 ? static_cast<std::size_t>(d) + 1 : 0, Z(0));
  for (auto& [m, c] : prim.terms()) {
    if (c.get_den() != 1) throw std::logic_error("primitive part not integral");
    out[mono_exp(m, v)] = c.get_num();
  }
  trim(out);
  return out;
}

MPoly to_mpoly(const ZPoly& f, Var v) {
  MPoly out;
  for (std::size_t i = 0; i < f.size(); ++i)
    out += MPoly::monomial(Rational(f[i]), {{v, static_cast<unsigned>(i)}});
  return out;
}

}  // namespace specgap::zp
