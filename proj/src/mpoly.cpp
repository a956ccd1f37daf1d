#include "specgap/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace specgap {

const char* var_name(Var v) {
  switch (v) {
    case Var::x:
      return "x";
    case Var::lam:
      return "lam";
    case Var::E:
      return "E";
    case Var::s:
      return "s";
  }
  return "?";
}

Mono mono_mul(Mono a, Mono b) {
  Mono r = 0;
  for (Var v : kAllVars) {
    unsigned e = mono_exp(a, v) + mono_exp(b, v);
    if (e > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
    r |= static_cast<Mono>(e) << (16u * static_cast<unsigned>(v));
  }
  return r;
}

bool mono_divides(Mono a, Mono b) {
  for (Var v : kAllVars)
    if (mono_exp(a, v) > mono_exp(b, v)) return false;
  return true;
}

Mono mono_div(Mono b, Mono a) {
  // componentwise b - a; safe because mono_divides(a, b) holds
  return b - a;
}

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

MPoly::MPoly(long c) {
  if (c != 0) terms_.emplace(0, Rational(c));
}

MPoly MPoly::variable(Var v, unsigned power) {
  MPoly p;
  if (power > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
  p.terms_.emplace(static_cast<Mono>(power) << (16u * static_cast<unsigned>(v)), Rational(1));
  return p;
}

MPoly MPoly::monomial(const Rational& c,
                      std::initializer_list<std::pair<Var, unsigned>> exps) {
  if (c == 0) return MPoly();
  Mono m = 0;
  for (auto& [v, e] : exps) {
    unsigned cur = mono_exp(m, v) + e;
    if (cur > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
    m = (m & ~(static_cast<Mono>(0xFFFFu) << (16u * static_cast<unsigned>(v)))) |
        (static_cast<Mono>(cur) << (16u * static_cast<unsigned>(v)));
  }
  MPoly p;
  p.terms_.emplace(m, c);
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == 0;
}

Rational MPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::domain_error("polynomial is not constant");
  return terms_.begin()->second;
}

int MPoly::degree(Var v) const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, static_cast<int>(mono_exp(m, v)));
  return d;
}

int MPoly::total_degree() const {
  return total_degree({Var::x, Var::lam, Var::E, Var::s});
}

int MPoly::total_degree(std::initializer_list<Var> vars) const {
  int d = -1;
  for (auto& [m, c] : terms_) {
    int t = 0;
    for (Var v : vars) t += static_cast<int>(mono_exp(m, v));
    d = std::max(d, t);
  }
  return d;
}

std::vector<Var> MPoly::variables() const {
  std::vector<Var> out;
  for (Var v : kAllVars)
    if (degree(v) > 0) out.push_back(v);
  return out;
}

Rational MPoly::coeff(Mono m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(Mono m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::derivative(Var v) const {
  MPoly out;
  const unsigned shift = 16u * static_cast<unsigned>(v);
  for (auto& [m, c] : terms_) {
    unsigned e = mono_exp(m, v);
    if (e == 0) continue;
    out.add_term(m - (static_cast<Mono>(1) << shift), c * Rational(static_cast<long>(e)));
  }
  return out;
}

MPoly MPoly::eval(const std::vector<std::pair<Var, Rational>>& assignment) const {
  MPoly out;
  for (auto& [m, c] : terms_) {
    Rational val = c;
    Mono rest = m;
    for (auto& [v, r] : assignment) {
      unsigned e = mono_exp(m, v);
      if (e > 0) {
        val *= rat_pow(r, e);
        rest &= ~(static_cast<Mono>(0xFFFFu) << (16u * static_cast<unsigned>(v)));
      }
    }
    out.add_term(rest, val);
  }
  return out;
}

MPoly MPoly::coeff_of(Var v, unsigned k) const {
  MPoly out;
  const Mono mask = static_cast<Mono>(0xFFFFu) << (16u * static_cast<unsigned>(v));
  for (auto& [m, c] : terms_)
    if (mono_exp(m, v) == k) out.add_term(m & ~mask, c);
  return out;
}

MPoly MPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("unsupported exponent");
  MPoly result(1L);
  MPoly base = *this;
  unsigned e = static_cast<unsigned>(k);
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = (e >>= 1) ? base * base : base;
  }
  return result;
}

std::pair<MPoly, Rational> MPoly::primitive_scaled() const {
  if (terms_.empty()) return {MPoly(), Rational(1)};
  mpz_class num_gcd(0), den_lcm(1);
  for (auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational scale(num_gcd, den_lcm);
  scale.canonicalize();
  if (leading_coeff() < 0) scale = -scale;
  MPoly prim;
  for (auto& [m, c] : terms_) {
    Rational q = c / scale;
    prim.terms_.emplace(m, q);
  }
  return {prim, scale};
}

Mono MPoly::leading_mono() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Rational& MPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

MPoly MPoly::operator-() const {
  MPoly out;
  for (auto& [m, c] : terms_) out.terms_.emplace(m, Rational(-c));
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, Rational(-c));
  return *this;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  out += b;
  return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  out -= b;
  return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
  return out;
}

MPoly operator*(const Rational& c, const MPoly& p) {
  MPoly out;
  if (c == 0) return out;
  for (auto& [m, pc] : p.terms()) out.add_term(m, c * pc);
  return out;
}

MPoly operator*(const MPoly& p, const Rational& c) { return c * p; }

MPoly operator+(const MPoly& a, long b) { return a + MPoly(b); }
MPoly operator-(const MPoly& a, long b) { return a - MPoly(b); }
MPoly operator*(long c, const MPoly& p) { return Rational(c) * p; }

MPoly divide_exact(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  MPoly rem = f;
  MPoly quot;
  const Mono gm = g.is_zero() ? 0 : g.leading_mono();
  const Rational& gc = g.leading_coeff();
  while (!rem.is_zero()) {
    Mono rm = rem.leading_mono();
    if (!mono_divides(gm, rm)) throw std::domain_error("inexact polynomial division");
    Mono qm = mono_div(rm, gm);
    Rational qc = rem.leading_coeff() / gc;
    MPoly t;
    t.add_term(qm, qc);
    quot += t;
    rem -= t * g;
  }
  return quot;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    Rational a = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_vars = it->first != 0;
    if (!has_vars || a != 1) {
      os << rat_to_string(a);
      if (has_vars) os << "*";
    }
    bool firstv = true;
    for (Var v : kAllVars) {
      unsigned e = mono_exp(it->first, v);
      if (e == 0) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << var_name(v);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

UView::UView(Var main, const MPoly& p) : main_(main) {
  int d = p.degree(main);
  coeffs_.resize(d >= 0 ? static_cast<std::size_t>(d) + 1 : 0);
  for (int k = 0; k <= d; ++k) coeffs_[static_cast<std::size_t>(k)] = p.coeff_of(main, static_cast<unsigned>(k));
  trim();
}

UView UView::from_coeffs(Var main, std::vector<MPoly> coeffs) {
  UView u;
  u.main_ = main;
  u.coeffs_ = std::move(coeffs);
  for (const MPoly& c : u.coeffs_)
    if (c.uses(main)) throw std::invalid_argument("UView coefficient uses the main variable");
  u.trim();
  return u;
}

void UView::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const MPoly& UView::lc() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

const MPoly& UView::coeff(std::size_t k) const {
  static const MPoly kZero;
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

MPoly UView::to_mpoly() const {
  MPoly out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    out += coeffs_[k] * MPoly::variable(main_, static_cast<unsigned>(k));
  return out;
}

UView UView::derivative() const {
  std::vector<MPoly> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d.push_back(Rational(static_cast<long>(k)) * coeffs_[k]);
  return from_coeffs(main_, std::move(d));
}

bool UView::rational_coeffs() const {
  for (const MPoly& c : coeffs_)
    if (!c.is_constant()) return false;
  return true;
}

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
}

}  // namespace specgap
