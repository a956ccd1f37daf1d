#include "specgap/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace specgap {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational rat_from_string(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty rational literal");

  bool neg = false;
  if (t[0] == '+' || t[0] == '-') {
    neg = (t[0] == '-');
    t.erase(0, 1);
  }
  if (t.empty()) throw std::invalid_argument("malformed rational literal");

  auto slash = t.find('/');
  if (slash != std::string::npos) {
    std::string n = t.substr(0, slash);
    std::string d = t.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d))
      throw std::invalid_argument("malformed fraction literal: " + text);
    mpz_class nz(n, 10), dz(d, 10);
    if (dz == 0) throw std::invalid_argument("zero denominator: " + text);
    Rational q(nz, dz);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }

  // decimal / scientific form
  long exp10 = 0;
  auto epos = t.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string e = t.substr(epos + 1);
    t.erase(epos);
    if (e.empty()) throw std::invalid_argument("malformed exponent: " + text);
    bool eneg = false;
    if (e[0] == '+' || e[0] == '-') {
      eneg = (e[0] == '-');
      e.erase(0, 1);
    }
    if (!all_digits(e)) throw std::invalid_argument("malformed exponent: " + text);
    exp10 = std::stol(e);
    if (eneg) exp10 = -exp10;
  }

  std::string digits = t;
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    digits = t.substr(0, dot) + t.substr(dot + 1);
    exp10 -= static_cast<long>(t.size() - dot - 1);
  }
  if (!all_digits(digits)) throw std::invalid_argument("malformed rational literal: " + text);

  mpz_class n(digits, 10);  // explicit base: leading zeros must not mean octal
  mpz_class d(1);
  mpz_class ten(10);
  if (exp10 >= 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(exp10));
    n *= f;
  } else {
    mpz_pow_ui(d.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-exp10));
  }
  Rational q(n, d);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string rat_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational simple_rational_inside(const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("empty interval");
  mpz_class two_j(1);
  for (int j = 0; j < 100000; ++j) {
    // smallest integer strictly above a * 2^j
    mpz_class lo;
    mpz_fdiv_q(lo.get_mpz_t(), mpz_class(a.get_num() * two_j).get_mpz_t(),
               a.get_den().get_mpz_t());
    lo += 1;
    Rational cand(lo, two_j);
    cand.canonicalize();
    if (cand < b) return cand;
    two_j <<= 1;
  }
  throw std::logic_error("dyadic search failed");
}

Rational rat_pow(const Rational& base, unsigned exp) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), exp);
  mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), exp);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace specgap
