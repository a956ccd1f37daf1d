#include "specgap/modarith.hpp"

#include <stdexcept>

namespace specgap::modp {

u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1u) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeGen::PrimeGen() : cursor_((1ull << 62) - 1) {}

u64 PrimeGen::next() {
  while (cursor_ > 2) {
    u64 c = cursor_;
    cursor_ -= 2;
    if (is_prime(c)) return c;
  }
  throw std::runtime_error("prime stream exhausted");
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly reduce(const std::vector<mpz_class>& f, u64 p) {
  Poly out(f.size());
  mpz_class pm(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_class r = f[i] % pm;
    if (r < 0) r += pm;
    out[i] = r.get_ui();
  }
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
    }
  }
  trim(out);
  return out;
}

Poly rem(const Poly& a, const Poly& b, u64 p) {
  if (b.empty()) throw std::domain_error("mod-p division by zero polynomial");
  Poly r = a;
  trim(r);
  u64 inv_lc = invmod(b.back(), p);
  while (static_cast<int>(r.size()) >= static_cast<int>(b.size()) && !r.empty()) {
    u64 q = mulmod(r.back(), inv_lc, p);
    std::size_t shift = r.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      u64 sub = mulmod(q, b[i], p);
      u64& dst = r[shift + i];
      dst = (dst >= sub) ? dst - sub : dst + p - sub;
    }
    trim(r);
  }
  return r;
}

Poly gcd_monic(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv_lc = invmod(a.back(), p);
    for (u64& c : a) c = mulmod(c, inv_lc, p);
  }
  return a;
}

u64 eval(const Poly& f, u64 t, u64 p) {
  u64 acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (mulmod(acc, t, p) + f[i]) % p;
  return acc;
}

u64 resultant(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) throw std::domain_error("resultant of zero polynomial");
  u64 res = 1;
  while (true) {
    int da = deg(a);
    int db = deg(b);
    if (db == 0) {
      res = mulmod(res, powmod(b[0], static_cast<u64>(da), p), p);
      return res;
    }
    Poly r = rem(a, b, p);
    int dr = deg(r);
    if (r.empty()) return 0;
    // res(a,b) = (-1)^{da*db} * lc(b)^{da-dr} * res(b,r)
    if ((static_cast<u64>(da) * static_cast<u64>(db)) & 1u) res = p - res;
    res = mulmod(res, powmod(b.back(), static_cast<u64>(da - dr), p), p);
    a = std::move(b);
    b = std::move(r);
  }
}

Poly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw std::invalid_argument("interpolation point mismatch");
  // Newton divided differences
  std::vector<u64> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n; i-- > level;) {
      u64 num = (dd[i] >= dd[i - 1]) ? dd[i] - dd[i - 1] : dd[i] + p - dd[i - 1];
      u64 den = (xs[i] >= xs[i - level]) ? xs[i] - xs[i - level] : xs[i] + p - xs[i - level];
      dd[i] = mulmod(num, invmod(den, p), p);
    }
  }
  // expand Newton form
  Poly out;
  for (std::size_t i = n; i-- > 0;) {
    // out = out * (t - xs[i]) + dd[i]
    Poly next(out.size() + 1, 0);
    for (std::size_t j = 0; j < out.size(); ++j) {
      next[j + 1] = (next[j + 1] + out[j]) % p;
      u64 sub = mulmod(out[j], xs[i] % p, p);
      next[j] = (next[j] >= sub) ? next[j] - sub : next[j] + p - sub;
    }
    next[0] = (next[0] + dd[i]) % p;
    out = std::move(next);
    trim(out);
  }
  return out;
}

void Crt::add(u64 residue, u64 p) {
  mpz_class pm(static_cast<unsigned long>(p));
  if (modulus_ == 1) {
    value_ = residue;
    modulus_ = pm;
    return;
  }
  // value' = value + modulus * ((residue - value) * modulus^{-1} mod p)
  mpz_class mr = modulus_ % pm;
  u64 minv = invmod(mr.get_ui(), p);
  mpz_class vr = value_ % pm;
  u64 delta = (residue + p - vr.get_ui() % p) % p;
  u64 k = mulmod(delta, minv, p);
  value_ += modulus_ * mpz_class(static_cast<unsigned long>(k));
  modulus_ *= pm;
}

mpz_class Crt::balanced() const {
  mpz_class half = modulus_ / 2;
  if (value_ > half) return value_ - modulus_;
  return value_;
}

}  // namespace specgap::modp
