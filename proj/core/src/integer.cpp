#include "tatecoh/integer.hpp"

#include <functional>
#include <stdexcept>

namespace tatecoh {

int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("Integer does not fit in 64 bits: " + to_string());
  return small_;
}

std::string Integer::to_string() const {
  if (big_) return big_->get_str(10);
  return std::to_string(small_);
}

std::size_t Integer::hash() const noexcept {
  if (!big_) return std::hash<int64_t>{}(small_);
  return std::hash<std::string>{}(big_->get_str(16));
}

Integer abs(const Integer& v) { return v.sign() < 0 ? -v : v; }

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_small() && b.is_small()) {
    int64_t x = a.to_int64(), y = b.to_int64();
    int64_t q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return Integer(q);
  }
  mpz_class q;
  mpz_class am = a.to_mpz(), bm = b.to_mpz();
  mpz_fdiv_q(q.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
  return Integer(q);
}

Integer floor_mod(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

Integer exact_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_small() && b.is_small()) return Integer(a.to_int64() / b.to_int64());
  mpz_class q;
  mpz_class am = a.to_mpz(), bm = b.to_mpz();
  mpz_divexact(q.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
  return Integer(q);
}

Integer nearest_div(const Integer& a, const Integer& b) {
  Integer q = floor_div(a, b);
  Integer r = a - q * b;  // same sign as b
  // move to the nearer quotient when 2|r| > |b|
  if (abs(r + r) > abs(b)) q += Integer(1);
  return q;
}

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    uint64_t x = static_cast<uint64_t>(a.sign() < 0 ? -a.to_int64() : a.to_int64());
    uint64_t y = static_cast<uint64_t>(b.sign() < 0 ? -b.to_int64() : b.to_int64());
    while (y != 0) {
      uint64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  mpz_class g;
  mpz_class am = a.to_mpz(), bm = b.to_mpz();
  mpz_gcd(g.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
  return Integer(g);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(exact_div(a, gcd(a, b)) * b);
}

Bezout ext_gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    // iterative extended Euclid; all intermediates stay within |a|,|b|
    int64_t old_r = a.to_int64(), r = b.to_int64();
    int64_t old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      int64_t q = old_r / r;
      int64_t tmp = old_r - q * r;
      old_r = r;
      r = tmp;
      tmp = old_s - q * s;
      old_s = s;
      s = tmp;
      tmp = old_t - q * t;
      old_t = t;
      t = tmp;
    }
    if (old_r < 0) {
      old_r = -old_r;
      old_s = -old_s;
      old_t = -old_t;
    }
    return {Integer(old_r), Integer(old_s), Integer(old_t)};
  }
  mpz_class g, s, t;
  mpz_class am = a.to_mpz(), bm = b.to_mpz();
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
  return {Integer(g), Integer(s), Integer(t)};
}

Integer reduce_mod(const Integer& v, const Integer& m) {
  if (m.is_zero()) return v;
  return floor_mod(v, m);
}

}  // namespace tatecoh
