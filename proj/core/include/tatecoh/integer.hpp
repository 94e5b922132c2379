#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <string>
#include <tuple>

namespace tatecoh {

/// Exact integer with an inline 64-bit fast path.
///
/// Values in (INT64_MIN, INT64_MAX] live in `small_`; anything larger is
/// promoted to a GMP integer and demoted again as soon as it fits. The
/// asymmetric range keeps negation and `abs` overflow-free on the fast path.
class Integer {
 public:
  Integer() noexcept = default;

  template <std::integral T>
  Integer(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (static_cast<int64_t>(v) == kMin) {
        big_ = std::make_unique<mpz_class>(static_cast<long>(v));
      } else {
        small_ = static_cast<int64_t>(v);
      }
    } else {
      if (static_cast<uint64_t>(v) > static_cast<uint64_t>(kMax)) {
        big_ = std::make_unique<mpz_class>(static_cast<unsigned long>(v));
      } else {
        small_ = static_cast<int64_t>(v);
      }
    }
  }

  explicit Integer(const mpz_class& v) { assign(v); }

  Integer(const Integer& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
  }
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;

  static Integer from_string(const std::string& s) { return Integer(mpz_class(s, 10)); }

  [[nodiscard]] bool is_small() const noexcept { return !big_; }
  [[nodiscard]] bool is_zero() const noexcept { return !big_ && small_ == 0; }
  [[nodiscard]] bool is_unit() const noexcept { return !big_ && (small_ == 1 || small_ == -1); }
  [[nodiscard]] int sign() const noexcept {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
  }

  [[nodiscard]] bool fits_int64() const noexcept { return !big_; }
  [[nodiscard]] int64_t to_int64() const;
  [[nodiscard]] mpz_class to_mpz() const {
    if (big_) return *big_;
    return mpz_class(static_cast<long>(small_));
  }
  [[nodiscard]] std::string to_string() const;

  Integer operator-() const {
    if (!big_) return Integer(Raw{}, -small_);
    return Integer(mpz_class(-*big_));
  }

  Integer& operator+=(const Integer& o) {
    if (!big_ && !o.big_) {
      int64_t r;
      if (!__builtin_add_overflow(small_, o.small_, &r) && r != kMin) {
        small_ = r;
        return *this;
      }
    }
    assign(to_mpz() + o.to_mpz());
    return *this;
  }
  Integer& operator-=(const Integer& o) {
    if (!big_ && !o.big_) {
      int64_t r;
      if (!__builtin_sub_overflow(small_, o.small_, &r) && r != kMin) {
        small_ = r;
        return *this;
      }
    }
    assign(to_mpz() - o.to_mpz());
    return *this;
  }
  Integer& operator*=(const Integer& o) {
    if (!big_ && !o.big_) {
      int64_t r;
      if (!__builtin_mul_overflow(small_, o.small_, &r) && r != kMin) {
        small_ = r;
        return *this;
      }
    }
    assign(to_mpz() * o.to_mpz());
    return *this;
  }

  /// this += a * b, the inner step of every elimination loop.
  void add_mul(const Integer& a, const Integer& b) {
    if (!big_ && !a.big_ && !b.big_) {
      int64_t p, r;
      if (!__builtin_mul_overflow(a.small_, b.small_, &p) &&
          !__builtin_add_overflow(small_, p, &r) && r != kMin) {
        small_ = r;
        return;
      }
    }
    assign(to_mpz() + a.to_mpz() * b.to_mpz());
  }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  friend bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // normalized: a big value never equals a small one
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

  [[nodiscard]] std::size_t hash() const noexcept;

 private:
  struct Raw {};
  Integer(Raw, int64_t v) noexcept : small_(v) {}

  static constexpr int64_t kMin = std::numeric_limits<int64_t>::min();
  static constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

  void assign(const mpz_class& v) {
    if (mpz_fits_slong_p(v.get_mpz_t()) && v.get_si() != kMin) {
      small_ = v.get_si();
      big_.reset();
    } else {
      big_ = std::make_unique<mpz_class>(v);
      small_ = 0;
    }
  }

  int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

Integer abs(const Integer& v);
/// Quotient rounded toward negative infinity; `b` must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);
/// Remainder with the sign of `b` (for b > 0 this lies in [0, b)).
Integer floor_mod(const Integer& a, const Integer& b);
/// Division known to be exact.
Integer exact_div(const Integer& a, const Integer& b);
/// Quotient rounded to the nearest integer (ties toward negative infinity).
Integer nearest_div(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Bezout data: s*a + t*b == g with g = gcd(a, b) >= 0.
struct Bezout {
  Integer g, s, t;
};
Bezout ext_gcd(const Integer& a, const Integer& b);

/// Reduce `v` modulo `m` into [0, m) when m > 0; m == 0 means "free", no reduction.
Integer reduce_mod(const Integer& v, const Integer& m);

}  // namespace tatecoh

template <>
struct std::hash<tatecoh::Integer> {
  std::size_t operator()(const tatecoh::Integer& v) const noexcept { return v.hash(); }
};
