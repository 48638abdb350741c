#pragma once

// Arbitrary-precision integer with an inline 64-bit fast path.
//
// Values that fit in int64_t never touch the heap; anything larger is kept in
// a GMP mpz_class. The representation is normalized: big_ is non-null only
// when the value does not fit in int64_t.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace brauer {

class Integer {
 public:
  Integer() noexcept = default;

  template <typename T>
    requires std::is_integral_v<T>
  Integer(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_unsigned_v<T> && sizeof(T) >= sizeof(std::int64_t)) {
      if (v > static_cast<T>(std::numeric_limits<std::int64_t>::max())) {
        big_ = std::make_unique<mpz_class>();
        mpz_set_ui(big_->get_mpz_t(), static_cast<unsigned long>(v));
        return;
      }
    }
    small_ = static_cast<std::int64_t>(v);
  }

  explicit Integer(const mpz_class& z) { assign(z); }

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
  ~Integer() = default;

  static Integer parse(std::string_view text) {
    std::string s(text);
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) {
      throw std::invalid_argument("not an integer: '" + s + "'");
    }
    return Integer(z);
  }

  [[nodiscard]] bool is_small() const noexcept { return !big_; }
  [[nodiscard]] bool is_zero() const noexcept { return !big_ && small_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return !big_ && small_ == 1; }
  [[nodiscard]] bool is_unit() const noexcept {
    return !big_ && (small_ == 1 || small_ == -1);
  }
  [[nodiscard]] int sign() const noexcept {
    if (big_) return mpz_sgn(big_->get_mpz_t());
    return (small_ > 0) - (small_ < 0);
  }
  [[nodiscard]] bool fits_int64() const noexcept { return !big_; }
  [[nodiscard]] std::int64_t to_int64() const {
    if (big_) throw std::overflow_error("Integer does not fit in int64");
    return small_;
  }
  [[nodiscard]] mpz_class to_mpz() const {
    if (big_) return *big_;
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(small_));
    return z;
  }
  [[nodiscard]] std::string to_string() const {
    return big_ ? big_->get_str(10) : std::to_string(small_);
  }

  Integer operator-() const {
    if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) {
      return Integer(-small_);
    }
    return Integer(mpz_class(-to_mpz()));
  }

  Integer& operator+=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
    } else {
      assign(to_mpz() + o.to_mpz());
    }
    return *this;
  }
  Integer& operator-=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
    } else {
      assign(to_mpz() - o.to_mpz());
    }
    return *this;
  }
  Integer& operator*=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
    } else {
      assign(to_mpz() * o.to_mpz());
    }
    return *this;
  }
  // Truncating division, like the built-in operators.
  Integer& operator/=(const Integer& o) {
    check_divisor(o);
    if (!big_ && !o.big_ &&
        !(small_ == std::numeric_limits<std::int64_t>::min() && o.small_ == -1)) {
      small_ /= o.small_;
    } else {
      mpz_class q;
      mpz_tdiv_q(q.get_mpz_t(), to_mpz().get_mpz_t(), o.to_mpz().get_mpz_t());
      assign(q);
    }
    return *this;
  }
  Integer& operator%=(const Integer& o) {
    check_divisor(o);
    if (!big_ && !o.big_) {
      small_ = (o.small_ == -1) ? 0 : small_ % o.small_;
    } else {
      mpz_class r;
      mpz_tdiv_r(r.get_mpz_t(), to_mpz().get_mpz_t(), o.to_mpz().get_mpz_t());
      assign(r);
    }
    return *this;
  }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

  // this += a * b without temporaries on the fast path.
  void add_mul(const Integer& a, const Integer& b) {
    std::int64_t p, r;
    if (!big_ && !a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &p) &&
        !__builtin_add_overflow(small_, p, &r)) {
      small_ = r;
    } else {
      assign(to_mpz() + a.to_mpz() * b.to_mpz());
    }
  }
  void sub_mul(const Integer& a, const Integer& b) {
    std::int64_t p, r;
    if (!big_ && !a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &p) &&
        !__builtin_sub_overflow(small_, p, &r)) {
      small_ = r;
    } else {
      assign(to_mpz() - a.to_mpz() * b.to_mpz());
    }
  }

  friend bool operator==(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // normalized: a big value never equals a small one
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    const int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& v) {
    return os << v.to_string();
  }

  [[nodiscard]] std::size_t hash() const noexcept {
    if (!big_) return std::hash<std::int64_t>{}(small_);
    return std::hash<std::string>{}(big_->get_str(16));
  }

 private:
  static void check_divisor(const Integer& o) {
    if (o.is_zero()) throw std::domain_error("Integer division by zero");
  }

  void assign(const mpz_class& z) {
    if (mpz_fits_slong_p(z.get_mpz_t())) {
      small_ = mpz_get_si(z.get_mpz_t());
      big_.reset();
    } else {
      small_ = 0;
      if (big_) {
        *big_ = z;
      } else {
        big_ = std::make_unique<mpz_class>(z);
      }
    }
  }

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

inline Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

// Floor division and the matching non-negative remainder for positive m.
inline Integer floor_div(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && !b.is_zero()) {
    const std::int64_t x = a.to_int64(), y = b.to_int64();
    if (!(x == std::numeric_limits<std::int64_t>::min() && y == -1)) {
      std::int64_t q = x / y;
      if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
      return q;
    }
  }
  if (b.is_zero()) throw std::domain_error("Integer division by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

// Representative of a in [0, |m|); m == 0 returns a unchanged.
inline Integer mod_floor(const Integer& a, const Integer& m) {
  if (m.is_zero()) return a;
  if (a.is_small() && m.is_small()) {
    std::int64_t mm = m.to_int64();
    if (mm < 0) mm = -mm;
    std::int64_t r = a.to_int64() % mm;
    if (r < 0) r += mm;
    return r;
  }
  mpz_class r;
  mpz_class mm = m.to_mpz();
  mpz_abs(mm.get_mpz_t(), mm.get_mpz_t());
  mpz_fdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), mm.get_mpz_t());
  return Integer(r);
}

// Nearest-integer quotient, used to keep remainders small during reduction.
inline Integer round_div(const Integer& a, const Integer& b) {
  Integer q = floor_div(a, b);
  Integer r = a - q * b;  // sign of b, |r| < |b|
  if (abs(r + r) > abs(b)) q += 1;
  return q;
}

inline Integer divexact(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("Integer division by zero");
  if (!(a % b).is_zero()) throw std::domain_error("inexact division");
  return a / b;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    std::uint64_t x = a.sign() < 0 ? 0 - static_cast<std::uint64_t>(a.to_int64())
                                   : static_cast<std::uint64_t>(a.to_int64());
    std::uint64_t y = b.sign() < 0 ? 0 - static_cast<std::uint64_t>(b.to_int64())
                                   : static_cast<std::uint64_t>(b.to_int64());
    while (y != 0) {
      const std::uint64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(g);
}

struct ExtendedGcd {
  Integer g;  // non-negative
  Integer s;
  Integer t;  // s*a + t*b == g
};

inline ExtendedGcd xgcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    const std::int64_t x = a.to_int64(), y = b.to_int64();
    if (x != std::numeric_limits<std::int64_t>::min() &&
        y != std::numeric_limits<std::int64_t>::min()) {
      std::int64_t r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
      while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
      }
      if (r0 < 0) {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
      }
      return {r0, s0, t0};
    }
  }
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.to_mpz().get_mpz_t(),
             b.to_mpz().get_mpz_t());
  return {Integer(g), Integer(s), Integer(t)};
}

// Inverse of a modulo m (m >= 2); throws if gcd(a, m) != 1.
inline Integer mod_inverse(const Integer& a, const Integer& m) {
  auto e = xgcd(mod_floor(a, m), m);
  if (!e.g.is_one()) throw std::domain_error("no modular inverse");
  return mod_floor(e.s, m);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  return abs(a / gcd(a, b) * b);
}

}  // namespace brauer

template <>
struct std::hash<brauer::Integer> {
  std::size_t operator()(const brauer::Integer& v) const noexcept { return v.hash(); }
};
