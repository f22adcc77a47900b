#pragma once

// Exact arithmetic: arbitrary-precision integers and rationals, and the real
// quadratic fields Q(sqrt N) with a decidable order. Nothing in this header
// touches floating point except to_decimal(), which is display-only.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace helix {

using Int = mpz_class;

template <std::integral T>
Int make_int(T v) {
  if constexpr (std::is_signed_v<T>) {
    return Int(static_cast<long>(v));
  } else {
    return Int(static_cast<unsigned long>(v));
  }
}

/// Parses an optionally signed decimal integer. Throws InputError.
Int parse_int(std::string_view text);

int sign(const Int& v);
Int abs_int(const Int& v);
Int gcd_int(const Int& a, const Int& b);
/// Euclidean remainder in [0, |m|).
Int mod_floor(const Int& a, const Int& m);
/// Floor of the square root; v must be nonnegative.
Int isqrt(const Int& v);
bool is_perfect_square(const Int& v);

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct Bezout {
  Int g;
  Int x;
  Int y;
};
Bezout ext_gcd(const Int& a, const Int& b);

/// v = square_part^2 * core with core square-free. v must be nonnegative;
/// for v = 0 both parts are 0.
struct SquareFreeSplit {
  Int square_part;
  Int core;
};
SquareFreeSplit square_free_split(const Int& v);

/// Exact rational number, always in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  template <std::integral T>
  Rat(T v) : v_(make_int(v)) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  template <typename U>
  Rat(const __gmp_expr<mpz_t, U>& e) : v_(Int(e)) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  Int floor() const;
  const mpq_class& raw() const { return v_; }

  /// Always "p/q", including q = 1.
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat x, const Rat& y) { return x += y; }
  friend Rat operator-(Rat x, const Rat& y) { return x -= y; }
  friend Rat operator*(Rat x, const Rat& y) { return x *= y; }
  friend Rat operator/(Rat x, const Rat& y) { return x /= y; }
  friend bool operator==(const Rat& x, const Rat& y) { return x.v_ == y.v_; }
  friend std::strong_ordering operator<=>(const Rat& x, const Rat& y) {
    return cmp(x.v_, y.v_) <=> 0;
  }

 private:
  explicit Rat(mpq_class v);
  mpq_class v_;
};

/// Accepts "p/q", "p", with optional sign and surrounding whitespace.
Rat parse_rat(std::string_view text);

/// a + b*sqrt(radicand). Comparisons and equality are by value.
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(Rat a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  /// Stores the components as given; see canonicalize().
  QuadNum(Rat a, Rat b, Int radicand);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Int& radicand() const { return n_; }
  /// True when the value is rational (b = 0 or radicand is a perfect square).
  bool is_rational() const;

  /// "a + b*sqrt(N)" with terms omitted when zero, e.g. "1/2 - 1/2*sqrt(21)".
  std::string str() const;

 private:
  Rat a_;
  Rat b_;
  Int n_;
};

/// Pulls square factors out of the radicand; folds b into a when the
/// radicand becomes 0 or 1. Idempotent.
QuadNum canonicalize(const QuadNum& x);

/// Exact sign of a + b*sqrt(N).
int quad_sign(const QuadNum& x);

QuadNum quad_add(const QuadNum& x, const QuadNum& y);
QuadNum quad_sub(const QuadNum& x, const QuadNum& y);
QuadNum quad_mul(const QuadNum& x, const QuadNum& y);
QuadNum quad_neg(const QuadNum& x);
/// (a + b sqrt N)^-1 = (a - b sqrt N) / (a^2 - b^2 N). Throws DomainError on 0.
QuadNum quad_inv(const QuadNum& x);
QuadNum quad_div(const QuadNum& x, const QuadNum& y);
QuadNum quad_pow(const QuadNum& x, long exponent);
QuadNum quad_abs(const QuadNum& x);

inline QuadNum operator+(const QuadNum& x, const QuadNum& y) { return quad_add(x, y); }
inline QuadNum operator-(const QuadNum& x, const QuadNum& y) { return quad_sub(x, y); }
inline QuadNum operator*(const QuadNum& x, const QuadNum& y) { return quad_mul(x, y); }
inline QuadNum operator/(const QuadNum& x, const QuadNum& y) { return quad_div(x, y); }
inline QuadNum operator-(const QuadNum& x) { return quad_neg(x); }

bool operator==(const QuadNum& x, const QuadNum& y);
std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y);

/// sqrt(n) as a canonical QuadNum.
QuadNum quad_sqrt(const Int& n);

/// Decimal rendering with `digits` digits after the point, truncated toward
/// zero. Display only.
std::string to_decimal(const QuadNum& x, int digits);
std::string to_decimal(const Rat& x, int digits);

}  // namespace helix
