#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gerbe {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  /// Parses "p/q" or "p" (optional leading '-'); throws std::invalid_argument.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Largest integer not exceeding the value.
  Integer floor() const;
  /// Fractional part in [0, 1).
  Rational mod_one() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

/// Greatest common divisor, always nonnegative.
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
/// Nonnegative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

struct ExtendedGcd {
  Integer g, s, t;  // g = s*a + t*b, g >= 0
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

}  // namespace gerbe
