#pragma once

// Exact arithmetic backbone. Integers and rationals are arbitrary precision
// (GMP); rationals are kept in lowest terms with a positive denominator.
// There is no floating point anywhere in the library.

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "orbistab/errors.hpp"

namespace orbistab {

using Int = mpz_class;

Int factorial(unsigned long n);

// Binomial coefficient with integer top, defined through the falling
// factorial, so binomial(-1, 0) = 1 and binomial(-1, 1) = -1.
Int int_binomial(const Int& top, unsigned long k);

class Rational {
 public:
  Rational() = default;
  Rational(long long n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Int& n) : value_(n) {}                    // NOLINT(google-explicit-constructor)
  Rational(const Int& num, const Int& den);
  Rational(long long num, long long den) : Rational(Int(static_cast<long>(num)), Int(static_cast<long>(den))) {}

  // Accepts "p" and "p/q"; q must be nonzero.
  static Rational parse(const std::string& text);

  Int numerator() const { return value_.get_num(); }
  Int denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Int floor() const;
  Int ceil() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  // "p" when integral, "p/q" otherwise.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_{0};
};

// Generalized binomial x(x-1)...(x-d+1)/d! with rational top; the empty
// product gives gen_binomial(x, 0) = 1.
Rational gen_binomial(const Rational& x, unsigned long d);

}  // namespace orbistab
