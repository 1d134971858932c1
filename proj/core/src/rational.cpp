#include "orbistab/rational.hpp"

#include <ostream>

namespace orbistab {

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int int_binomial(const Int& top, unsigned long k) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k);
  return r;
}

Rational::Rational(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw Error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw Error("malformed rational: \"" + text + "\"");
  }
}

Int Rational::floor() const {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

Int Rational::ceil() const {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational gen_binomial(const Rational& x, unsigned long d) {
  Rational acc = 1;
  for (unsigned long j = 0; j < d; ++j) acc *= x - Rational(static_cast<long long>(j));
  return acc / Rational(factorial(d));
}

}  // namespace orbistab
