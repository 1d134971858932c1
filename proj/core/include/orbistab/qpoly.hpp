#pragma once

// Univariate polynomials with rational coefficients. These carry every
// Hilbert polynomial in the library, so besides plain arithmetic they expose
// the divided-power ("alpha") coefficient view
//
//   P(m) = sum_i alpha_i * m^i / i!
//
// and the eventual comparison order: the sign of P(m) - Q(m) for all large m,
// which is the order all stability decisions use.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "orbistab/rational.hpp"

namespace orbistab {

class QPoly {
 public:
  QPoly() = default;  // the zero polynomial
  explicit QPoly(std::vector<Rational> monomial_coeffs);

  static QPoly constant(const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  // Exact Horner evaluation.
  Rational operator()(const Rational& m) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rational& c);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const Rational& c, QPoly p) { return p *= c; }
  friend QPoly operator-(const QPoly& p) { return Rational(-1) * p; }

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string str(const char* var = "m") const;

 private:
  void strip();
  std::vector<Rational> coeffs_;  // index i = coefficient of m^i, trailing entry nonzero
};

// Builds sum_i alphas[i] * m^i / i!; inverse of alpha_coeffs.
QPoly poly_from_alpha(const std::vector<Rational>& alphas);

// alpha_i = i! * (coefficient of m^i); empty for the zero polynomial.
std::vector<Rational> alpha_coeffs(const QPoly& p);

// Sign of P(m) - Q(m) for all sufficiently large m. Equals lexicographic
// comparison of the coefficient vectors read from the top degree down.
std::strong_ordering compare_at_infinity(const QPoly& p, const QPoly& q);

// P / alpha_d(P); the result has top alpha-coefficient 1.
QPoly reduced_poly(const QPoly& p);

// alpha_{d-1} / alpha_d with d = deg P. The overload taking the dimension
// explicitly serves non-pure conventions; it needs alpha_d != 0.
Rational slope(const QPoly& p);
Rational slope(const QPoly& p, int dim);

}  // namespace orbistab
