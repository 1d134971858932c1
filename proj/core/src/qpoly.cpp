#include "orbistab/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace orbistab {

QPoly::QPoly(std::vector<Rational> monomial_coeffs) : coeffs_(std::move(monomial_coeffs)) {
  strip();
}

QPoly QPoly::constant(const Rational& c) {
  return QPoly(std::vector<Rational>{c});
}

void QPoly::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational QPoly::operator()(const Rational& m) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + *it;
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  strip();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  strip();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& ci : coeffs_) ci *= c;
  return *this;
}

std::string QPoly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const Rational a = c.sign() < 0 ? -c : c;
    const bool unit = a == Rational(1);
    if (i == 0 || !unit) os << a.str();
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

QPoly poly_from_alpha(const std::vector<Rational>& alphas) {
  std::vector<Rational> coeffs(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) coeffs[i] = alphas[i] / Rational(factorial(i));
  return QPoly(std::move(coeffs));
}

std::vector<Rational> alpha_coeffs(const QPoly& p) {
  std::vector<Rational> alphas(p.coeffs().size());
  for (std::size_t i = 0; i < alphas.size(); ++i) alphas[i] = Rational(factorial(i)) * p.coeffs()[i];
  return alphas;
}

std::strong_ordering compare_at_infinity(const QPoly& p, const QPoly& q) {
  const int top = std::max(p.degree(), q.degree());
  for (int i = top; i >= 0; --i) {
    const auto c = p.coeff(static_cast<std::size_t>(i)) <=> q.coeff(static_cast<std::size_t>(i));
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

QPoly reduced_poly(const QPoly& p) {
  if (p.is_zero()) throw ZeroSheafError();
  const Rational lead = p.coeffs().back();  // alpha_d = d! * lead has the same sign
  if (lead.sign() <= 0) throw NonPositiveLeadingError();
  const Rational alpha_d = Rational(factorial(static_cast<unsigned long>(p.degree()))) * lead;
  return (Rational(1) / alpha_d) * p;
}

Rational slope(const QPoly& p) {
  if (p.is_zero()) throw ZeroSheafError();
  return slope(p, p.degree());
}

Rational slope(const QPoly& p, int dim) {
  if (p.is_zero()) throw ZeroSheafError();
  if (dim < 1) throw DimensionZeroError();
  const auto alphas = alpha_coeffs(p);
  const Rational alpha_d = dim < static_cast<int>(alphas.size()) ? alphas[static_cast<std::size_t>(dim)] : Rational(0);
  if (alpha_d.is_zero()) throw DimensionZeroError("polynomial has no term in the requested dimension");
  const Rational alpha_dm1 = alphas[static_cast<std::size_t>(dim - 1)];
  return alpha_dm1 / alpha_d;
}

}  // namespace orbistab
