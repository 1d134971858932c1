#include "orbistab/bounds.hpp"

#include <algorithm>

namespace orbistab {

Int kleiman_poly(long long i, const std::vector<Int>& xs) {
  if (i < -1) throw ShapeMismatchError("index must be >= -1");
  if (xs.size() != static_cast<std::size_t>(i + 1))
    throw ShapeMismatchError("expected exactly i+1 arguments");
  if (i == -1) return 0;
  const std::vector<Int> tail(xs.begin() + 1, xs.end());
  const Int prev = kleiman_poly(i - 1, tail);
  Int acc = prev;
  for (long long j = 0; j <= i; ++j) {
    const Int top = prev - 1 + static_cast<long>(j);
    acc += xs[static_cast<std::size_t>(j)] * int_binomial(top, static_cast<unsigned long>(j));
  }
  return acc;
}

Int regularity_bound(const std::vector<Int>& binomial_coeffs,
                     const std::vector<Int>& section_bounds) {
  if (binomial_coeffs.size() != section_bounds.size() || binomial_coeffs.empty())
    throw ShapeMismatchError("coefficient and bound lists must have equal positive length");
  std::vector<Int> c(binomial_coeffs.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = section_bounds[i] - binomial_coeffs[i];
    if (sgn(c[i]) < 0) c[i] = 0;
  }
  return kleiman_poly(static_cast<long long>(c.size()) - 1, c);
}

long long find_mtilde(const GeneratingSheafSpec& generating, const StackyCurve& curve) {
  validate(curve);
  if (curve.genus != 0) throw UnsupportedGenusError();
  const auto e_summands = generating.summands();
  // Summand degrees of pi_* End(E) over all ordered pairs.
  long long min_degree = 0;
  for (const auto& a : e_summands) {
    for (const auto& b : e_summands) {
      OrbiLineBundle hom = a;
      for (std::size_t i = 0; i < hom.exponents.size(); ++i) hom.exponents[i] -= b.exponents[i];
      min_degree = std::min(min_degree, pushforward_degree(hom, curve));
    }
  }
  if (min_degree >= 0) return 0;
  return ceil_div(-min_degree, curve.polarization_degree);
}

bool slope_bound_check(const DecomposableSheaf& sheaf, const GeneratingSheafSpec& generating,
                       const StackyCurve& curve, long long mtilde) {
  if (semistable(sheaf, generating, curve) == StabilityVerdict::unstable)
    throw NotSemistableError();
  const auto degrees = f_e_summand_degrees(sheaf, generating, curve);
  const long long max_degree = *std::max_element(degrees.begin(), degrees.end());
  const Rational lhs = max_degree;  // coarse slope of the steepest line summand
  const Rational rhs =
      degree_stacky(sheaf, curve) / Rational(static_cast<long long>(sheaf.line_summands.size())) +
      Rational(mtilde * curve.polarization_degree);
  return lhs <= rhs;
}

Rational harmonic_offset(long long r) {
  Rational f = -1;
  for (long long i = 1; i <= r; ++i) f += Rational(1, i);
  return f;
}

Rational langer_h0_bound(const Rational& mu_max, long long r, long long d) {
  if (r < 1 || d < 1) throw Error("multiplicity and dimension must be positive");
  const Rational threshold = Rational(d + 1, 2) - Rational(r * r);
  if (mu_max < threshold) return 0;
  const Rational top = mu_max + Rational(r * r) + harmonic_offset(r) + Rational(d - 1, 2);
  return Rational(r) * gen_binomial(top, static_cast<unsigned long>(d));
}

SectionCounts lepotier_counts(const DecomposableSheaf& sheaf, const GeneratingSheafSpec& generating,
                              const StackyCurve& curve, long long m) {
  if (curve.genus != 0) throw UnsupportedGenusError();
  const auto degrees = f_e_summand_degrees(sheaf, generating, curve);
  const long long c = curve.polarization_degree;
  Int h0 = 0;
  for (const long long d : degrees) {
    const long long twisted = d + m * c;
    if (twisted >= 0) h0 += static_cast<long>(twisted + 1);  // h^0(O(n)) = n + 1 on the projective line
  }
  const QPoly p = modified_hilbert(sheaf, generating, curve);
  const Rational multiplicity = alpha_coeffs(p).back();
  SectionCounts out;
  out.h0 = h0;
  out.r_times_reduced = multiplicity * reduced_poly(p)(Rational(m));
  return out;
}

long long regularity_genus0(const DecomposableSheaf& sheaf, const GeneratingSheafSpec& generating,
                            const StackyCurve& curve) {
  if (curve.genus != 0) throw UnsupportedGenusError();
  const auto degrees = f_e_summand_degrees(sheaf, generating, curve);
  const long long c = curve.polarization_degree;
  // m-regular iff h^1 vanishes at the twist m-1: d + (m-1)c >= -1 for all summands.
  long long reg = 0;
  bool first = true;
  for (const long long d : degrees) {
    const long long need = ceil_div(-1 - d + c, c);
    if (first || need > reg) reg = need;
    first = false;
  }
  return reg;
}

}  // namespace orbistab
