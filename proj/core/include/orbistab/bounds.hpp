#pragma once

// Quantitative boundedness machinery: the inductive regularity polynomials
// P_i, the Castelnuovo-Mumford regularity bound they yield from section
// bounds, the global-generation twist for End of a generating sheaf, the
// maximal-slope estimate for pushforwards of slope-semistable sheaves, the
// Langer section bound, and exact section counts on genus-zero curves.

#include <vector>

#include "orbistab/curve.hpp"
#include "orbistab/rational.hpp"

namespace orbistab {

// P_{-1} = 0 and
//   P_i(x_0,...,x_i) = P_{i-1}(x_1,...,x_i)
//                      + sum_{j=0}^{i} x_j * binomial(P_{i-1}(x_1,...,x_i) - 1 + j, j),
// with the integer-top binomial, so binomial(-1, 0) = 1 at the base case.
// xs must have exactly i+1 entries (empty for i = -1).
Int kleiman_poly(long long i, const std::vector<Int>& xs);

// P_r(c_0,...,c_r) with c_i = max(b_i - a_i, 0): an m-regularity bound from
// coefficients a_i of the Hilbert polynomial in the binomial basis
// sum a_i binomial(m+i, i) and section bounds b_i along hyperplane slices.
Int regularity_bound(const std::vector<Int>& binomial_coeffs, const std::vector<Int>& section_bounds);

// Least nonnegative twist making pi_* End(E) globally generated on a
// genus-zero base: every pushforward summand degree plus mtilde * c >= 0.
long long find_mtilde(const GeneratingSheafSpec& generating, const StackyCurve& curve);

// For slope-semistable locally free F: the maximal coarse slope among the
// pushforward summands is at most deg(F)/rank(F) + mtilde * deg O_X(1).
// Returns the verdict of that inequality (a theorem; false signals a bug or
// bad inputs).
bool slope_bound_check(const DecomposableSheaf& sheaf, const GeneratingSheafSpec& generating,
                       const StackyCurve& curve, long long mtilde);

// f(r) = -1 + sum_{i=1}^{r} 1/i.
Rational harmonic_offset(long long r);

// Section bound for a pure d-dimensional sheaf of multiplicity r with
// maximal slope mu_max:
//   0                                                  if mu_max < (d+1)/2 - r^2,
//   r * binomial(mu_max + r^2 + f(r) + (d-1)/2, d)     otherwise.
Rational langer_h0_bound(const Rational& mu_max, long long r, long long d);

struct SectionCounts {
  Int h0;                   // exact h^0 of the pushforward, twisted by m
  Rational r_times_reduced; // multiplicity times reduced polynomial at m
};

// Exact genus-zero section count of pi_*(F (x) E^dual)(m) next to the
// count r * p(m) that semistability equates it with for large m.
SectionCounts lepotier_counts(const DecomposableSheaf& sheaf, const GeneratingSheafSpec& generating,
                              const StackyCurve& curve, long long m);

// Least m such that the pushforward of F is Castelnuovo-Mumford m-regular
// (genus-zero base).
long long regularity_genus0(const DecomposableSheaf& sheaf, const GeneratingSheafSpec& generating,
                            const StackyCurve& curve);

}  // namespace orbistab
