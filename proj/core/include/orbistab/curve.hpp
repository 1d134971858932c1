#pragma once

// Explicit geometry of root stacks over smooth projective curves.
//
// Conventions. A StackyCurve is the stack obtained from a smooth projective
// curve of genus g by adjoining, for each entry r_i of `stacky_points`, an
// r_i-th root of a marked point p_i (the points are distinct). O_X(1) on the
// coarse curve has degree c = polarization_degree. An OrbiLineBundle
// (e; k_1,...,k_n) is pi^*M (+ sum_i k_i D_i) with deg M = e, where D_i is
// the reduced orbifold divisor over p_i. Since O(r_i D_i) is the pullback of
// O(p_i), the canonical exponent range is 0 <= k_i < r_i, and the
// pushforward to the coarse curve of (e; k) is the line bundle of degree
// e + sum_i floor(k_i / r_i).
//
// A generating sheaf is described by one twist list per stacky point; its
// summands are the orbifold line bundles O(sum_i l_i D_i) over all choices
// of l_i from the lists. The default lists 0..r_i-1 hit every stabilizer
// character exactly once per point, which keeps the sheaf balanced; the
// inclusive lists 0..r_i duplicate the trivial character and are kept as an
// opt-in variant.

#include <cstddef>
#include <string>
#include <vector>

#include "orbistab/character.hpp"
#include "orbistab/qpoly.hpp"

namespace orbistab {

struct StackyCurve {
  long long genus = 0;
  long long polarization_degree = 1;       // degree of O_X(1) on the coarse curve
  std::vector<long long> stacky_points;    // multiplicities r_i >= 1
};

void validate(const StackyCurve& curve);

struct OrbiLineBundle {
  long long base_degree = 0;
  std::vector<long long> exponents;        // one per stacky point

  friend bool operator==(const OrbiLineBundle&, const OrbiLineBundle&) = default;
};

inline constexpr long long kGenericPoint = -1;

struct TorsionSummand {
  long long location = kGenericPoint;      // index into stacky_points, or kGenericPoint
  CharacterRep rep;                        // modulus = multiplicity of the location (1 if generic)
};

struct DecomposableSheaf {
  std::vector<OrbiLineBundle> line_summands;
  std::vector<TorsionSummand> torsion_summands;

  bool is_zero() const { return line_summands.empty() && torsion_summands.empty(); }
  bool locally_free() const { return torsion_summands.empty() && !line_summands.empty(); }

  static DecomposableSheaf structure_sheaf(const StackyCurve& curve);
  static DecomposableSheaf line(OrbiLineBundle bundle);
};

void validate(const DecomposableSheaf& sheaf, const StackyCurve& curve);

std::string summand_label(const OrbiLineBundle& line);
std::string summand_label(const TorsionSummand& torsion);

class GeneratingSheafSpec {
 public:
  // Twist lists 0..r_i-1 at every point: every character once per point.
  static GeneratingSheafSpec balanced(const StackyCurve& curve);
  // Twist lists 0..r_i inclusive: the level-indexed variant.
  static GeneratingSheafSpec level_range(const StackyCurve& curve);
  // Arbitrary lists; every character mod r_i must appear at point i.
  static GeneratingSheafSpec from_twists(std::vector<std::vector<long long>> per_point,
                                         const StackyCurve& curve);

  const std::vector<std::vector<long long>>& per_point_twists() const { return per_point_; }
  long long rank() const;
  // All summands O(sum_i l_i D_i), base degree 0, in odometer order (last
  // point varies fastest).
  std::vector<OrbiLineBundle> summands() const;
  // True iff at every stacky point each character appears with the same
  // multiplicity across the summands.
  bool is_balanced(const StackyCurve& curve) const;

 private:
  std::vector<std::vector<long long>> per_point_;
};

enum class StabilityVerdict { stable, strictly_semistable, unstable };
const char* to_string(StabilityVerdict v);

// Canonical form with 0 <= k_i < r_i; the excess moves into the base degree.
OrbiLineBundle normalize(const OrbiLineBundle& line, const StackyCurve& curve);

// Degree of the pushforward to the coarse curve: e + sum_i floor(k_i / r_i).
long long pushforward_degree(const OrbiLineBundle& line, const StackyCurve& curve);

// Euler characteristic via Riemann-Roch on the coarse curve.
long long euler_char(const OrbiLineBundle& line, const StackyCurve& curve);

// Orbifold (parabolic) degree e + sum_i k_i / r_i.
Rational degree_stacky(const OrbiLineBundle& line, const StackyCurve& curve);
Rational degree_stacky(const DecomposableSheaf& sheaf, const StackyCurve& curve);

// The Hilbert polynomial m -> chi(F (x) E^dual (x) pi^* O_X(m)), assembled
// summand by summand; line pieces contribute degree-1 polynomials, torsion
// pieces character-counting constants.
QPoly modified_hilbert(const DecomposableSheaf& sheaf, const GeneratingSheafSpec& generating,
                       const StackyCurve& curve);
QPoly modified_hilbert(const OrbiLineBundle& line, const GeneratingSheafSpec& generating,
                       const StackyCurve& curve);

// Residual of the degree identity
//   deg(F)/r - [alpha_0(F)/(r e) - alpha_0(O)/e],
// identically zero for locally free F when the generating sheaf is balanced.
Rational degree_identity_residual(const DecomposableSheaf& sheaf,
                                  const GeneratingSheafSpec& generating,
                                  const StackyCurve& curve);

// Coarse degrees of the pushforward summands pi_*(L_i (x) E_j^dual), line
// summands major, generating summands minor.
std::vector<long long> f_e_summand_degrees(const DecomposableSheaf& sheaf,
                                           const GeneratingSheafSpec& generating,
                                           const StackyCurve& curve);

struct ParabolicLevel {
  long long level = 0;
  std::vector<long long> degrees;  // one per line summand
};

// Level data of the parabolic filtration at one stacky point: degrees of
// pi_*(F (-l D_i)) for l = 0..r_i. Level r_i repeats level 0 shifted by -1.
std::vector<ParabolicLevel> parabolic_levels(const DecomposableSheaf& sheaf,
                                             const StackyCurve& curve,
                                             std::size_t point_index);

// Reconstructs the unique orbifold line bundle (on the one-point root stack
// of multiplicity r = #levels - 1) whose level data is the input. The data
// must be weakly decreasing with a single drop of 1 across levels 0..r.
OrbiLineBundle line_from_parabolic(const std::vector<ParabolicLevel>& levels);

// Slope alpha_0/alpha_1 of the modified Hilbert polynomial of a single line
// bundle.
Rational mu_hat(const OrbiLineBundle& line, const GeneratingSheafSpec& generating,
                const StackyCurve& curve);

// For a locally free decomposable sheaf: semistable iff all line summands
// share one slope, stable iff moreover there is a single summand.
StabilityVerdict semistable(const DecomposableSheaf& sheaf, const GeneratingSheafSpec& generating,
                            const StackyCurve& curve);

struct HnGroup {
  std::vector<std::size_t> summands;  // indices into line_summands
  QPoly graded;
};

// Summands grouped by strictly decreasing slope; each group is a semistable
// graded piece of the filtration of the direct sum.
std::vector<HnGroup> hn_direct(const DecomposableSheaf& sheaf, const GeneratingSheafSpec& generating,
                               const StackyCurve& curve);

long long floor_div(long long a, long long b);
long long ceil_div(long long a, long long b);

}  // namespace orbistab
