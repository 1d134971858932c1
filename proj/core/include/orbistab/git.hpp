#pragma once

// Hilbert-Mumford weights of one-parameter subgroups acting on quotient
// points, and the induced numerical (semi)stability checks.

#include <vector>

#include "orbistab/qpoly.hpp"

namespace orbistab {

// One weight space V_n of a 1-parameter subgroup together with the Hilbert
// polynomial of the induced graded piece of the quotient sheaf.
struct WeightEntry {
  long long weight = 0;
  long long dim = 0;
  QPoly poly;
};

// Weight of the induced action on the fiber of the linearization at level l:
// sum_n n * P_n(l).
Rational hm_weight(const std::vector<WeightEntry>& entries, long long l);

// Dimensions add up to the total.
bool weights_dimension_sum(const std::vector<WeightEntry>& entries, long long total_dim);

// Special-linear balance: sum_n n * dim V_n = 0.
bool weights_special_linear(const std::vector<WeightEntry>& entries);

// A subspace V' with the polynomial of the subsheaf it generates.
struct SubspacePair {
  long long dim = 0;
  QPoly poly;
};

// dim(V) * P'(l) >= dim(V') * P(l) for every pair (strict: >).
bool git_semistable_check(long long total_dim, const QPoly& total,
                          const std::vector<SubspacePair>& pairs, long long l, bool strict);

// The same comparison in the eventual order (all large l at once).
bool git_semistable_check_eventual(long long total_dim, const QPoly& total,
                                   const std::vector<SubspacePair>& pairs, bool strict);

// False iff some pair carries the zero polynomial with positive dimension:
// such a subspace would have to map to zero sections.
bool validation_injectivity(const std::vector<SubspacePair>& pairs);

}  // namespace orbistab
