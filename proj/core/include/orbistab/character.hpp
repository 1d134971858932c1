#pragma once

// Character arithmetic for cyclic stabilizer groups mu_a. A zero-dimensional
// point object is described by the order of its stabilizer and the stabilizer
// representation on the fiber of its structure sheaf; twisting by O(-t) and
// taking invariants counts the characters congruent to t. Summing those
// counts over the summands of a generating sheaf gives the length-like
// invariant n used in the point tables.

#include <string>
#include <utility>
#include <vector>

#include "orbistab/errors.hpp"

namespace orbistab {

struct CharacterRep {
  long long modulus = 1;           // order a of the stabilizer mu_a
  std::vector<long long> chars;    // multiset of residues in [0, a), kept sorted

  // Validates the ranges and sorts the character multiset.
  static CharacterRep make(long long modulus, std::vector<long long> chars);

  friend bool operator==(const CharacterRep&, const CharacterRep&) = default;
};

// Multiplicity of the character (twist mod a) in the representation; the
// dimension of the invariants of rep tensored with chi^{-twist}.
long long character_multiplicity(const CharacterRep& rep, long long twist);

// Sum of the multiplicities over the twist list.
long long modified_length(const CharacterRep& rep, const std::vector<long long>& twists);

struct PointTableRow {
  std::string label;
  std::vector<long long> counts;  // one entry per twist, in twist order
  long long total = 0;
};

struct PointTable {
  std::vector<long long> twists;
  std::vector<PointTableRow> rows;
};

PointTable point_table(const std::vector<std::pair<std::string, CharacterRep>>& points,
                       const std::vector<long long>& twists);

// True iff the count vectors are pairwise distinct across the given points.
bool distinguishes(const std::vector<CharacterRep>& points,
                   const std::vector<long long>& twists);

// Comma separated, LF line endings, header "label,n_<t0>,...,n_<tk>,n".
std::string to_csv(const PointTable& table);

// The four reduced point classes of the weighted projective stack P(3,3,2)
// and the twist lists of the two generating sheaves used with them.
std::vector<std::pair<std::string, CharacterRep>> p332_points();
std::vector<long long> p332_minimal_twists();     // O + O(1) + O(2)
std::vector<long long> p332_separating_twists();  // O + O(2) + O(4) + O(3)

}  // namespace orbistab
