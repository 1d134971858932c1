#pragma once

// Sheaves on the trivial mu_a-gerbe over a stacky curve. Every quasicoherent
// sheaf decomposes into character eigensheaves, and the only morphism between
// sheaves of different characters is zero, so subobjects never mix
// characters. The generating sheaf is the curve-level generating sheaf
// tensored with one character line per entry of `character_twists`; its
// chi-eigenpart sees exactly the components of character chi, which makes
// the total Hilbert polynomial split into per-character pieces.

#include <map>
#include <vector>

#include "orbistab/curve.hpp"

namespace orbistab {

struct GerbeSheaf {
  long long band_order = 1;                       // order a of the banding group mu_a
  StackyCurve base;
  GeneratingSheafSpec base_generating;            // curve-level factor of the generating sheaf
  std::vector<long long> character_twists;        // characters of the gerbe-level summands
  std::map<long long, DecomposableSheaf> components;  // character in [0, a) -> eigensheaf

  // Multiplicity of character chi among the twists.
  long long twist_multiplicity(long long chi) const;
};

// Checks: a >= 1, characters in range, at least one nonempty component,
// every character mod a hit by the twist list, components valid on the base.
void validate(const GerbeSheaf& sheaf);

struct GerbeSplitPart {
  long long character = 0;
  QPoly poly;  // chi-part of the Hilbert polynomial
};

// Per-character twisted polynomials, empty components omitted.
std::vector<GerbeSplitPart> split(const GerbeSheaf& sheaf);

// The Hilbert polynomial of the whole sheaf.
QPoly total_poly(const GerbeSheaf& sheaf);

// Sum of the split parts equals the total polynomial.
bool poly_split_check(const GerbeSheaf& sheaf);

// Direct-sum criterion: semistable iff every nonempty component is
// semistable and all components share one reduced polynomial; stable iff a
// single nonempty component that is stable.
StabilityVerdict semistable_gerbe(const GerbeSheaf& sheaf);

// The tuple (P_chi) over all characters 0..a-1, zero entries for empty
// components.
std::vector<QPoly> component_label(const GerbeSheaf& sheaf);

// Tensoring with the character s: components are relabeled chi -> chi + s
// and the generating twists move along, so the geometric content (and every
// polynomial) is unchanged up to the relabeling.
GerbeSheaf twist(const GerbeSheaf& sheaf, long long s);

}  // namespace orbistab
