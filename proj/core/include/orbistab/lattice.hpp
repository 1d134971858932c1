#pragma once

// Finite formal subobject lattices and the filtration algorithms that run on
// them: maximal destabilizing subobject, Harder-Narasimhan and Jordan-Holder
// filtrations, torsion filtration, S-equivalence of graded objects.
//
// The lattice is trusted as the universe of subobjects: nodes form a finite
// poset with a distinguished bottom (the zero subobject, zero polynomial) and
// top (the whole object), and every node carries an exact Hilbert polynomial.
// Whether those nodes faithfully enumerate the coherent subsheaves of an
// actual object is the builder's responsibility. When a uniqueness property
// that holds for every honest sheaf lattice fails, the algorithms throw
// InconsistentLatticeError instead of guessing.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orbistab/curve.hpp"
#include "orbistab/qpoly.hpp"

namespace orbistab {

struct SubobjectLattice {
  std::size_t node_count = 0;
  std::size_t bottom = 0;
  std::size_t top = 0;
  std::function<bool(std::size_t, std::size_t)> leq;  // reflexive partial order
  std::vector<QPoly> hilbert;                         // one polynomial per node
  std::vector<std::string> labels;                    // optional node names
  // Optional name for a graded piece upper/lower; falls back to the node labels.
  std::function<std::string(std::size_t, std::size_t)> piece_label;

  std::string node_label(std::size_t v) const;
  std::string graded_label(std::size_t upper, std::size_t lower) const;
};

struct Filtration {
  std::vector<std::size_t> chain;  // strictly increasing, bottom first, top last
  std::vector<QPoly> graded;       // graded[i] = P(chain[i+1]) - P(chain[i])
};

// The node != bottom maximizing the reduced polynomial in the eventual
// order, and among those the unique inclusion-maximal one. Equals top iff
// the object is semistable.
std::size_t max_destabilizing(const SubobjectLattice& lattice);

// Iterates the maximal destabilizer on successive quotients. Graded reduced
// polynomials strictly decrease.
Filtration hn(const SubobjectLattice& lattice);

struct JhPiece {
  std::string label;
  QPoly poly;

  friend bool operator==(const JhPiece&, const JhPiece&) = default;
};
bool operator<(const JhPiece& a, const JhPiece& b);

struct JhResult {
  QPoly reduced;                // common reduced polynomial of every piece
  std::vector<JhPiece> pieces;  // sorted; a canonical form of the multiset
};

// A maximal chain whose graded pieces all have the reduced polynomial of the
// top; the returned multiset does not depend on the seed.
JhResult jh(const SubobjectLattice& lattice, std::uint64_t choice_seed);

// Graded multisets match (equal reduced polynomial and equal pieces).
// Objects with different reduced polynomials are never S-equivalent.
bool s_equivalent(const JhResult& a, const JhResult& b);

// Chain of the unique maximal nodes of polynomial degree <= i, one step per
// dimension that actually occurs.
Filtration torsion_filtration(const SubobjectLattice& lattice);

// All sub-sums of the summands of a decomposable sheaf, ordered by
// containment of index sets; at most 16 summands.
SubobjectLattice build_lattice(const DecomposableSheaf& sheaf,
                               const GeneratingSheafSpec& generating,
                               const StackyCurve& curve);

}  // namespace orbistab
