#include "orbistab/lattice.hpp"

#include <algorithm>
#include <random>

namespace orbistab {

std::string SubobjectLattice::node_label(std::size_t v) const {
  if (v < labels.size() && !labels[v].empty()) return labels[v];
  return "node" + std::to_string(v);
}

std::string SubobjectLattice::graded_label(std::size_t upper, std::size_t lower) const {
  if (piece_label) return piece_label(upper, lower);
  return node_label(upper) + "/" + node_label(lower);
}

namespace {

void check_poles(const SubobjectLattice& lattice) {
  if (lattice.node_count == 0 || lattice.hilbert.size() != lattice.node_count || !lattice.leq)
    throw InconsistentLatticeError("malformed lattice");
  if (!lattice.hilbert[lattice.bottom].is_zero())
    throw InconsistentLatticeError("bottom node must carry the zero polynomial");
  if (lattice.hilbert[lattice.top].is_zero())
    throw InconsistentLatticeError("top node must carry a nonzero polynomial");
}

// Maximal destabilizer of the quotient by `base`: computed over the nodes
// above base with polynomials P(.) - P(base).
std::size_t max_destabilizing_above(const SubobjectLattice& lattice, std::size_t base) {
  const QPoly& base_poly = lattice.hilbert[base];

  bool have_best = false;
  QPoly best_reduced;
  std::vector<std::size_t> candidates;
  for (std::size_t v = 0; v < lattice.node_count; ++v) {
    if (v == base || !lattice.leq(base, v)) continue;
    const QPoly graded = lattice.hilbert[v] - base_poly;
    QPoly reduced;
    try {
      reduced = reduced_poly(graded);
    } catch (const Error&) {
      throw InconsistentLatticeError("node " + lattice.node_label(v) +
                                     " has a degenerate quotient polynomial");
    }
    if (!have_best) {
      have_best = true;
      best_reduced = reduced;
      candidates = {v};
      continue;
    }
    const auto cmp = compare_at_infinity(reduced, best_reduced);
    if (cmp == std::strong_ordering::greater) {
      best_reduced = reduced;
      candidates = {v};
    } else if (cmp == std::strong_ordering::equal) {
      candidates.push_back(v);
    }
  }
  if (!have_best) throw InconsistentLatticeError("no node above " + lattice.node_label(base));

  std::vector<std::size_t> maximal;
  for (const std::size_t v : candidates) {
    bool is_maximal = true;
    for (const std::size_t w : candidates) {
      if (w != v && lattice.leq(v, w)) {
        is_maximal = false;
        break;
      }
    }
    if (is_maximal) maximal.push_back(v);
  }
  if (maximal.size() != 1)
    throw InconsistentLatticeError("maximal destabilizer is not unique");
  return maximal.front();
}

}  // namespace

std::size_t max_destabilizing(const SubobjectLattice& lattice) {
  check_poles(lattice);
  return max_destabilizing_above(lattice, lattice.bottom);
}

Filtration hn(const SubobjectLattice& lattice) {
  check_poles(lattice);
  Filtration f;
  f.chain.push_back(lattice.bottom);
  std::size_t current = lattice.bottom;
  while (current != lattice.top) {
    const std::size_t next = max_destabilizing_above(lattice, current);
    f.graded.push_back(lattice.hilbert[next] - lattice.hilbert[current]);
    f.chain.push_back(next);
    current = next;
  }
  for (std::size_t i = 0; i + 1 < f.graded.size(); ++i) {
    if (compare_at_infinity(reduced_poly(f.graded[i]), reduced_poly(f.graded[i + 1])) !=
        std::strong_ordering::greater)
      throw InconsistentLatticeError("graded reduced polynomials fail to decrease");
  }
  return f;
}

bool operator<(const JhPiece& a, const JhPiece& b) {
  if (a.label != b.label) return a.label < b.label;
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  const auto& ca = a.poly.coeffs();
  const auto& cb = b.poly.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  }
  return false;
}

JhResult jh(const SubobjectLattice& lattice, std::uint64_t choice_seed) {
  check_poles(lattice);
  {
    const Filtration f = hn(lattice);
    if (f.chain.size() != 2) throw NotSemistableError();
  }
  JhResult result;
  result.reduced = reduced_poly(lattice.hilbert[lattice.top]);

  std::mt19937_64 rng(choice_seed);
  std::size_t current = lattice.bottom;
  while (current != lattice.top) {
    // Nodes strictly above the current one whose graded piece keeps the
    // reduced polynomial of the top.
    std::vector<std::size_t> candidates;
    for (std::size_t v = 0; v < lattice.node_count; ++v) {
      if (v == current || !lattice.leq(current, v)) continue;
      const QPoly graded = lattice.hilbert[v] - lattice.hilbert[current];
      if (graded.is_zero()) continue;
      if (reduced_poly(graded) == result.reduced) candidates.push_back(v);
    }
    std::vector<std::size_t> minimal;
    for (const std::size_t v : candidates) {
      bool is_minimal = true;
      for (const std::size_t w : candidates) {
        if (w != v && lattice.leq(w, v)) {
          is_minimal = false;
          break;
        }
      }
      if (is_minimal) minimal.push_back(v);
    }
    if (minimal.empty())
      throw InconsistentLatticeError("no admissible refinement step above " +
                                     lattice.node_label(current));
    const std::size_t pick = minimal[rng() % minimal.size()];
    result.pieces.push_back(
        JhPiece{lattice.graded_label(pick, current),
                lattice.hilbert[pick] - lattice.hilbert[current]});
    current = pick;
  }
  std::sort(result.pieces.begin(), result.pieces.end());
  return result;
}

bool s_equivalent(const JhResult& a, const JhResult& b) {
  if (!(a.reduced == b.reduced)) return false;
  return a.pieces == b.pieces;
}

Filtration torsion_filtration(const SubobjectLattice& lattice) {
  check_poles(lattice);
  const int top_degree = lattice.hilbert[lattice.top].degree();

  Filtration f;
  f.chain.push_back(lattice.bottom);
  for (int dim = 0; dim <= top_degree; ++dim) {
    std::vector<std::size_t> nodes;
    for (std::size_t v = 0; v < lattice.node_count; ++v)
      if (lattice.hilbert[v].degree() <= dim) nodes.push_back(v);
    std::vector<std::size_t> maximal;
    for (const std::size_t v : nodes) {
      bool is_maximal = true;
      for (const std::size_t w : nodes) {
        if (w != v && lattice.leq(v, w)) {
          is_maximal = false;
          break;
        }
      }
      if (is_maximal) maximal.push_back(v);
    }
    if (maximal.size() != 1)
      throw InconsistentLatticeError("no unique maximal subobject in dimension " +
                                     std::to_string(dim));
    const std::size_t t = maximal.front();
    if (t != f.chain.back()) {
      f.graded.push_back(lattice.hilbert[t] - lattice.hilbert[f.chain.back()]);
      f.chain.push_back(t);
    }
  }
  if (f.chain.back() != lattice.top)
    throw InconsistentLatticeError("torsion filtration does not reach the top");
  return f;
}

SubobjectLattice build_lattice(const DecomposableSheaf& sheaf,
                               const GeneratingSheafSpec& generating,
                               const StackyCurve& curve) {
  validate(sheaf, curve);
  if (sheaf.is_zero()) throw ZeroSheafError();
  const std::size_t n = sheaf.line_summands.size() + sheaf.torsion_summands.size();
  if (n > 16) throw TooLargeError("more than 16 summands");

  std::vector<QPoly> summand_poly;
  std::vector<std::string> summand_name;
  summand_poly.reserve(n);
  for (const auto& line : sheaf.line_summands) {
    summand_poly.push_back(modified_hilbert(line, generating, curve));
    summand_name.push_back(summand_label(line));
  }
  for (const auto& tor : sheaf.torsion_summands) {
    DecomposableSheaf single;
    single.torsion_summands.push_back(tor);
    summand_poly.push_back(modified_hilbert(single, generating, curve));
    summand_name.push_back(summand_label(tor));
  }

  const std::size_t count = std::size_t{1} << n;
  SubobjectLattice lattice;
  lattice.node_count = count;
  lattice.bottom = 0;
  lattice.top = count - 1;
  lattice.leq = [](std::size_t a, std::size_t b) { return (a & ~b) == 0; };
  lattice.hilbert.resize(count);
  lattice.labels.resize(count);
  lattice.labels[0] = "0";
  for (std::size_t mask = 1; mask < count; ++mask) {
    const std::size_t low = mask & (~mask + 1);  // lowest set bit
    std::size_t low_index = 0;
    while ((std::size_t{1} << low_index) != low) ++low_index;
    lattice.hilbert[mask] = lattice.hilbert[mask ^ low] + summand_poly[low_index];
    std::string label;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) {
        if (!label.empty()) label += "+";
        label += summand_name[i];
      }
    }
    lattice.labels[mask] = std::move(label);
  }
  lattice.piece_label = [names = summand_name](std::size_t upper, std::size_t lower) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if ((upper & ~lower) & (std::size_t{1} << i)) {
        if (!out.empty()) out += "+";
        out += names[i];
      }
    }
    return out.empty() ? std::string("0") : out;
  };
  return lattice;
}

}  // namespace orbistab
