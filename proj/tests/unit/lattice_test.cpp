#include "doctest.h"
#include "orbistab/lattice.hpp"

#include <algorithm>

#include "../support/generators.hpp"

using namespace orbistab;

namespace {

// Coarse projective line, trivial generating sheaf.
const StackyCurve kP1{0, 1, {}};
const StackyCurve kStackyP1{0, 1, {2}};

OrbiLineBundle coarse(long long e) { return OrbiLineBundle{e, {}}; }

DecomposableSheaf sum(std::vector<OrbiLineBundle> lines) {
  DecomposableSheaf f;
  f.line_summands = std::move(lines);
  return f;
}

// Every maximal chain of a sub-sum lattice, as sorted piece multisets; the
// brute-force oracle for seed invariance.
void all_chain_multisets(const SubobjectLattice& lattice, std::size_t current,
                         std::vector<JhPiece>& acc, std::vector<std::vector<JhPiece>>& out) {
  if (current == lattice.top) {
    auto sorted = acc;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    return;
  }
  for (std::size_t v = 0; v < lattice.node_count; ++v) {
    if (v == current || !lattice.leq(current, v)) continue;
    // covers only
    bool is_cover = true;
    for (std::size_t w = 0; w < lattice.node_count; ++w) {
      if (w == current || w == v) continue;
      if (lattice.leq(current, w) && lattice.leq(w, v)) {
        is_cover = false;
        break;
      }
    }
    if (!is_cover) continue;
    acc.push_back(JhPiece{lattice.graded_label(v, current),
                          lattice.hilbert[v] - lattice.hilbert[current]});
    all_chain_multisets(lattice, v, acc, out);
    acc.pop_back();
  }
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("max destabilizing subobject") {
  const auto gen = GeneratingSheafSpec::balanced(kP1);

  const auto unstable = build_lattice(sum({coarse(2), coarse(0)}), gen, kP1);
  CHECK(max_destabilizing(unstable) == 0b01);  // the O(2) summand alone

  const auto single = build_lattice(sum({coarse(1)}), gen, kP1);
  CHECK(max_destabilizing(single) == single.top);

  const auto semistable_pair = build_lattice(sum({coarse(0), coarse(0)}), gen, kP1);
  CHECK(max_destabilizing(semistable_pair) == semistable_pair.top);
}

TEST_CASE("max destabilizing rejects ties between incomparable nodes") {
  // Two incomparable nodes share the maximal reduced polynomial and the top
  // does not attain it: no honest sheaf lattice looks like this.
  SubobjectLattice lattice;
  lattice.node_count = 4;
  lattice.bottom = 0;
  lattice.top = 3;
  lattice.leq = [](std::size_t a, std::size_t b) { return a == b || a == 0 || b == 3; };
  lattice.hilbert = {QPoly(), QPoly({Rational(2), Rational(1)}), QPoly({Rational(2), Rational(1)}),
                     QPoly({Rational(3), Rational(2)})};
  CHECK_THROWS_AS(max_destabilizing(lattice), InconsistentLatticeError);
}

TEST_CASE("hn filtration on the coarse line") {
  const auto gen = GeneratingSheafSpec::balanced(kP1);
  const auto lattice = build_lattice(sum({coarse(2), coarse(0)}), gen, kP1);
  const auto f = hn(lattice);
  REQUIRE(f.chain.size() == 3);
  CHECK(f.chain[0] == lattice.bottom);
  CHECK(f.chain[1] == 0b01);
  CHECK(f.chain[2] == lattice.top);
  CHECK(reduced_poly(f.graded[0]) == QPoly({Rational(3), Rational(1)}));
  CHECK(reduced_poly(f.graded[1]) == QPoly({Rational(1), Rational(1)}));

  const auto one_step = hn(build_lattice(sum({coarse(0), coarse(0)}), gen, kP1));
  CHECK(one_step.chain.size() == 2);
}

TEST_CASE("hn matches the direct slope grouping on the stacky line") {
  const auto gen = GeneratingSheafSpec::balanced(kStackyP1);
  DecomposableSheaf f;
  f.line_summands = {OrbiLineBundle{2, {0}}, OrbiLineBundle{0, {0}}, OrbiLineBundle{0, {0}}};
  const auto filtration = hn(build_lattice(f, gen, kStackyP1));
  REQUIRE(filtration.chain.size() == 3);
  const auto groups = hn_direct(f, gen, kStackyP1);
  REQUIRE(groups.size() == 2);
  CHECK(filtration.graded[0] == groups[0].graded);
  CHECK(filtration.graded[1] == groups[1].graded);
  // Second graded piece has multiplicity two.
  CHECK(alpha_coeffs(groups[1].graded).back() == Rational(4));
}

TEST_CASE("jh multiset is seed independent") {
  const auto gen = GeneratingSheafSpec::balanced(kStackyP1);
  DecomposableSheaf f;
  f.line_summands = {OrbiLineBundle{0, {1}}, OrbiLineBundle{0, {1}}, OrbiLineBundle{0, {1}}};
  const auto lattice = build_lattice(f, gen, kStackyP1);

  const auto a = jh(lattice, 1);
  const auto b = jh(lattice, 999);
  CHECK(a.pieces == b.pieces);
  REQUIRE(a.pieces.size() == 3);
  CHECK(a.pieces[0].poly == QPoly({Rational(2), Rational(2)}));

  // Enumerating every maximal chain gives the same single multiset.
  std::vector<std::vector<JhPiece>> multisets;
  std::vector<JhPiece> acc;
  all_chain_multisets(lattice, lattice.bottom, acc, multisets);
  REQUIRE(!multisets.empty());
  for (const auto& pieces : multisets) CHECK(pieces == a.pieces);
}

TEST_CASE("jh rejects unstable objects") {
  const auto gen = GeneratingSheafSpec::balanced(kP1);
  const auto lattice = build_lattice(sum({coarse(2), coarse(0)}), gen, kP1);
  CHECK_THROWS_AS(jh(lattice, 0), NotSemistableError);
}

TEST_CASE("jh of a stable object is itself") {
  const auto gen = GeneratingSheafSpec::balanced(kP1);
  const auto lattice = build_lattice(sum({coarse(3)}), gen, kP1);
  const auto result = jh(lattice, 5);
  REQUIRE(result.pieces.size() == 1);
  CHECK(result.pieces[0].poly == lattice.hilbert[lattice.top]);
}

TEST_CASE("s-equivalence") {
  const auto gen = GeneratingSheafSpec::balanced(kStackyP1);
  DecomposableSheaf f;
  f.line_summands = {OrbiLineBundle{0, {1}}, OrbiLineBundle{0, {1}}};
  const auto a = jh(build_lattice(f, gen, kStackyP1), 0);
  const auto b = jh(build_lattice(f, gen, kStackyP1), 17);
  CHECK(s_equivalent(a, a));
  CHECK(s_equivalent(a, b));

  DecomposableSheaf g;
  g.line_summands = {OrbiLineBundle{0, {0}}, OrbiLineBundle{0, {0}}};
  const auto c = jh(build_lattice(g, gen, kStackyP1), 0);
  CHECK_FALSE(s_equivalent(a, c));  // twist mismatch in the polynomials
}

TEST_CASE("torsion filtration") {
  const auto gen = GeneratingSheafSpec::balanced(kStackyP1);

  DecomposableSheaf mixed = DecomposableSheaf::structure_sheaf(kStackyP1);
  mixed.torsion_summands.push_back(TorsionSummand{0, CharacterRep::make(2, {0})});
  const auto lattice = build_lattice(mixed, gen, kStackyP1);
  const auto f = torsion_filtration(lattice);
  REQUIRE(f.chain.size() == 3);
  CHECK(f.chain[1] == 0b10);  // the skyscraper
  CHECK(f.graded[0].degree() == 0);
  CHECK(f.graded[1].degree() == 1);

  const auto torsion_free = torsion_filtration(
      build_lattice(DecomposableSheaf::structure_sheaf(kStackyP1), gen, kStackyP1));
  CHECK(torsion_free.chain.size() == 2);

  DecomposableSheaf pure_torsion;
  pure_torsion.torsion_summands.push_back(TorsionSummand{0, CharacterRep::make(2, {0})});
  const auto skyscraper = torsion_filtration(build_lattice(pure_torsion, gen, kStackyP1));
  REQUIRE(skyscraper.chain.size() == 2);
  CHECK(skyscraper.graded[0].degree() == 0);
}

TEST_CASE("build_lattice shape") {
  const auto gen = GeneratingSheafSpec::balanced(kP1);
  CHECK(build_lattice(sum({coarse(0)}), gen, kP1).node_count == 2);
  CHECK(build_lattice(sum({coarse(0), coarse(1)}), gen, kP1).node_count == 4);
  CHECK(build_lattice(sum({coarse(0), coarse(1), coarse(2)}), gen, kP1).node_count == 8);

  DecomposableSheaf big;
  for (int i = 0; i < 17; ++i) big.line_summands.push_back(coarse(i));
  CHECK_THROWS_AS(build_lattice(big, gen, kP1), TooLargeError);
  CHECK_THROWS_AS(build_lattice(DecomposableSheaf{}, gen, kP1), ZeroSheafError);
}

TEST_CASE("chain polynomials always add up to the top") {
  testgen::Rng rng(131);
  for (int iter = 0; iter < 50; ++iter) {
    const auto curve = testgen::random_curve(rng, 3, 3, 4);
    const auto gen = GeneratingSheafSpec::balanced(curve);
    const auto sheaf = testgen::random_locally_free(rng, curve, 4);
    const auto lattice = build_lattice(sheaf, gen, curve);
    const auto f = hn(lattice);
    QPoly total;
    for (const auto& piece : f.graded) total += piece;
    CHECK(total == lattice.hilbert[lattice.top]);
  }
}

}  // TEST_SUITE
