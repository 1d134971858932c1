#include "doctest.h"
#include "orbistab/gerbe.hpp"
#include "orbistab/lattice.hpp"

#include "../support/generators.hpp"

using namespace orbistab;

namespace {

GerbeSheaf two_component_example() {
  GerbeSheaf sheaf;
  sheaf.band_order = 2;
  sheaf.base = StackyCurve{0, 1, {}};
  sheaf.base_generating = GeneratingSheafSpec::balanced(sheaf.base);
  sheaf.character_twists = {0, 1};
  sheaf.components[0] = DecomposableSheaf::line(OrbiLineBundle{0, {}});
  sheaf.components[1] = DecomposableSheaf::line(OrbiLineBundle{0, {}});
  return sheaf;
}

}  // namespace

TEST_SUITE("gerbe") {

TEST_CASE("split") {
  auto sheaf = two_component_example();
  const auto parts = split(sheaf);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].character == 0);
  CHECK(parts[0].poly == QPoly({Rational(1), Rational(1)}));
  CHECK(parts[1].poly == QPoly({Rational(1), Rational(1)}));

  GerbeSheaf single = sheaf;
  single.components.erase(1);
  const auto one = split(single);
  REQUIRE(one.size() == 1);
  CHECK(one[0].poly == total_poly(single));

  GerbeSheaf empty = sheaf;
  empty.components.clear();
  CHECK_THROWS_AS(split(empty), ZeroSheafError);
}

TEST_CASE("polynomial splitting is exact") {
  CHECK(poly_split_check(two_component_example()));
  testgen::Rng rng(211);
  for (int iter = 0; iter < 100; ++iter) {
    const auto sheaf = testgen::random_gerbe(rng, 4, true);
    CHECK(poly_split_check(sheaf));
  }
}

TEST_CASE("stability through the eigendecomposition") {
  GerbeSheaf single = two_component_example();
  single.components.erase(1);
  CHECK(semistable_gerbe(single) == StabilityVerdict::stable);

  CHECK(semistable_gerbe(two_component_example()) == StabilityVerdict::strictly_semistable);

  GerbeSheaf skew = two_component_example();
  skew.components[1] = DecomposableSheaf::line(OrbiLineBundle{3, {}});
  CHECK(semistable_gerbe(skew) == StabilityVerdict::unstable);
}

TEST_CASE("stability agrees with the product-lattice engine") {
  // Subobjects never mix characters, so the subobject lattice of the gerbe
  // sheaf is the sub-sum lattice over all (character, summand) pairs with
  // the polynomials scaled by the twist multiplicities.
  testgen::Rng rng(223);
  for (int iter = 0; iter < 60; ++iter) {
    const auto sheaf = testgen::random_gerbe(rng, 3, true);
    std::vector<QPoly> summand_polys;
    for (const auto& [chi, component] : sheaf.components) {
      if (component.is_zero()) continue;
      for (const auto& l : component.line_summands)
        summand_polys.push_back(Rational(sheaf.twist_multiplicity(chi)) *
                                modified_hilbert(l, sheaf.base_generating, sheaf.base));
    }
    if (summand_polys.size() > 12) continue;
    SubobjectLattice lattice;
    lattice.node_count = std::size_t{1} << summand_polys.size();
    lattice.bottom = 0;
    lattice.top = lattice.node_count - 1;
    lattice.leq = [](std::size_t a, std::size_t b) { return (a & ~b) == 0; };
    lattice.hilbert.resize(lattice.node_count);
    for (std::size_t mask = 1; mask < lattice.node_count; ++mask) {
      const std::size_t low = mask & (~mask + 1);
      std::size_t idx = 0;
      while ((std::size_t{1} << idx) != low) ++idx;
      lattice.hilbert[mask] = lattice.hilbert[mask ^ low] + summand_polys[idx];
    }
    const bool engine_semistable = hn(lattice).chain.size() == 2;
    const auto verdict = semistable_gerbe(sheaf);
    CHECK(engine_semistable == (verdict != StabilityVerdict::unstable));
  }
}

TEST_CASE("component labels") {
  const auto label = component_label(two_component_example());
  REQUIRE(label.size() == 2);
  CHECK(label[0] == label[1]);

  GerbeSheaf single = two_component_example();
  single.components.erase(1);
  const auto sparse = component_label(single);
  CHECK_FALSE(sparse[0].is_zero());
  CHECK(sparse[1].is_zero());
}

TEST_CASE("twisting permutes the labels") {
  const auto sheaf = two_component_example();
  CHECK(component_label(twist(sheaf, 0)) == component_label(sheaf));
  CHECK(component_label(twist(sheaf, 2)) == component_label(sheaf));

  testgen::Rng rng(227);
  for (int iter = 0; iter < 60; ++iter) {
    const auto f = testgen::random_gerbe(rng, 4, false);
    const long long a = f.band_order;
    const long long s = rng.range(0, 2 * a);
    const auto rotated = component_label(twist(f, s));
    const auto base = component_label(f);
    for (long long chi = 0; chi < a; ++chi)
      CHECK(rotated[static_cast<std::size_t>(((chi + s) % a + a) % a)] ==
            base[static_cast<std::size_t>(chi)]);
    // Twisting twice by s equals twisting once by 2s.
    CHECK(component_label(twist(twist(f, s), s)) == component_label(twist(f, 2 * s)));
    CHECK(semistable_gerbe(twist(f, s)) == semistable_gerbe(f));
  }
}

}  // TEST_SUITE
