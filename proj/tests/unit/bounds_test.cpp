#include "doctest.h"
#include "orbistab/bounds.hpp"

#include "../support/generators.hpp"

using namespace orbistab;

namespace {

// Closed forms of the first regularity polynomials, unrolled by hand.
Int oracle_p0(long long x0) { return Int(static_cast<long>(x0)); }
Int oracle_p1(long long x0, long long x1) {
  return Int(static_cast<long>(x0 + x1 + x1 * x1));
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("regularity polynomial recursion") {
  CHECK(kleiman_poly(-1, {}) == 0);
  CHECK(kleiman_poly(0, {Int(5)}) == oracle_p0(5));
  CHECK(kleiman_poly(1, {Int(2), Int(3)}) == 14);
  CHECK(kleiman_poly(1, {Int(2), Int(3)}) == oracle_p1(2, 3));
  CHECK_THROWS_AS(kleiman_poly(1, {Int(2)}), ShapeMismatchError);
  CHECK_THROWS_AS(kleiman_poly(-2, {}), ShapeMismatchError);

  for (long long x0 = 0; x0 <= 10; ++x0) CHECK(kleiman_poly(0, {Int(static_cast<long>(x0))}) == oracle_p0(x0));
  for (long long x0 = 0; x0 <= 9; ++x0)
    for (long long x1 = 0; x1 <= 9; ++x1)
      CHECK(kleiman_poly(1, {Int(static_cast<long>(x0)), Int(static_cast<long>(x1))}) == oracle_p1(x0, x1));

  // Vanishes on zero input and is monotone in each argument over nonnegative inputs.
  CHECK(kleiman_poly(2, {Int(0), Int(0), Int(0)}) == 0);
  CHECK(kleiman_poly(3, {Int(0), Int(0), Int(0), Int(0)}) == 0);
  testgen::Rng rng(31);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<Int> xs = {Int(static_cast<long>(rng.range(0, 4))),
                           Int(static_cast<long>(rng.range(0, 4))),
                           Int(static_cast<long>(rng.range(0, 4)))};
    const Int base = kleiman_poly(2, xs);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      auto bumped = xs;
      bumped[j] += 1;
      CHECK(kleiman_poly(2, bumped) >= base);
    }
  }
}

TEST_CASE("regularity bound") {
  CHECK(regularity_bound({Int(5), Int(7)}, {Int(2), Int(3)}) == 0);  // all bounds below coefficients
  CHECK(regularity_bound({Int(1)}, {Int(3)}) == 2);                  // P_0(2)
  CHECK(regularity_bound({Int(1), Int(1)}, {Int(2), Int(3)}) == 7);  // P_1(1,2) = 1 + 2 + 4
  CHECK_THROWS_AS(regularity_bound({Int(1)}, {Int(1), Int(2)}), ShapeMismatchError);
  CHECK(regularity_bound({Int(0), Int(0)}, {Int(0), Int(0)}) >= 0);
}

TEST_CASE("global generation twist for End") {
  const StackyCurve p1{0, 1, {}};
  CHECK(find_mtilde(GeneratingSheafSpec::balanced(p1), p1) == 0);

  const StackyCurve stacky{0, 1, {2}};
  CHECK(find_mtilde(GeneratingSheafSpec::balanced(stacky), stacky) == 1);

  // O + pullback of O(3), written as a twist list on a multiplicity-1 point
  // (the exponent is the coarse twist there): End has a degree -3 summand.
  const StackyCurve plain{0, 1, {1}};
  CHECK(find_mtilde(GeneratingSheafSpec::from_twists({{0, 3}}, plain), plain) == 3);
  // Polarization of degree 2 halves the required twist, rounded up.
  const StackyCurve plain2{0, 2, {1}};
  CHECK(find_mtilde(GeneratingSheafSpec::from_twists({{0, 3}}, plain2), plain2) == 2);

  const StackyCurve genus1{1, 1, {2}};
  CHECK_THROWS_AS(find_mtilde(GeneratingSheafSpec::balanced(genus1), genus1),
                  UnsupportedGenusError);
}

TEST_CASE("maximal slope estimate") {
  const StackyCurve stacky{0, 1, {2}};
  const auto gen = GeneratingSheafSpec::balanced(stacky);
  const long long mtilde = find_mtilde(gen, stacky);
  CHECK(mtilde == 1);
  CHECK(slope_bound_check(DecomposableSheaf::structure_sheaf(stacky), gen, stacky, mtilde));
  CHECK(slope_bound_check(DecomposableSheaf::line(OrbiLineBundle{0, {1}}), gen, stacky, mtilde));

  // Trivial generating sheaf: boundary equality at the coarse slope.
  const StackyCurve p1{0, 1, {}};
  const auto trivial = GeneratingSheafSpec::balanced(p1);
  CHECK(slope_bound_check(DecomposableSheaf::line(OrbiLineBundle{5, {}}), trivial, p1, 0));

  DecomposableSheaf unstable;
  unstable.line_summands = {OrbiLineBundle{2, {0}}, OrbiLineBundle{0, {0}}};
  CHECK_THROWS_AS(slope_bound_check(unstable, gen, stacky, mtilde), NotSemistableError);
}

TEST_CASE("section bound") {
  CHECK(langer_h0_bound(Rational(-100), 1, 1) == Rational(0));
  CHECK(langer_h0_bound(Rational(3), 1, 1) == Rational(4));
  CHECK(langer_h0_bound(Rational(0), 2, 1) == Rational(9));
  // Branch boundary: at mu_max = (d+1)/2 - r^2 the binomial formula applies.
  CHECK(langer_h0_bound(Rational(0), 1, 1) == Rational(1));
  CHECK(langer_h0_bound(Rational(-1, 1000), 1, 1) == Rational(0));
  CHECK_THROWS_AS(langer_h0_bound(Rational(0), 0, 1), Error);
}

TEST_CASE("section counts on the stacky line") {
  const StackyCurve p1{0, 1, {}};
  const auto trivial = GeneratingSheafSpec::balanced(p1);
  const auto counts0 = lepotier_counts(DecomposableSheaf::structure_sheaf(p1), trivial, p1, 2);
  CHECK(counts0.h0 == 3);
  CHECK(counts0.r_times_reduced == Rational(3));

  const StackyCurve stacky{0, 1, {2}};
  const auto gen = GeneratingSheafSpec::balanced(stacky);
  const auto counts1 = lepotier_counts(DecomposableSheaf::structure_sheaf(stacky), gen, stacky, 2);
  CHECK(counts1.h0 == 5);
  CHECK(counts1.r_times_reduced == Rational(5));

  // Negative-degree summands contribute no sections.
  const auto counts2 =
      lepotier_counts(DecomposableSheaf::line(OrbiLineBundle{-3, {0}}), gen, stacky, 0);
  CHECK(counts2.h0 == 0);

  const StackyCurve genus2{2, 1, {2}};
  CHECK_THROWS_AS(lepotier_counts(DecomposableSheaf::structure_sheaf(genus2),
                                  GeneratingSheafSpec::balanced(genus2), genus2, 0),
                  UnsupportedGenusError);
}

TEST_CASE("regularity on the stacky line") {
  const StackyCurve stacky{0, 1, {2}};
  const auto gen = GeneratingSheafSpec::balanced(stacky);
  // Pushforward degrees [0, -1]: the degree -1 summand forces one twist.
  CHECK(regularity_genus0(DecomposableSheaf::structure_sheaf(stacky), gen, stacky) == 1);
  CHECK(regularity_genus0(DecomposableSheaf::line(OrbiLineBundle{-4, {0}}), gen, stacky) == 5);
  // Beyond the regularity the section count meets the polynomial exactly.
  const auto f = DecomposableSheaf::line(OrbiLineBundle{-4, {1}});
  const long long reg = regularity_genus0(f, gen, stacky);
  for (long long m = reg; m < reg + 4; ++m) {
    const auto counts = lepotier_counts(f, gen, stacky, m);
    CHECK(Rational(counts.h0) == counts.r_times_reduced);
  }
}

}  // TEST_SUITE
