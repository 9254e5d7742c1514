#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <utility>
#include <vector>

#include "borel/ideal.hpp"
#include "borel/io.hpp"

using namespace borel;

namespace {

StronglyStableIdeal I(const char* text, int nv) {
  return ideal_from_text(text, nv);
}

}  // namespace

TEST_CASE("minimalize drops divisible generators and sorts canonically") {
  CHECK(to_text(I("(x0^2, x0)", 3)) == "(x0)");
  CHECK(to_text(I("(x0*x1, x1^2, x0*x1^2)", 3)) == "(x0*x1, x1^2)");
  // canonical listing: degree ascending, lex descending within a degree
  CHECK(to_text(I("(x1^2, x0*x1, x0)", 3)) == "(x0, x1^2)");
}

TEST_CASE("strong stability is decided on the generators") {
  CHECK(is_strongly_stable(I("(x0^3, x0^2*x1, x0^2*x2)", 4)));
  CHECK(is_strongly_stable(I("(x0^2, x0*x1, x1^3)", 3)));
  CHECK(!is_strongly_stable(I("(x1)", 3)));

  auto v = find_borel_violation(I("(x1)", 3));
  REQUIRE(v.has_value());
  CHECK(v->gen == Monomial::var_power(3, 1));
  CHECK(v->to == 1);
  CHECK(v->from == 0);

  CHECK(!find_borel_violation(I("(x0^2, x0*x1, x1^3)", 3)).has_value());
}

TEST_CASE("saturation checks and saturate") {
  CHECK(is_saturated(I("(x0^3, x0^2*x1, x0^2*x2)", 4)));
  CHECK(!is_saturated(I("(x0, x1, x2)", 3)));
  CHECK(to_text(saturate(I("(x0*x3)", 4))) == "(x0)");
  CHECK(to_text(saturate(I("(x0^2, x0*x1, x1^2*x3)", 4))) ==
        "(x0^2, x0*x1, x1^2)");
  // idempotent on saturated input
  StronglyStableIdeal J = I("(x0^2, x0*x1, x1^3)", 3);
  CHECK(saturate(J) == J);
}

TEST_CASE("double saturation") {
  CHECK(to_text(double_saturate(I("(x0, x1^2, x1*x2^3)", 4))) == "(x0, x1)");
  CHECK(to_text(double_saturate(I("(x0^2, x0*x1, x0*x2, x1^3)", 4))) ==
        "(x0, x1^3)");
  StronglyStableIdeal J = I("(x0, x1^2)", 4);
  CHECK(double_saturate(J) == J);
}

TEST_CASE("ring restriction sets trailing variables to one") {
  StronglyStableIdeal lexI = I("(x0, x1^4, x1^3*x2^2, x1^3*x2*x3)", 5);
  CHECK(to_text(restrict_ring(lexI, 2)) == "(x0, x1^3)");
  CHECK(restrict_ring(lexI, 2).ring.num_vars == 3);
  CHECK(restrict_ring(lexI, 0) == lexI);
  CHECK(to_text(restrict_ring(
            I("(x0^2, x0*x1, x0*x2, x0*x3, x1^4, x1^3*x2)", 5), 1)) ==
        "(x0, x1^4, x1^3*x2)");
}

TEST_CASE("ring extension pads exponents") {
  StronglyStableIdeal small = I("(x0)", 2);
  StronglyStableIdeal big = extend_ring(small, AmbientRing{5});
  CHECK(big.ring.num_vars == 5);
  CHECK(to_text(big) == "(x0)");
  CHECK(restrict_ring(big, 3) == small);
  CHECK(is_strongly_stable(big));
  CHECK(is_saturated(big));
}

TEST_CASE("expandability: no right shift may be a generator") {
  StronglyStableIdeal J = I("(x0^3, x0^2*x1, x0^2*x2)", 4);
  CHECK(is_expandable(J, ideal_from_text("(x0^2*x2)", 4).gens[0]));
  // not a generator
  CHECK(!is_expandable(J, Monomial::var_power(4, 0, 2)));
  // right shift x0*x2 is a generator
  StronglyStableIdeal K = I("(x0^2, x0*x1, x0*x2, x1^2)", 4);
  CHECK(!is_expandable(K, ideal_from_text("(x0*x1)", 4).gens[0]));
}

TEST_CASE("expansion and contraction walk of x0^2-family ideals") {
  StronglyStableIdeal J = I("(x0^3, x0^2*x1, x0^2*x2)", 4);
  Monomial m = ideal_from_text("(x0^2*x2)", 4).gens[0];

  StronglyStableIdeal Jexp = expand(J, m);
  CHECK(to_text(Jexp) == "(x0^3, x0^2*x1, x0^2*x2^2)");
  CHECK(is_contractible(Jexp, m));
  CHECK(contract(Jexp, m) == J);

  Monomial sq = Monomial::var_power(4, 0, 2);  // x0^2
  CHECK(is_contractible(J, sq));
  StronglyStableIdeal Jcon = contract(J, sq);
  CHECK(to_text(Jcon) == "(x0^2)");
  CHECK(is_expandable(Jcon, sq));
  CHECK(expand(Jcon, sq) == J);
}

TEST_CASE("expansion of the unit ideal and of single variables") {
  StronglyStableIdeal unit{AmbientRing{4}, {Monomial::unit(4)}};
  CHECK(unit.is_unit());
  CHECK(is_expandable(unit, Monomial::unit(4)));
  CHECK(to_text(expand(unit, Monomial::unit(4))) == "(x0, x1, x2)");
  // and back
  CHECK(is_contractible(I("(x0, x1, x2)", 4), Monomial::unit(4)));
  CHECK(contract(I("(x0, x1, x2)", 4), Monomial::unit(4)) == unit);
}

TEST_CASE("contractibility needs left shifts in the ideal, not among gens") {
  StronglyStableIdeal J = I("(x0, x1^2, x1*x2^3)", 4);
  Monomial m = ideal_from_text("(x1*x2^2)", 4).gens[0];
  // L(x1*x2^2) = {x0*x2^2, x1^2*x2}: members of J but not generators
  CHECK(is_contractible(J, m));
  CHECK(to_text(contract(J, m)) == "(x0, x1^2, x1*x2^2)");

  // pivot whose stacked generator is absent
  CHECK(!is_contractible(J, ideal_from_text("(x1^2*x2)", 4).gens[0]));
}

TEST_CASE("deterministic contraction chain to the double saturation") {
  StronglyStableIdeal J = I("(x0, x1^2, x1*x2^3)", 4);
  std::vector<ContractionStep> steps = contraction_sequence_to_double_saturation(J);
  REQUIRE(steps.size() == 3);
  CHECK(to_text(steps[0].result) == "(x0, x1^2, x1*x2^2)");
  CHECK(to_text(steps[1].result) == "(x0, x1^2, x1*x2)");
  CHECK(to_text(steps[2].result) == "(x0, x1)");
  CHECK(steps[2].result == double_saturate(J));

  // step count = sum of x_{n-1} exponents over the generators
  CHECK(contraction_sequence_to_double_saturation(
            I("(x0^2, x0*x1, x0*x2^2, x1^3, x1^2*x2)", 4))
            .size() == 3);
  CHECK(contraction_sequence_to_double_saturation(I("(x0, x1^2)", 4)).empty());
}

TEST_CASE("expansion keeps minimality, stability, and saturation") {
  // sweep: expand every expandable generator of a few ideals
  for (const char* text : {"(x0^3, x0^2*x1, x0^2*x2)", "(x0, x1^2, x1*x2^3)",
                           "(x0^2, x0*x1, x0*x2^2, x1^3, x1^2*x2)"}) {
    StronglyStableIdeal J = I(text, 4);
    for (const Monomial& m : J.gens) {
      if (!is_expandable(J, m)) continue;
      StronglyStableIdeal E = expand(J, m);
      CHECK(is_minimal_generating_set(E.gens));
      CHECK(is_strongly_stable(E));
      CHECK(is_saturated(E));
      CHECK(contract(E, m) == J);
    }
  }
}

TEST_CASE("in each degree the lex-smallest generator is expandable") {
  const std::pair<const char*, int> cases[] = {
      {"(x0^3, x0^2*x1, x0^2*x2)", 4},
      {"(x0^2, x0*x1, x0*x2^2, x1^3, x1^2*x2)", 4},
      {"(x0, x1^4, x1^3*x2^2, x1^3*x2*x3)", 5},
  };
  for (const auto& [text, nv] : cases) {
    StronglyStableIdeal J = I(text, nv);
    for (std::size_t i = 0; i < J.gens.size(); ++i) {
      bool last_of_degree = i + 1 == J.gens.size() ||
                            J.gens[i + 1].degree() != J.gens[i].degree();
      if (last_of_degree) CHECK(is_expandable(J, J.gens[i]));
    }
  }
}

TEST_CASE("ideal order and equality") {
  StronglyStableIdeal a = I("(x0)", 3);
  StronglyStableIdeal b = I("(x0, x1^2)", 3);
  CHECK(ideal_less(a, b));
  CHECK(!ideal_less(b, a));
  CHECK(!ideal_less(a, a));
  CHECK(hash_value(a) != hash_value(b));
}
