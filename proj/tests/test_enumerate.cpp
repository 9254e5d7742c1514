#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "borel/enumerate.hpp"
#include "borel/hilbert.hpp"
#include "borel/io.hpp"

using namespace borel;

namespace {

HilbertPolynomial dec(const char* text) {
  return decompose(parse_polynomial(text));
}

std::vector<std::string> texts(const std::vector<StronglyStableIdeal>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const StronglyStableIdeal& I : v) out.push_back(to_text(I));
  return out;
}

}  // namespace

TEST_CASE("canonical expansion fence mirrors the contraction chain") {
  // expanding any admitted generator, then contracting the deterministic
  // pivot of the result, must return to the original ideal
  for (const char* text : {"(x0, x1^4, x1^3*x2)", "(x0, x1^3)",
                           "(x0^2, x0*x1, x0*x2^2, x1^3, x1^2*x2)"}) {
    StronglyStableIdeal J = ideal_from_text(text, 4);
    for (const Monomial& m : canonical_expansions(J)) {
      StronglyStableIdeal E = expand(J, m);
      std::vector<ContractionStep> chain =
          contraction_sequence_to_double_saturation(E);
      REQUIRE(!chain.empty());
      CHECK(chain[0].pivot == m);
      CHECK(chain[0].result == J);
    }
  }

  // x1^4 is blocked in the first stage ideal of the worked example:
  // its witness x1^4*x2 comes after the generator x1^3*x2
  StronglyStableIdeal I1 = ideal_from_text("(x0, x1^4, x1^3*x2)", 4);
  std::vector<Monomial> adm = canonical_expansions(I1);
  std::vector<std::string> names;
  for (const Monomial& m : adm) names.push_back(to_text(m));
  CHECK(names == std::vector<std::string>{"x0", "x1^3*x2"});
}

TEST_CASE("worked example: p = 3/2 z^2 + 5/2 z in five variables") {
  std::vector<StronglyStableIdeal> out =
      enumerate_by_hp(dec("3/2*z^2+5/2*z"), AmbientRing{5});
  CHECK(texts(out) == std::vector<std::string>{
                          "(x0, x1^4, x1^3*x2^2, x1^3*x2*x3)",
                          "(x0^2, x0*x1, x0*x2, x0*x3, x1^4, x1^3*x2)"});
  // the first is the lex ideal
  CHECK(out[0] == lex_ideal(dec("3/2*z^2+5/2*z"), AmbientRing{5}));
}

TEST_CASE("stage statistics account for every root and output") {
  std::vector<StageStats> stats;
  enumerate_by_hp(dec("3/2*z^2+5/2*z"), AmbientRing{5}, {}, &stats);
  REQUIRE(stats.size() == 3);  // stages 2, 1, 0
  CHECK(stats[0].stage == 2);
  CHECK(stats[0].roots == 1);
  CHECK(stats[0].outputs == 2);
  CHECK(stats[1].stage == 1);
  CHECK(stats[1].roots == 2);
  CHECK(stats[1].outputs == 3);
  CHECK(stats[2].stage == 0);
  // two stage-1 results overshoot the remaining budget and are dropped
  CHECK(stats[2].roots == 1);
  CHECK(stats[2].outputs == 2);
}

TEST_CASE("degenerate Hilbert polynomials") {
  CHECK(enumerate_by_hp(HilbertPolynomial{}, AmbientRing{4}).empty());
  // full-ring polynomial: the zero ideal alone
  std::vector<StronglyStableIdeal> out =
      enumerate_by_hp(HilbertPolynomial{{1, 1, 1, 1}}, AmbientRing{4});
  REQUIRE(out.size() == 1);
  CHECK(out[0].is_zero());
  // degree too large for the ring
  CHECK(enumerate_by_hp(dec("z^2+5*z+3"), AmbientRing{3}).empty());
  CHECK_THROWS_AS(enumerate_by_hp(dec("4"), AmbientRing{1}),
                  RingTooSmallError);
}

TEST_CASE("table spot counts across ring sizes") {
  struct Cell {
    const char* poly;
    int vars;
    std::size_t count;
  };
  const Cell cells[] = {
      {"4", 4, 3},        {"8", 4, 12},       {"8", 7, 19},
      {"8", 10, 20},      {"12", 4, 44},      {"12", 7, 104},
      {"4*z+2", 4, 14},   {"4*z+2", 7, 28},   {"2*z^2+6", 4, 3},
      {"2*z^2+6", 7, 18}, {"2*z^2+6", 10, 19}, {"8*z-16", 4, 10},
      {"8*z-16", 7, 18},
  };
  for (const Cell& c : cells) {
    CHECK(enumerate_by_hp(dec(c.poly), AmbientRing{c.vars}).size() == c.count);
  }
}

TEST_CASE("worker count changes neither content nor order") {
  for (const char* poly : {"12", "4*z+2", "3/2*z^2+5/2*z"}) {
    EnumerateOptions one, four;
    four.workers = 4;
    std::vector<StronglyStableIdeal> a =
        enumerate_by_hp(dec(poly), AmbientRing{5}, one);
    std::vector<StronglyStableIdeal> b =
        enumerate_by_hp(dec(poly), AmbientRing{5}, four);
    CHECK(a == b);

    one.sort_output = four.sort_output = false;
    a = enumerate_by_hp(dec(poly), AmbientRing{5}, one);
    b = enumerate_by_hp(dec(poly), AmbientRing{5}, four);
    CHECK(a == b);
  }
}

TEST_CASE("almost-lex run: p = 2z^2 + z + 1 in five variables") {
  AlmostLexRun run = enumerate_almost_lex(dec("2*z^2+z+1"), AmbientRing{5});
  CHECK(to_text(run.start) == "(x0, x1^5, x1^4*x2)");
  CHECK(run.lex_expansions == 2);
  CHECK(texts(run.ideals) ==
        std::vector<std::string>{
            "(x0, x1^5, x1^4*x2^2, x1^4*x2*x3^2)",
            "(x0, x1^6, x1^5*x2, x1^5*x3, x1^4*x2^2, x1^4*x2*x3)",
            "(x0^2, x0*x1, x0*x2, x0*x3, x1^5, x1^4*x2^2, x1^4*x2*x3)",
            "(x0^2, x0*x1, x0*x2, x0*x3^2, x1^5, x1^4*x2)"});
}

TEST_CASE("almost-lex enumeration matches filtering the full enumeration") {
  for (const char* poly : {"z^2+5*z+3", "2*z^2+z+1", "8", "4*z+2"}) {
    HilbertPolynomial p = dec(poly);
    AlmostLexRun run = enumerate_almost_lex(p, AmbientRing{5});
    std::vector<StronglyStableIdeal> filtered;
    for (StronglyStableIdeal& I : enumerate_by_hp(p, AmbientRing{5})) {
      if (is_almost_lex(I)) filtered.push_back(std::move(I));
    }
    CHECK(run.ideals == filtered);
  }
}

TEST_CASE("almost-lex counts of the two large examples") {
  CHECK(enumerate_almost_lex(dec("z^2+5*z+3"), AmbientRing{5}).ideals.size() ==
        129);
  CHECK(enumerate_almost_lex(dec("31"), AmbientRing{4}).ideals.size() == 2649);
}

TEST_CASE("is_almost_lex on explicit fixtures") {
  // all-generator lex segments after dropping the last variable
  CHECK(is_almost_lex(ideal_from_text("(x0^2, x0*x1, x0*x2, x1^2)", 4)));
  CHECK(is_almost_lex(
      ideal_from_text("(x0^2, x0*x1, x0*x2, x1^3, x1^2*x2)", 4)));
  CHECK(is_almost_lex(ideal_from_text("(x0, x1^4, x1^3*x2^2, x1^3*x2*x3)", 5)));
  CHECK(is_almost_lex(
      ideal_from_text("(x0^2, x0*x1, x0*x2, x0*x3, x1^4, x1^3*x2)", 5)));

  // strongly stable and saturated, but the degree-2 piece in the first
  // three variables is {x0^2, x0*x1, x1^2}, not the segment {x0^2, x0*x1, x0*x2}
  StronglyStableIdeal not_al = ideal_from_text("(x0^2, x0*x1, x1^2)", 4);
  CHECK(is_strongly_stable(not_al));
  CHECK(is_saturated(not_al));
  CHECK(!is_almost_lex(not_al));

  // lex in the full ring is almost-lex by definition
  CHECK(is_almost_lex(lex_ideal(dec("8"), AmbientRing{6})));
  // degenerate ideals
  CHECK(is_almost_lex(StronglyStableIdeal{AmbientRing{4}, {}}));
  CHECK(is_almost_lex(ideal_from_text("(x0^3)", 2)));
}

TEST_CASE("series search: numerator 1 - 6t^2 + 8t^3 - 3t^4, five variables") {
  SeriesSearchStats stats;
  std::vector<StronglyStableIdeal> out = enumerate_by_series(
      parse_numerator_list("1,0,-6,8,-3"), AmbientRing{5}, {}, &stats);
  CHECK(texts(out) ==
        std::vector<std::string>{
            "(x0^2, x0*x1, x0*x2, x0*x3, x1^2, x1*x2, x1*x3^2, x2^4)",
            "(x0^2, x0*x1, x0*x2, x0*x3, x1^2, x1*x2, x2^3)",
            "(x0^2, x0*x1, x0*x2, x1^2, x1*x2, x2^2)"});
  // scan effort is deterministic: 11 nodes expanded, 101 monomials rejected
  CHECK(stats.nodes == 11);
  CHECK(stats.skipped_candidates == 101);

  // every output realizes the numerator
  for (const StronglyStableIdeal& I : out) {
    CHECK(series_numerator_of(I).c == std::vector<Int>{1, 0, -6, 8, -3});
  }
}

TEST_CASE("series search degenerate numerators") {
  // numerator 1: the zero ideal
  std::vector<StronglyStableIdeal> out =
      enumerate_by_series(parse_numerator_list("1"), AmbientRing{3});
  REQUIRE(out.size() == 1);
  CHECK(out[0].is_zero());

  // numerator 1 - t: the single ideal (x0)
  out = enumerate_by_series(parse_numerator_list("1,-1"), AmbientRing{3});
  REQUIRE(out.size() == 1);
  CHECK(to_text(out[0]) == "(x0)");

  // numerator 1 - t^3: (x0^3)
  out = enumerate_by_series(parse_numerator_list("1,0,0,-1"), AmbientRing{3});
  REQUIRE(out.size() == 1);
  CHECK(to_text(out[0]) == "(x0^3)");

  // a numerator no saturated ideal realizes
  CHECK(enumerate_by_series(parse_numerator_list("1,-2"), AmbientRing{3})
            .empty());
  CHECK_THROWS_AS(
      enumerate_by_series(parse_numerator_list("2,-1"), AmbientRing{3}),
      std::invalid_argument);
}

TEST_CASE("series search agrees with grouping the Hilbert enumeration") {
  // all ideals for p group by numerator into the series outputs
  for (const char* poly : {"3/2*z^2+5/2*z", "2*z^2+z+1", "8"}) {
    HilbertPolynomial p = dec(poly);
    std::vector<StronglyStableIdeal> all = enumerate_by_hp(p, AmbientRing{5});
    std::set<std::vector<Int>> numerators;
    for (const StronglyStableIdeal& I : all) {
      numerators.insert(series_numerator_of(I).c);
    }
    for (const std::vector<Int>& c : numerators) {
      SeriesNumerator g;
      g.c = c;
      std::vector<StronglyStableIdeal> by_series =
          enumerate_by_series(g, AmbientRing{5});
      std::vector<StronglyStableIdeal> expect;
      for (const StronglyStableIdeal& I : all) {
        if (series_numerator_of(I).c == c) expect.push_back(I);
      }
      CHECK(by_series == expect);
    }
  }
}

TEST_CASE("max Betti filter") {
  // p = z^2+5z+3: the maximal Betti vector [15,31,23,6] is attained by
  // five of the 509 ideals, four of them almost lexsegment
  std::vector<StronglyStableIdeal> all =
      enumerate_by_hp(dec("z^2+5*z+3"), AmbientRing{5});
  CHECK(all.size() == 509);
  std::vector<StronglyStableIdeal> top = max_betti_filter(all);
  REQUIRE(top.size() == 5);
  std::size_t almost = 0;
  for (const StronglyStableIdeal& I : top) {
    CHECK(betti_numbers(I) == std::vector<Int>{15, 31, 23, 6});
    if (is_almost_lex(I)) ++almost;
  }
  CHECK(almost == 4);

  AlmostLexRun run = enumerate_almost_lex(dec("z^2+5*z+3"), AmbientRing{5});
  CHECK(max_betti_filter(run.ideals).size() == 4);

  // p = 31 in four variables: five maximal ideals, all almost lexsegment
  std::vector<StronglyStableIdeal> big =
      enumerate_by_hp(dec("31"), AmbientRing{4});
  CHECK(big.size() == 6481);
  std::vector<StronglyStableIdeal> big_top = max_betti_filter(big);
  CHECK(big_top.size() == 5);
  for (const StronglyStableIdeal& I : big_top) {
    CHECK(betti_numbers(I) == std::vector<Int>{17, 28, 12});
    CHECK(is_almost_lex(I));
  }

  CHECK(max_betti_filter({}).empty());
}
