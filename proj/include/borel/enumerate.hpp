#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "borel/hilbert.hpp"
#include "borel/ideal.hpp"

namespace borel {

struct EnumerateOptions {
  // Worker threads for the tree searches. Any value produces the same output
  // in the same order; chunks of the search frontier are processed
  // independently and concatenated in frontier order.
  int workers = 1;
  // When set, output is sorted by ideal_less; otherwise it arrives in
  // leftmost-expansion search order (still deterministic).
  bool sort_output = true;
};

// Per-stage figures from enumerate_by_hp, for diagnostics and tests: stage j
// works in the ring K[x_0..x_{n-j}] and performs fenced expansions until the
// budget (the constant gap to the j-th difference polynomial) is spent.
struct StageStats {
  int stage = 0;
  std::size_t roots = 0;
  std::size_t outputs = 0;
  long max_budget = 0;
};

// The generators of I whose expansion the canonicity fence admits, in
// canonical order. The fence makes every enumerated ideal reachable along
// exactly one expansion path: expanding m is admitted when its witness
// m * x_{n-1} precedes every other generator divisible by x_{n-1} in
// canonical order, which makes the expansion path the exact reverse of the
// deterministic contraction chain to the double saturation.
std::vector<Monomial> canonical_expansions(const StronglyStableIdeal& I);

// All saturated strongly stable ideals of the ring with Hilbert polynomial p
// of the quotient. Requires at least 2 variables; returns the zero ideal
// alone when p is the full polynomial ring's Hilbert polynomial, and nothing
// when deg p exceeds n-1 (no such ideal exists).
std::vector<StronglyStableIdeal> enumerate_by_hp(
    const HilbertPolynomial& p, AmbientRing ring,
    const EnumerateOptions& opts = {}, std::vector<StageStats>* stats = nullptr);

// Result of the almost-lexsegment enumeration: all runs start from the lex
// ideal of p - a_0 (the shared double saturation) and perform a_0 lex
// expansions; one output per non-decreasing degree sequence of expansions.
struct AlmostLexRun {
  StronglyStableIdeal start;
  Int lex_expansions;
  std::vector<StronglyStableIdeal> ideals;
};

AlmostLexRun enumerate_almost_lex(const HilbertPolynomial& p, AmbientRing ring,
                                  const EnumerateOptions& opts = {});

struct SeriesSearchStats {
  std::size_t nodes = 0;
  // Degree-sd monomials examined by the per-node scan and rejected because
  // they already lie in the ideal or a left shift of theirs does not.
  std::size_t skipped_candidates = 0;
};

// All saturated strongly stable ideals whose quotient Hilbert series equals
// g(t) / (1-t)^{n+1} with the given (unreduced) numerator. The numerator of
// the zero ideal is 1; a constant term different from 1 is rejected.
std::vector<StronglyStableIdeal> enumerate_by_series(
    const SeriesNumerator& g, AmbientRing ring,
    const EnumerateOptions& opts = {}, SeriesSearchStats* stats = nullptr);

// True when the generators, read in K[x_0..x_{n-1}] (a saturated ideal's
// generators never use x_n), span an initial lex segment in every degree.
// Decided degree by degree at the generator degrees: the degree-j piece is a
// segment iff the rank of its lex-least element equals its dimension.
bool is_almost_lex(const StronglyStableIdeal& I);

// The ideals whose Betti vector attains the componentwise maximum over the
// given set (missing entries count as zero).
std::vector<StronglyStableIdeal> max_betti_filter(
    const std::vector<StronglyStableIdeal>& ideals);

}  // namespace borel
