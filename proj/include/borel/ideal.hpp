#pragma once

#include <optional>
#include <vector>

#include "borel/monomial.hpp"

namespace borel {

// A monomial ideal of K[x_0..x_n] closed under the exchanges
// g * x_i / x_j for x_j | g and i < j, stored by its minimal generators in
// canonical order (ascending degree, descending lex within a degree).
//
// Two degenerate ideals get fixed representations: the zero ideal has no
// generators at all, and the unit ideal is generated by the monomial 1.
struct StronglyStableIdeal {
  AmbientRing ring;
  std::vector<Monomial> gens;

  bool is_zero() const { return gens.empty(); }
  bool is_unit() const { return gens.size() == 1 && gens[0].is_unit(); }
  friend bool operator==(const StronglyStableIdeal&,
                         const StronglyStableIdeal&) = default;
};

// Sorts into canonical order and drops generators divisible by another one.
// Accepts any generator list, including redundant ones.
StronglyStableIdeal make_ideal(AmbientRing ring, std::vector<Monomial> gens);
std::vector<Monomial> minimalize(std::vector<Monomial> gens);
bool is_minimal_generating_set(const std::vector<Monomial>& gens);

bool contains(const StronglyStableIdeal& I, const Monomial& m);

// One exchange that leaves the ideal, if any: generator gen with
// gen * x_from / x_to outside the ideal (to > from, x_to divides gen).
struct BorelViolation {
  Monomial gen;
  int to = 0;    // index of the variable removed
  int from = 0;  // smaller index of the variable put in its place
};
std::optional<BorelViolation> find_borel_violation(
    const StronglyStableIdeal& I);
// Checking exchanges on the generators alone settles the question for the
// whole ideal.
bool is_strongly_stable(const StronglyStableIdeal& I);
// No generator involves the last variable.
bool is_saturated(const StronglyStableIdeal& I);

// Set x_n = 1 (respectively x_{n-1} = x_n = 1) in all generators and
// minimalize. The ring does not change.
StronglyStableIdeal saturate(const StronglyStableIdeal& I);
StronglyStableIdeal double_saturate(const StronglyStableIdeal& I);

// Set the j variables x_{n-j}..x_{n-1} to 1 and move to the smaller ring
// K[x_0..x_{n-j}]. For a saturated ideal the last variable never occurs in a
// generator, so the new last variable's exponent stays zero and the result
// is saturated again.
StronglyStableIdeal restrict_ring(const StronglyStableIdeal& I, int j);
// Reinterpret the generators in a ring with more variables (extension of
// scalars along K[x_0..x_m] -> K[x_0..x_{m+k}]).
StronglyStableIdeal extend_ring(const StronglyStableIdeal& I,
                                AmbientRing larger);

// A generator m of I is expandable when no right shift of m is again a
// generator. Expanding replaces m by m*x_r, ..., m*x_{n-1} where r is the
// max index of m (r = 0 for the unit ideal, whose expansion is
// (x_0, ..., x_{n-1})). The replacement is again a minimal generating set.
bool is_expandable(const StronglyStableIdeal& I, const Monomial& m);
StronglyStableIdeal expand(const StronglyStableIdeal& I, const Monomial& m);

// A monomial m (not necessarily in I) is contractible when m*x_{n-1} is a
// generator and every left shift of m lies in I. Contracting adds m and
// removes m*x_r, ..., m*x_{n-1}; this undoes the expansion of m and vice
// versa.
bool is_contractible(const StronglyStableIdeal& I, const Monomial& m);
StronglyStableIdeal contract(const StronglyStableIdeal& I, const Monomial& m);

// All m whose contraction is defined: candidates are g / x_{n-1} for
// generators g divisible by x_{n-1}, kept when the left-shift condition
// holds. Sorted canonically.
std::vector<Monomial> contractible_monomials(const StronglyStableIdeal& I);

// The deterministic chain of contractions reaching the double saturation:
// at each step contract g / x_{n-1} where g is the canonically first
// generator divisible by x_{n-1}. Returns the pivots and intermediate
// ideals, ending at the double saturation (empty when already there).
struct ContractionStep {
  Monomial pivot;
  StronglyStableIdeal result;
};
std::vector<ContractionStep> contraction_sequence_to_double_saturation(
    StronglyStableIdeal I);

// Orders ideals by their generator sequences (canonical monomial order,
// shorter sequence first on ties); used to sort enumeration output.
bool ideal_less(const StronglyStableIdeal& a, const StronglyStableIdeal& b);
std::size_t hash_value(const StronglyStableIdeal& I);

}  // namespace borel
