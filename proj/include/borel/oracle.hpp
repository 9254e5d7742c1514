#pragma once

#include "borel/hilbert.hpp"
#include "borel/ideal.hpp"

namespace borel::oracle {

// Brute-force ground truth, implemented independently of the closed-form
// Hilbert machinery: everything here reduces to divisibility tests on
// explicitly enumerated monomials. Orders of magnitude slower than the main
// path, and deliberately so.

// Exact count of degree-j monomials outside I (standard monomials of the
// quotient), by recursive enumeration with divisibility pruning.
Int hilbert_function(const StronglyStableIdeal& I, long j);

// True iff every monomial of I of degree <= D stays inside I under every
// exchange x_i / x_j with i < j. Unlike the generator test in the ideal
// module, this walks all monomials of the ideal degree by degree.
// Requires D >= the top generator degree.
bool full_stability_check(const StronglyStableIdeal& I, int max_degree);

// True iff (sum_{j<=D} h(j) t^j) * (1-t)^{n+1} agrees with the closed-form
// series numerator through degree D, with h computed by brute-force counting.
// Requires D >= numerator degree + 1.
bool series_consistency_check(const StronglyStableIdeal& I, int max_degree);

// Breadth-first enumeration over all expansion choices with hash-based
// deduplication, mirroring the staged structure of the fenced enumeration
// but with no canonicity rule at all. Intended for counts up to ~20,000.
std::vector<StronglyStableIdeal> naive_enumerate_by_hp(
    const HilbertPolynomial& p, AmbientRing ring);

}  // namespace borel::oracle
