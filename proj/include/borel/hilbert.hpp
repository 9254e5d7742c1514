#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "borel/ideal.hpp"

namespace borel {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when an input polynomial admits no Gotzmann representation, i.e. is
// not the Hilbert polynomial of any saturated quotient. The message names the
// first violated condition.
class PolynomialError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a construction needs more variables than the ring offers
// (deg p <= n - 1 is required for a proper saturated ideal to exist).
class RingTooSmallError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense univariate polynomial over Q, coefficients in ascending degree with
// trailing zeros trimmed. Exact arithmetic throughout; this type never sees
// floating point.
struct QPoly {
  std::vector<Rat> c;

  void trim();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 if zero
  Rat coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : Rat(0);
  }
  Rat evaluate(const Int& z) const;

  friend bool operator==(const QPoly&, const QPoly&) = default;
};

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);

// Binomial coefficient with arbitrary (possibly negative) integer top:
// the falling factorial top*(top-1)*...*(top-k+1) divided by k!.
Int binom(const Int& top, unsigned long k);
// The polynomial C(z + shift, k) in z.
QPoly binom_poly(const Int& shift, unsigned long k);

// A Hilbert polynomial of a proper saturated quotient, in Gotzmann form:
// the unique integers b_0 >= b_1 >= ... >= b_d >= 1 with
//   p(z) = sum_{i=0}^{d} [ C(z+i, i+1) - C(z+i-b_i, i+1) ].
// An empty b-vector encodes the zero polynomial (quotient by the unit
// ideal). Taking first differences drops b_0: the b-vector of the j-th
// difference of p is (b_j, ..., b_d).
struct HilbertPolynomial {
  std::vector<Int> b;

  bool is_zero() const { return b.empty(); }
  int degree() const { return static_cast<int>(b.size()) - 1; }  // -1 if zero
  // a_i = b_i - b_{i+1} for i < d and a_d = b_d; all entries nonnegative.
  std::vector<Int> a_vector() const;

  friend bool operator==(const HilbertPolynomial&,
                         const HilbertPolynomial&) = default;
};

// Extracts the Gotzmann form, throwing PolynomialError when there is none.
HilbertPolynomial decompose(const QPoly& p);
QPoly to_qpoly(const HilbertPolynomial& p);
Int evaluate(const HilbertPolynomial& p, const Int& z);
// The j-th finite difference, b-vector (b_j, ..., b_d). Requires j <= d + 1.
HilbertPolynomial difference(const HilbertPolynomial& p, int j);
// The polynomial p - a_0, whose lex ideal is doubly saturated: its b-vector
// is (b_1, b_1, b_2, ..., b_d); the zero polynomial when d = 0.
HilbertPolynomial drop_constant_to_doubly_saturated(const HilbertPolynomial& p);

// The unique saturated lexsegment ideal with Hilbert polynomial p: linear
// generators x_0..x_{n-d-2} followed by one block per a_k. Requires
// deg p <= n - 1 (throws RingTooSmallError otherwise); the zero polynomial
// yields the unit ideal.
StronglyStableIdeal lex_ideal(const HilbertPolynomial& p, AmbientRing ring);

// Hilbert polynomial of R/I computed from the generators' degrees d_i and
// max indices l_i:
//   p_{R/I}(z) = C(z+n, n) - sum_i C(z + n - d_i - l_i, n - l_i).
QPoly quotient_hilbert_qpoly(const StronglyStableIdeal& I);
HilbertPolynomial hilbert_polynomial_of(const StronglyStableIdeal& I);

// Numerator of the Hilbert series of R/I over (1-t)^{n+1}, not reduced:
//   g(t) = 1 - sum_i (1-t)^{l_i} t^{d_i}.
// Integer coefficients in ascending powers of t, trailing zeros trimmed; the
// unit ideal has numerator 0.
struct SeriesNumerator {
  std::vector<Int> c;

  void trim();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Int coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : Int(0);
  }

  friend bool operator==(const SeriesNumerator&,
                         const SeriesNumerator&) = default;
};

SeriesNumerator series_numerator_of(const StronglyStableIdeal& I);
// Expands g(t)/(1-t)^{n+1} degreewise: the Hilbert function value
// h(j) = sum_i g_i * C(j - i + n, n). Exact for every j >= 0.
Int h_from_numerator(const SeriesNumerator& g, int n, long j);
// The polynomial sum_i g_i * C(z - i + n, n), which equals the Hilbert
// polynomial of any quotient with this series.
QPoly numerator_to_polynomial(const SeriesNumerator& g, int n);

// Total Betti numbers of I (minimal free resolution of the ideal):
// beta_j = sum_i C(l_i, j), j = 0..max l_i. The zero ideal has none; the
// unit ideal, being free, has the single entry 1.
std::vector<Int> betti_numbers(const StronglyStableIdeal& I);
// For strongly stable ideals the regularity is the top generator degree.
int regularity(const StronglyStableIdeal& I);

// Counts of saturated strongly stable ideals with Hilbert polynomial p agree
// for all n >= b_0 + d - 1; this returns that threshold.
Int stability_threshold(const HilbertPolynomial& p);
// An upper bound for the number of saturated strongly stable ideals in
// K[x_0..x_n] with Hilbert polynomial p, with c = min(n, b_0 + d - 1):
//   prod_{j=0}^{d} C( C(c - j + b_0 - 1, b_0 - 1) + 1, a_j ).
Int count_upper_bound(const HilbertPolynomial& p, int n);

}  // namespace borel
