#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "borel/enumerate.hpp"
#include "borel/hilbert.hpp"
#include "borel/ideal.hpp"

namespace borel {

// Malformed ideal input (JSON schema violations, bad text form, exponent
// problems). Violations of the mathematical invariants (strong stability,
// saturation) are the caller's job to diagnose; see find_borel_violation.
struct InvalidIdealError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "x0^2*x1"; the unit monomial renders as "1".
std::string to_text(const Monomial& m);

// "(x0^2, x0*x1)"; the zero ideal renders "(0)", the unit ideal "(1)".
std::string to_text(const StronglyStableIdeal& I);

// Compact polynomial form, highest degree first: "3/2*z^2+5/2*z", "0".
// Output re-parses through parse_polynomial unchanged.
std::string to_text(const QPoly& p);

// {"vars": n+1, "gens": [[e0,...,en], ...]} with gens in canonical order.
nlohmann::json ideal_to_json(const StronglyStableIdeal& I);

// Accepts the schema above; generators are sorted and minimalized, so
// parsing printed output reproduces the ideal bit-exactly. Throws
// InvalidIdealError on schema violations.
StronglyStableIdeal ideal_from_json(const nlohmann::json& j);

// Text form "(x0^2, x0*x1)". The text form carries no ring size; pass
// num_vars, or -1 to infer max variable index + 2 (one saturating variable).
StronglyStableIdeal ideal_from_text(const std::string& text, int num_vars);

// Auto-detects the two forms by the first non-space character ('{' or '(').
StronglyStableIdeal parse_ideal(const std::string& text, int num_vars = -1);

// Grammar (whitespace insensitive): sum of terms, each an optional rational
// coefficient a or a/b, an optional '*', and an optional power of z written
// z or z^k. Examples: "3/2*z^2+5/2*z", "2z^2+6", "z", "0", "-4*z+2".
// Throws PolynomialError with a diagnostic on malformed input.
QPoly parse_polynomial(const std::string& text);

// Comma-separated rationals, coefficient of z^i at position i: "3,5,1" is
// z^2+5z+3.
QPoly parse_coeff_list(const std::string& text);

// Comma-separated b-vector, validated positive and non-increasing.
HilbertPolynomial parse_gotzmann_list(const std::string& text);

// Comma-separated integers, coefficient of t^i at position i.
SeriesNumerator parse_numerator_list(const std::string& text);

// Full analysis record: ideal in both forms, Betti vector, regularity,
// series numerator, Hilbert polynomial (b-vector and coefficients), and the
// almost-lexsegment flag. Integers that fit in 64 bits are JSON numbers,
// larger ones decimal strings; rationals are strings like "3/2".
nlohmann::json analysis_record(const StronglyStableIdeal& I);

}  // namespace borel
