#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace borel {

// The polynomial ring K[x_0, ..., x_n]. Over any field the monomial
// combinatorics below depend only on the number of variables, so that is all
// we store. num_vars = n + 1.
struct AmbientRing {
  int num_vars = 0;

  int n() const { return num_vars - 1; }
  friend bool operator==(const AmbientRing&, const AmbientRing&) = default;
};

// A monomial as a dense exponent vector over x_0..x_n. Rings here are small
// (rarely more than a dozen variables), so dense storage keeps comparisons
// cheap and the code free of index bookkeeping.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);
  static Monomial unit(int num_vars);
  // x_i in a ring with num_vars variables, raised to the given power.
  static Monomial var_power(int num_vars, int i, int power = 1);

  int num_vars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  bool is_unit() const { return degree_ == 0; }
  int operator[](int i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  // Largest index of a variable dividing the monomial; -1 for the unit.
  int max_index() const;

  Monomial times_var(int i) const;
  Monomial div_var(int i) const;  // requires exps[i] > 0
  bool divides(const Monomial& m) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

// Sign of the lexicographic comparison with x_0 > x_1 > ... > x_n: positive
// when a > b, negative when a < b, zero on equality. Degrees are ignored;
// callers that need a graded order compare degrees first.
int lex_compare(const Monomial& a, const Monomial& b);

// The order in which generators are listed and in which every canonical
// choice is made: ascending degree, and descending lex within a degree.
bool canonical_less(const Monomial& a, const Monomial& b);

// Right shifts x^A * x_{i+1} / x_i for every x_i dividing x^A, 0 <= i <= n-2,
// and left shifts x^A * x_{i-1} / x_i for every x_i dividing x^A,
// 1 <= i <= n-1. Shifts never touch the last variable's slot from the left,
// so a monomial in x_0 alone has no left shifts.
std::vector<Monomial> right_shifts(const Monomial& m);
std::vector<Monomial> left_shifts(const Monomial& m);

std::size_t hash_value(const Monomial& m);

}  // namespace borel
