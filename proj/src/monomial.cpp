#include "borel/monomial.hpp"

#include <cassert>
#include <numeric>

namespace borel {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
  assert(degree_ >= 0);
}

Monomial Monomial::unit(int num_vars) {
  return Monomial(std::vector<int>(num_vars, 0));
}

Monomial Monomial::var_power(int num_vars, int i, int power) {
  std::vector<int> e(num_vars, 0);
  e[i] = power;
  return Monomial(std::move(e));
}

int Monomial::max_index() const {
  for (int i = num_vars() - 1; i >= 0; --i) {
    if (exps_[i] > 0) return i;
  }
  return -1;
}

Monomial Monomial::times_var(int i) const {
  Monomial r = *this;
  ++r.exps_[i];
  ++r.degree_;
  return r;
}

Monomial Monomial::div_var(int i) const {
  assert(exps_[i] > 0);
  Monomial r = *this;
  --r.exps_[i];
  --r.degree_;
  return r;
}

bool Monomial::divides(const Monomial& m) const {
  assert(num_vars() == m.num_vars());
  for (int i = 0; i < num_vars(); ++i) {
    if (exps_[i] > m.exps_[i]) return false;
  }
  return true;
}

int lex_compare(const Monomial& a, const Monomial& b) {
  assert(a.num_vars() == b.num_vars());
  for (int i = 0; i < a.num_vars(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return lex_compare(a, b) > 0;
}

std::vector<Monomial> right_shifts(const Monomial& m) {
  std::vector<Monomial> out;
  // i runs over 0..n-2: a right shift may raise a variable to x_{n-1} but
  // never to x_n.
  for (int i = 0; i + 3 <= m.num_vars(); ++i) {
    if (m[i] > 0) out.push_back(m.div_var(i).times_var(i + 1));
  }
  return out;
}

std::vector<Monomial> left_shifts(const Monomial& m) {
  std::vector<Monomial> out;
  // i runs over 1..n-1; the last variable is left alone, matching the use of
  // these shifts on generators of saturated ideals.
  for (int i = 1; i + 2 <= m.num_vars(); ++i) {
    if (m[i] > 0) out.push_back(m.div_var(i).times_var(i - 1));
  }
  return out;
}

std::size_t hash_value(const Monomial& m) {
  std::size_t h = static_cast<std::size_t>(m.num_vars());
  for (int i = 0; i < m.num_vars(); ++i) {
    h ^= static_cast<std::size_t>(m[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

}  // namespace borel
