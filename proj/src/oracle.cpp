#include "borel/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace borel::oracle {

namespace {

// Pascal triangle in 64-bit for ranking monomials inside one degree; the
// oracle works at desk scale where these never overflow, and we check anyway.
class PascalTable {
 public:
  PascalTable(int max_top, int max_k)
      : max_k_(max_k),
        rows_(max_top + 1, std::vector<std::uint64_t>(max_k + 1, 0)) {
    rows_[0][0] = 1;
    for (int a = 1; a <= max_top; ++a) {
      rows_[a][0] = 1;
      for (int k = 1; k <= max_k; ++k) {
        std::uint64_t v = rows_[a - 1][k] + rows_[a - 1][k - 1];
        if (v < rows_[a - 1][k]) {
          throw std::overflow_error("oracle degree table exceeds 64-bit range");
        }
        rows_[a][k] = v;
      }
    }
  }

  std::uint64_t at(int top, int k) const {
    if (top < 0 || k < 0 || k > top) return 0;
    assert(k <= max_k_);
    return rows_[top][k];
  }

 private:
  int max_k_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

// Position of m among the degree-deg(m) monomials of its ring, counting in
// descending lex order from 0. Counts the monomials that agree with m up to
// position i-1 and carry a larger exponent at i, summed over i.
std::uint64_t lex_desc_rank(const std::vector<int>& e, const PascalTable& pt) {
  int nv = static_cast<int>(e.size());
  int rem = 0;
  for (int x : e) rem += x;
  std::uint64_t rank = 0;
  for (int i = 0; i + 1 < nv; ++i) {
    rank += pt.at(rem - e[i] + nv - i - 2, nv - i - 1);
    rem -= e[i];
  }
  return rank;
}

// Membership of every monomial of degree <= D in I, level by level: a
// monomial is in the ideal iff it is a generator or some single-variable
// quotient of it already is. Only divisibility is used, which keeps this
// independent of the formulas it is meant to check.
class DegreeTable {
 public:
  DegreeTable(const StronglyStableIdeal& I, int max_degree)
      : nv_(I.ring.num_vars),
        max_degree_(max_degree),
        pt_(max_degree + nv_, nv_),
        in_ideal_(max_degree + 1),
        quotient_h_(max_degree + 1) {
    std::vector<int> exps(nv_, 0);
    for (int j = 0; j <= max_degree_; ++j) {
      in_ideal_[j].assign(static_cast<std::size_t>(pt_.at(j + nv_ - 1, nv_ - 1)),
                          0);
      gen_cursor_ = 0;
      counter_ = 0;
      members_ = 0;
      fill_level(I, j, 0, j, exps);
      quotient_h_[j] = Int(static_cast<unsigned long>(in_ideal_[j].size() -
                                                      members_));
    }
  }

  int max_degree() const { return max_degree_; }
  const Int& quotient_h(int j) const { return quotient_h_[j]; }

  bool member(const std::vector<int>& e) const {
    int deg = 0;
    for (int x : e) deg += x;
    return in_ideal_[deg][lex_desc_rank(e, pt_)] != 0;
  }

  // Applies fn to every ideal member of degree j, in descending lex order.
  void for_each_member(int j,
                       const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> exps(nv_, 0);
    walk_counter_ = 0;
    walk_members(j, 0, j, exps, fn);
  }

 private:
  void fill_level(const StronglyStableIdeal& I, int j, int pos, int rem,
                  std::vector<int>& exps) {
    if (pos == nv_ - 1) {
      exps[pos] = rem;
      bool in = false;
      // generators of degree j arrive in the same descending lex order the
      // enumeration uses, so a single cursor matches them off
      while (gen_cursor_ < I.gens.size() &&
             (I.gens[gen_cursor_].degree() < j ||
              (I.gens[gen_cursor_].degree() == j &&
               lex_exps_greater(I.gens[gen_cursor_].exponents(), exps)))) {
        ++gen_cursor_;
      }
      if (gen_cursor_ < I.gens.size() &&
          I.gens[gen_cursor_].exponents() == exps) {
        in = true;
      }
      if (!in && j > 0) {
        for (int i = 0; i < nv_ && !in; ++i) {
          if (exps[i] == 0) continue;
          --exps[i];
          in = in_ideal_[j - 1][lex_desc_rank(exps, pt_)] != 0;
          ++exps[i];
        }
      }
      if (in) {
        in_ideal_[j][counter_] = 1;
        ++members_;
      }
      ++counter_;
      exps[pos] = 0;
      return;
    }
    for (int e = rem; e >= 0; --e) {
      exps[pos] = e;
      fill_level(I, j, pos + 1, rem - e, exps);
    }
    exps[pos] = 0;
  }

  void walk_members(int j, int pos, int rem, std::vector<int>& exps,
                    const std::function<void(const std::vector<int>&)>& fn) {
    if (pos == nv_ - 1) {
      exps[pos] = rem;
      if (in_ideal_[j][walk_counter_++] != 0) fn(exps);
      exps[pos] = 0;
      return;
    }
    for (int e = rem; e >= 0; --e) {
      exps[pos] = e;
      walk_members(j, pos + 1, rem - e, exps, fn);
    }
    exps[pos] = 0;
  }

  static bool lex_exps_greater(const std::vector<int>& a,
                               const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }

  int nv_;
  int max_degree_;
  PascalTable pt_;
  std::vector<std::vector<unsigned char>> in_ideal_;
  std::vector<Int> quotient_h_;
  std::size_t gen_cursor_ = 0;
  std::size_t counter_ = 0;
  std::size_t walk_counter_ = 0;
  std::size_t members_ = 0;
};

Int count_standard(const StronglyStableIdeal& I,
                   const std::vector<const Monomial*>& alive, int pos,
                   long rem) {
  int nv = I.ring.num_vars;
  if (alive.empty()) {
    // every completion is standard
    return binom(Int(rem + nv - pos - 1), static_cast<unsigned long>(nv - pos - 1));
  }
  if (pos == nv - 1) {
    for (const Monomial* g : alive) {
      if ((*g)[pos] <= rem) return Int(0);
    }
    return Int(1);
  }
  Int total(0);
  std::vector<const Monomial*> next;
  for (long e = 0; e <= rem; ++e) {
    next.clear();
    bool dead = false;
    for (const Monomial* g : alive) {
      if ((*g)[pos] > e) continue;
      int tail = 0;
      for (int t = pos + 1; t < nv; ++t) tail += (*g)[t];
      if (tail == 0) {
        dead = true;  // the generator already divides the prefix
        break;
      }
      next.push_back(g);
    }
    if (dead) break;  // larger exponents only keep the divisor alive
    total += count_standard(I, next, pos + 1, rem - e);
  }
  return total;
}

}  // namespace

Int hilbert_function(const StronglyStableIdeal& I, long j) {
  assert(j >= 0);
  std::vector<const Monomial*> alive;
  for (const Monomial& g : I.gens) {
    if (g.degree() <= j) alive.push_back(&g);
  }
  return count_standard(I, alive, 0, j);
}

bool full_stability_check(const StronglyStableIdeal& I, int max_degree) {
  assert(max_degree >= regularity(I));
  DegreeTable table(I, max_degree);
  int nv = I.ring.num_vars;
  for (int j = 1; j <= max_degree; ++j) {
    bool ok = true;
    table.for_each_member(j, [&](const std::vector<int>& e) {
      if (!ok) return;
      std::vector<int> moved = e;
      for (int b = 1; b < nv && ok; ++b) {
        if (e[b] == 0) continue;
        --moved[b];
        for (int a = 0; a < b && ok; ++a) {
          ++moved[a];
          if (!table.member(moved)) ok = false;
          --moved[a];
        }
        ++moved[b];
      }
    });
    if (!ok) return false;
  }
  return true;
}

bool series_consistency_check(const StronglyStableIdeal& I, int max_degree) {
  SeriesNumerator g = series_numerator_of(I);
  assert(max_degree >= g.degree() + 1);
  DegreeTable table(I, max_degree);
  int n = I.ring.n();
  // coefficient of t^k in (sum h(j) t^j) * (1-t)^(n+1), exact for k <= D
  for (int k = 0; k <= max_degree; ++k) {
    Int ck(0);
    for (int i = 0; i <= std::min(k, n + 1); ++i) {
      Int term = binom(Int(n + 1), static_cast<unsigned long>(i)) *
                 table.quotient_h(k - i);
      ck += (i % 2 == 0) ? term : -term;
    }
    if (ck != g.coeff(k)) return false;
  }
  return true;
}

namespace {

struct IdealHash {
  std::size_t operator()(const StronglyStableIdeal& I) const {
    return hash_value(I);
  }
};

long budget_from(const QPoly& target, const StronglyStableIdeal& I) {
  QPoly diff = target - quotient_hilbert_qpoly(I);
  if (diff.is_zero()) return 0;
  if (diff.degree() != 0) {
    throw std::logic_error("stage budget is not a constant");
  }
  Rat a = diff.coeff(0);
  if (a.get_den() != 1) throw std::logic_error("stage budget is not an integer");
  Int v = a.get_num();
  if (v < -1000000000 || v > 1000000000) {
    throw PolynomialError("expansion budget " + v.get_str() +
                          " is out of the supported range");
  }
  return v.get_si();
}

}  // namespace

std::vector<StronglyStableIdeal> naive_enumerate_by_hp(
    const HilbertPolynomial& p, AmbientRing ring) {
  if (ring.num_vars < 2) {
    throw RingTooSmallError("enumeration needs at least 2 variables");
  }
  if (p.is_zero()) return {};
  int n = ring.n();
  int d = p.degree();
  if (d == n && std::all_of(p.b.begin(), p.b.end(),
                            [](const Int& x) { return x == 1; })) {
    return {StronglyStableIdeal{ring, {}}};
  }
  if (d > n - 1) return {};

  using Seen = std::unordered_set<StronglyStableIdeal, IdealHash>;

  // stage d: all expansion orders from the unit ideal in n+1-d variables
  AmbientRing stage_ring{ring.num_vars - d};
  std::vector<StronglyStableIdeal> current;
  {
    QPoly target = to_qpoly(difference(p, d));
    StronglyStableIdeal root{stage_ring, {Monomial::unit(stage_ring.num_vars)}};
    long root_budget = budget_from(target, root);
    std::vector<std::pair<StronglyStableIdeal, long>> queue;
    Seen seen;
    seen.insert(root);
    queue.emplace_back(std::move(root), root_budget);
    while (!queue.empty()) {
      auto [I, rem] = std::move(queue.back());
      queue.pop_back();
      if (rem == 0) {
        current.push_back(I);
        continue;
      }
      for (const Monomial& m : I.gens) {
        if (!is_expandable(I, m)) continue;
        StronglyStableIdeal child = expand(I, m);
        if (seen.insert(child).second) queue.emplace_back(std::move(child), rem - 1);
      }
    }
  }

  for (int j = d - 1; j >= 0; --j) {
    AmbientRing rj{ring.num_vars - j};
    QPoly target = to_qpoly(difference(p, j));
    std::vector<std::pair<StronglyStableIdeal, long>> queue;
    Seen seen;
    for (const StronglyStableIdeal& I : current) {
      StronglyStableIdeal ext = extend_ring(I, rj);
      long a = budget_from(target, ext);
      if (a < 0) continue;  // the Hilbert polynomial is already too large
      if (seen.insert(ext).second) queue.emplace_back(std::move(ext), a);
    }
    std::vector<StronglyStableIdeal> next;
    while (!queue.empty()) {
      auto [I, rem] = std::move(queue.back());
      queue.pop_back();
      if (rem == 0) {
        next.push_back(I);
        continue;
      }
      for (const Monomial& m : I.gens) {
        if (!is_expandable(I, m)) continue;
        StronglyStableIdeal child = expand(I, m);
        if (seen.insert(child).second) queue.emplace_back(std::move(child), rem - 1);
      }
    }
    current = std::move(next);
  }

  std::sort(current.begin(), current.end(), ideal_less);
  return current;
}

}  // namespace borel::oracle
