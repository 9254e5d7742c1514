#include "borel/ideal.hpp"

#include <algorithm>
#include <cassert>

namespace borel {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& k : kept) {
      // kept is sorted by degree, so only proper divisors can appear before g
      if (k.degree() >= g.degree()) break;
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

bool is_minimal_generating_set(const std::vector<Monomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i != j && gens[i].divides(gens[j])) return false;
    }
  }
  return true;
}

StronglyStableIdeal make_ideal(AmbientRing ring, std::vector<Monomial> gens) {
  assert(std::all_of(gens.begin(), gens.end(), [&](const Monomial& g) {
    return g.num_vars() == ring.num_vars;
  }));
  return StronglyStableIdeal{ring, minimalize(std::move(gens))};
}

bool contains(const StronglyStableIdeal& I, const Monomial& m) {
  for (const Monomial& g : I.gens) {
    if (g.degree() > m.degree()) break;
    if (g.divides(m)) return true;
  }
  return false;
}

std::optional<BorelViolation> find_borel_violation(
    const StronglyStableIdeal& I) {
  for (const Monomial& g : I.gens) {
    for (int j = 1; j < g.num_vars(); ++j) {
      if (g[j] == 0) continue;
      for (int i = 0; i < j; ++i) {
        if (!contains(I, g.div_var(j).times_var(i))) {
          return BorelViolation{g, j, i};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_strongly_stable(const StronglyStableIdeal& I) {
  return !find_borel_violation(I).has_value();
}

bool is_saturated(const StronglyStableIdeal& I) {
  int last = I.ring.num_vars - 1;
  for (const Monomial& g : I.gens) {
    if (g[last] > 0) return false;
  }
  return true;
}

namespace {

StronglyStableIdeal substitute_ones_at_tail(const StronglyStableIdeal& I,
                                            int count) {
  std::vector<Monomial> gens;
  gens.reserve(I.gens.size());
  for (const Monomial& g : I.gens) {
    std::vector<int> e = g.exponents();
    for (int i = 0; i < count; ++i) e[e.size() - 1 - i] = 0;
    gens.emplace_back(std::move(e));
  }
  return make_ideal(I.ring, std::move(gens));
}

}  // namespace

StronglyStableIdeal saturate(const StronglyStableIdeal& I) {
  return substitute_ones_at_tail(I, 1);
}

StronglyStableIdeal double_saturate(const StronglyStableIdeal& I) {
  return substitute_ones_at_tail(I, 2);
}

StronglyStableIdeal restrict_ring(const StronglyStableIdeal& I, int j) {
  assert(j >= 0 && I.ring.num_vars - j >= 1);
  assert(is_saturated(I));
  int nv = I.ring.num_vars - j;
  std::vector<Monomial> gens;
  gens.reserve(I.gens.size());
  for (const Monomial& g : I.gens) {
    std::vector<int> e(g.exponents().begin(), g.exponents().begin() + nv);
    e[nv - 1] = 0;  // the old last variable, zero by saturation
    gens.emplace_back(std::move(e));
  }
  return make_ideal(AmbientRing{nv}, std::move(gens));
}

StronglyStableIdeal extend_ring(const StronglyStableIdeal& I,
                                AmbientRing larger) {
  assert(larger.num_vars >= I.ring.num_vars);
  std::vector<Monomial> gens;
  gens.reserve(I.gens.size());
  for (const Monomial& g : I.gens) {
    std::vector<int> e = g.exponents();
    e.resize(larger.num_vars, 0);
    gens.emplace_back(std::move(e));
  }
  return StronglyStableIdeal{larger, std::move(gens)};
}

namespace {

bool is_generator(const StronglyStableIdeal& I, const Monomial& m) {
  return std::find(I.gens.begin(), I.gens.end(), m) != I.gens.end();
}

// Replacement exponents start at the max index of m, except that the unit
// monomial expands across all of x_0..x_{n-1}.
int expansion_start(const Monomial& m) { return std::max(0, m.max_index()); }

}  // namespace

bool is_expandable(const StronglyStableIdeal& I, const Monomial& m) {
  if (!is_generator(I, m)) return false;
  if (m.is_unit()) return true;
  for (const Monomial& s : right_shifts(m)) {
    if (is_generator(I, s)) return false;
  }
  return true;
}

StronglyStableIdeal expand(const StronglyStableIdeal& I, const Monomial& m) {
  assert(is_expandable(I, m));
  std::vector<Monomial> gens;
  gens.reserve(I.gens.size() + I.ring.num_vars);
  for (const Monomial& g : I.gens) {
    if (!(g == m)) gens.push_back(g);
  }
  for (int j = expansion_start(m); j + 2 <= I.ring.num_vars; ++j) {
    gens.push_back(m.times_var(j));
  }
  std::sort(gens.begin(), gens.end(), canonical_less);
  // expansion of a minimal generating set is again minimal; no pruning needed
  return StronglyStableIdeal{I.ring, std::move(gens)};
}

bool is_contractible(const StronglyStableIdeal& I, const Monomial& m) {
  int n_minus_1 = I.ring.num_vars - 2;
  if (n_minus_1 < 0) return false;
  if (!is_generator(I, m.times_var(n_minus_1))) return false;
  for (const Monomial& s : left_shifts(m)) {
    if (!contains(I, s)) return false;
  }
  return true;
}

StronglyStableIdeal contract(const StronglyStableIdeal& I, const Monomial& m) {
  assert(is_contractible(I, m));
  std::vector<Monomial> removed;
  for (int j = expansion_start(m); j + 2 <= I.ring.num_vars; ++j) {
    removed.push_back(m.times_var(j));
  }
  std::vector<Monomial> gens;
  gens.reserve(I.gens.size());
  for (const Monomial& g : I.gens) {
    if (std::find(removed.begin(), removed.end(), g) == removed.end()) {
      gens.push_back(g);
    }
  }
  gens.push_back(m);
  return make_ideal(I.ring, std::move(gens));
}

std::vector<Monomial> contractible_monomials(const StronglyStableIdeal& I) {
  std::vector<Monomial> out;
  int n_minus_1 = I.ring.num_vars - 2;
  if (n_minus_1 < 0) return out;
  for (const Monomial& g : I.gens) {
    if (g[n_minus_1] == 0) continue;
    Monomial m = g.div_var(n_minus_1);
    if (is_contractible(I, m)) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<ContractionStep> contraction_sequence_to_double_saturation(
    StronglyStableIdeal I) {
  std::vector<ContractionStep> steps;
  int n_minus_1 = I.ring.num_vars - 2;
  for (;;) {
    const Monomial* first = nullptr;
    for (const Monomial& g : I.gens) {  // gens are canonically sorted
      if (g[n_minus_1] > 0) {
        first = &g;
        break;
      }
    }
    if (first == nullptr) break;
    Monomial pivot = first->div_var(n_minus_1);
    assert(is_contractible(I, pivot));
    I = contract(I, pivot);
    steps.push_back(ContractionStep{std::move(pivot), I});
  }
  return steps;
}

bool ideal_less(const StronglyStableIdeal& a, const StronglyStableIdeal& b) {
  return std::lexicographical_compare(a.gens.begin(), a.gens.end(),
                                      b.gens.begin(), b.gens.end(),
                                      canonical_less);
}

std::size_t hash_value(const StronglyStableIdeal& I) {
  std::size_t h = static_cast<std::size_t>(I.ring.num_vars);
  for (const Monomial& g : I.gens) {
    h ^= hash_value(g) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace borel
