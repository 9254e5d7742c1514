// Exhaustive, duplicate-free searches over saturated strongly stable ideals.
//
// All three enumerations walk expansion trees. The Hilbert-polynomial search
// runs in stages: stage j works in K[x_0..x_{n-j}], wants the j-th difference
// polynomial, and the gap to it is a constant that counts exactly how many
// expansions remain (each expansion raises the eventual Hilbert function by
// one). Within a stage, a canonicity fence admits exactly one expansion path
// to every reachable ideal, so no deduplication set is needed: a path is
// admitted iff reading it backwards gives the deterministic contraction
// chain to the shared double saturation (always contract the canonically
// first generator divisible by the next-to-last variable).
//
// The almost-lexsegment search expands only the lex-last generator per
// degree and forces the degree sequence of the chosen generators to be
// non-decreasing, which yields each almost-lexsegment ideal exactly once.
//
// The series search adds one generator per step in descending lex order
// within a degree, tracking the remaining numerator 1 - g(t) -
// sum (1-t)^{l_i} t^{d_i}; candidate generators are maintained explicitly
// and re-graded as the working degree climbs.

#include "borel/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <stdexcept>
#include <thread>
#include <utility>

namespace borel {

namespace {

constexpr long kBudgetLimit = 1000000000L;

long checked_budget(const Int& v) {
  if (v > kBudgetLimit) {
    throw PolynomialError("expansion budget " + v.get_str() +
                          " exceeds the supported limit");
  }
  return v.get_si();
}

// The constant gap target - p_{R/I}; negative gaps are reported as -1 (the
// caller discards those roots), and non-constant gaps cannot happen for
// ideals produced by the staged search.
long stage_budget(const QPoly& target, const StronglyStableIdeal& I) {
  QPoly diff = target - quotient_hilbert_qpoly(I);
  if (diff.is_zero()) return 0;
  if (diff.degree() != 0) {
    throw std::logic_error("stage gap is not a constant");
  }
  Rat a = diff.coeff(0);
  if (a.get_den() != 1) {
    throw std::logic_error("stage gap is not an integer");
  }
  if (a.get_num() < 0) return -1;
  return checked_budget(a.get_num());
}

// --- search driver ----------------------------------------------------
//
// Nodes form a tree: is_terminal() marks leaves and take_ideal() reads the
// result off a leaf. The frontier is widened breadth-first to a fixed size
// and then split into contiguous chunks, one worker each; outputs are
// concatenated in frontier order, so the emission order is a pure function
// of the tree and never of the worker count.

template <class Node, class ChildrenFn>
void dfs_collect(Node root, const ChildrenFn& children,
                 std::vector<StronglyStableIdeal>& out) {
  std::vector<Node> stack;
  stack.push_back(std::move(root));
  while (!stack.empty()) {
    Node nd = std::move(stack.back());
    stack.pop_back();
    if (nd.is_terminal()) {
      out.push_back(std::move(nd).take_ideal());
      continue;
    }
    std::vector<Node> kids = children(nd);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      stack.push_back(std::move(*it));
    }
  }
}

template <class Node, class ChildrenFn>
std::vector<StronglyStableIdeal> exhaust(std::vector<Node> frontier,
                                         int workers,
                                         const ChildrenFn& children) {
  constexpr std::size_t kWidenTarget = 64;
  for (;;) {
    bool has_inner = false;
    for (const Node& nd : frontier) {
      if (!nd.is_terminal()) {
        has_inner = true;
        break;
      }
    }
    if (!has_inner || frontier.size() >= kWidenTarget) break;
    std::vector<Node> next;
    next.reserve(frontier.size() * 2);
    for (Node& nd : frontier) {
      if (nd.is_terminal()) {
        next.push_back(std::move(nd));
        continue;
      }
      std::vector<Node> kids = children(nd);
      for (Node& kid : kids) next.push_back(std::move(kid));
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }

  std::vector<StronglyStableIdeal> out;
  if (workers <= 1 || frontier.size() <= 1) {
    for (Node& nd : frontier) dfs_collect(std::move(nd), children, out);
    return out;
  }
  std::size_t chunks = std::min<std::size_t>(workers, frontier.size());
  std::vector<std::vector<StronglyStableIdeal>> buffers(chunks);
  std::vector<std::thread> threads;
  std::size_t base = frontier.size() / chunks;
  std::size_t extra = frontier.size() % chunks;
  std::size_t begin = 0;
  for (std::size_t t = 0; t < chunks; ++t) {
    std::size_t len = base + (t < extra ? 1 : 0);
    threads.emplace_back([&children, &frontier, &buffers, t, begin, len] {
      for (std::size_t i = begin; i < begin + len; ++i) {
        dfs_collect(std::move(frontier[i]), children, buffers[t]);
      }
    });
    begin += len;
  }
  for (std::thread& th : threads) th.join();
  for (std::vector<StronglyStableIdeal>& buf : buffers) {
    out.insert(out.end(), std::make_move_iterator(buf.begin()),
               std::make_move_iterator(buf.end()));
  }
  return out;
}

bool is_full_ring_polynomial(const HilbertPolynomial& p, int n) {
  return p.degree() == n && std::all_of(p.b.begin(), p.b.end(),
                                        [](const Int& x) { return x == 1; });
}

// Expanding m is canonical iff the witness m * x_{n-1} comes first, in
// canonical order, among all generators of the expanded ideal divisible by
// x_{n-1}; the other such generators survive from I, so it suffices to beat
// them there.
bool fence_admits(const StronglyStableIdeal& I, const Monomial& m) {
  int y = I.ring.num_vars - 2;
  Monomial witness = m.times_var(y);
  for (const Monomial& g : I.gens) {
    if (g[y] == 0 || g == m) continue;
    if (!canonical_less(witness, g)) return false;
  }
  return true;
}

}  // namespace

std::vector<Monomial> canonical_expansions(const StronglyStableIdeal& I) {
  std::vector<Monomial> out;
  for (const Monomial& m : I.gens) {
    if (is_expandable(I, m) && fence_admits(I, m)) out.push_back(m);
  }
  return out;
}

namespace {

struct HpNode {
  StronglyStableIdeal ideal;
  long rem = 0;

  bool is_terminal() const { return rem == 0; }
  StronglyStableIdeal take_ideal() && { return std::move(ideal); }
};

}  // namespace

std::vector<StronglyStableIdeal> enumerate_by_hp(const HilbertPolynomial& p,
                                                 AmbientRing ring,
                                                 const EnumerateOptions& opts,
                                                 std::vector<StageStats>* stats) {
  if (ring.num_vars < 2) {
    throw RingTooSmallError("enumeration needs at least 2 variables");
  }
  if (stats) stats->clear();
  if (p.is_zero()) return {};
  int n = ring.n();
  int d = p.degree();
  if (is_full_ring_polynomial(p, n)) {
    return {StronglyStableIdeal{ring, {}}};
  }
  if (d > n - 1) return {};

  auto children = [](const HpNode& nd) {
    std::vector<HpNode> kids;
    for (const Monomial& m : canonical_expansions(nd.ideal)) {
      kids.push_back(HpNode{expand(nd.ideal, m), nd.rem - 1});
    }
    return kids;
  };

  std::vector<StronglyStableIdeal> current;
  for (int j = d; j >= 0; --j) {
    AmbientRing rj{ring.num_vars - j};
    QPoly target = to_qpoly(difference(p, j));
    std::vector<HpNode> roots;
    if (j == d) {
      StronglyStableIdeal root{rj, {Monomial::unit(rj.num_vars)}};
      long b = stage_budget(target, root);
      assert(b >= 0);
      roots.push_back(HpNode{std::move(root), b});
    } else {
      roots.reserve(current.size());
      for (StronglyStableIdeal& I : current) {
        StronglyStableIdeal ext = extend_ring(I, rj);
        long a = stage_budget(target, ext);
        if (a < 0) continue;  // Hilbert polynomial already too large
        roots.push_back(HpNode{std::move(ext), a});
      }
    }
    StageStats st;
    st.stage = j;
    st.roots = roots.size();
    for (const HpNode& nd : roots) st.max_budget = std::max(st.max_budget, nd.rem);
    current = exhaust(std::move(roots), opts.workers, children);
    st.outputs = current.size();
    if (stats) stats->push_back(st);
  }
  if (opts.sort_output) std::sort(current.begin(), current.end(), ideal_less);
  return current;
}

namespace {

struct AlNode {
  StronglyStableIdeal ideal;
  long rem = 0;
  int min_degree = 0;

  bool is_terminal() const { return rem == 0; }
  StronglyStableIdeal take_ideal() && { return std::move(ideal); }
};

}  // namespace

AlmostLexRun enumerate_almost_lex(const HilbertPolynomial& p, AmbientRing ring,
                                  const EnumerateOptions& opts) {
  if (ring.num_vars < 2) {
    throw RingTooSmallError("enumeration needs at least 2 variables");
  }
  AlmostLexRun run;
  run.start = StronglyStableIdeal{ring, {}};
  run.lex_expansions = 0;
  if (p.is_zero()) return run;
  int n = ring.n();
  int d = p.degree();
  if (is_full_ring_polynomial(p, n)) {
    run.ideals = {StronglyStableIdeal{ring, {}}};
    return run;
  }
  if (d > n - 1) return run;

  run.start = lex_ideal(drop_constant_to_doubly_saturated(p), ring);
  std::vector<Int> a = p.a_vector();
  run.lex_expansions = a[0];
  long budget = checked_budget(a[0]);

  auto children = [](const AlNode& nd) {
    std::vector<AlNode> kids;
    const std::vector<Monomial>& gens = nd.ideal.gens;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool last_of_degree = i + 1 == gens.size() ||
                            gens[i + 1].degree() != gens[i].degree();
      if (!last_of_degree) continue;
      int deg = gens[i].degree();
      if (deg < nd.min_degree) continue;
      // the lex-last generator of a degree is always expandable here
      assert(is_expandable(nd.ideal, gens[i]));
      kids.push_back(AlNode{expand(nd.ideal, gens[i]), nd.rem - 1, deg});
    }
    return kids;
  };

  std::vector<AlNode> roots;
  roots.push_back(AlNode{run.start, budget, 0});
  run.ideals = exhaust(std::move(roots), opts.workers, children);
  if (opts.sort_output) std::sort(run.ideals.begin(), run.ideals.end(), ideal_less);
  return run;
}

namespace {

struct SeriesNode {
  AmbientRing ring;
  std::vector<Monomial> gens;  // canonical order, minimal
  SeriesNumerator f;           // numerator still unaccounted for

  bool is_terminal() const { return f.is_zero(); }
  StronglyStableIdeal take_ideal() && {
    return StronglyStableIdeal{ring, std::move(gens)};
  }
};

int lowest_nonzero_index(const SeriesNumerator& f) {
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (f.c[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

void subtract_generator_term(SeriesNumerator& f, const Monomial& m) {
  int l = m.max_index();
  int d = m.degree();
  if (static_cast<int>(f.c.size()) < d + l + 1) f.c.resize(d + l + 1, Int(0));
  for (int k = 0; k <= l; ++k) {
    Int term = binom(Int(l), static_cast<unsigned long>(k));
    f.c[d + k] -= (k % 2 == 0) ? term : -term;
  }
  f.trim();
}

Monomial regrade(const Monomial& m, int target_degree) {
  int gap = target_degree - m.degree();
  assert(gap >= 0);
  if (gap == 0) return m;
  std::vector<int> e = m.exponents();
  e[m.max_index()] += gap;
  return Monomial(std::move(e));
}

bool left_shifts_inside(const Monomial& m, const StronglyStableIdeal& I) {
  for (const Monomial& s : left_shifts(m)) {
    if (!contains(I, s)) return false;
  }
  return true;
}

}  // namespace

std::vector<StronglyStableIdeal> enumerate_by_series(const SeriesNumerator& g,
                                                     AmbientRing ring,
                                                     const EnumerateOptions& opts,
                                                     SeriesSearchStats* stats) {
  if (ring.num_vars < 2) {
    throw RingTooSmallError("enumeration needs at least 2 variables");
  }
  if (g.is_zero()) return {};  // the series of the unit ideal; never proper
  if (g.coeff(0) != 1) {
    throw std::invalid_argument("series numerator must have constant term 1");
  }

  // The implied Hilbert polynomial caps generator degrees at b_0; a numerator
  // that yields no valid polynomial has no saturated quotient either.
  HilbertPolynomial hp;
  try {
    hp = decompose(numerator_to_polynomial(g, ring.n()));
  } catch (const PolynomialError&) {
    return {};
  }
  if (hp.is_zero()) return {};
  long cap = checked_budget(hp.b[0]);

  SeriesNumerator f0;
  f0.c.assign(g.c.size(), Int(0));
  for (std::size_t i = 1; i < g.c.size(); ++i) f0.c[i] = -g.c[i];
  f0.trim();

  std::atomic<std::size_t> nodes{0};
  std::atomic<std::size_t> skipped{0};
  int nv = ring.num_vars;

  auto children = [&nodes, &skipped, cap, nv](const SeriesNode& nd) {
    nodes.fetch_add(1, std::memory_order_relaxed);
    std::vector<SeriesNode> kids;
    int sd = lowest_nonzero_index(nd.f);
    assert(sd >= 0);
    if (nd.f.coeff(sd) < 0) return kids;  // only additions are available
    if (sd > cap) return kids;            // beyond the generator-degree cap
    StronglyStableIdeal parent{nd.ring, nd.gens};
    const Monomial* last = nd.gens.empty() ? nullptr : &nd.gens.back();

    // Scan every degree-sd monomial in the non-saturating variables, in
    // descending lex order, and branch on each admissible addition.  A
    // monomial qualifies when it is new, its left shifts already lie in the
    // ideal, and it extends the canonical generator order; the remaining
    // numerator then loses one unit at sd, so the scan revisits the same
    // degree until its coefficient is spent.
    auto consider = [&](Monomial xb) {
      if (last && last->degree() == sd && lex_compare(xb, *last) >= 0) return;
      if (contains(parent, xb) || !left_shifts_inside(xb, parent)) {
        skipped.fetch_add(1, std::memory_order_relaxed);
        return;
      }
      SeriesNode kid;
      kid.ring = nd.ring;
      kid.gens = nd.gens;
      kid.gens.push_back(std::move(xb));
      kid.f = nd.f;
      subtract_generator_term(kid.f, kid.gens.back());
      assert(lowest_nonzero_index(kid.f) == -1 ||
             lowest_nonzero_index(kid.f) >= sd);
      kids.push_back(std::move(kid));
    };
    std::vector<int> expo(static_cast<std::size_t>(nv), 0);
    auto fill = [&](auto&& self, int pos, int rem) -> void {
      if (pos == nv - 2) {
        expo[static_cast<std::size_t>(pos)] = rem;
        consider(Monomial(std::vector<int>(expo)));
        return;
      }
      for (int v = rem; v >= 0; --v) {
        expo[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1, rem - v);
      }
      expo[static_cast<std::size_t>(pos)] = 0;
    };
    fill(fill, 0, sd);
    return kids;
  };

  std::vector<SeriesNode> roots;
  roots.push_back(SeriesNode{ring, {}, f0});
  std::vector<StronglyStableIdeal> out =
      exhaust(std::move(roots), opts.workers, children);
  if (opts.sort_output) std::sort(out.begin(), out.end(), ideal_less);
  if (stats) {
    stats->nodes = nodes.load();
    stats->skipped_candidates = skipped.load();
  }
  return out;
}

namespace {

// Number of monomials of the same degree strictly lex-greater than m.
Int lex_desc_rank_int(const Monomial& m) {
  int nv = m.num_vars();
  int rem = m.degree();
  Int rank(0);
  for (int i = 0; i + 1 < nv; ++i) {
    rank += binom(Int(rem - m[i] + nv - i - 2),
                  static_cast<unsigned long>(nv - i - 1));
    rem -= m[i];
  }
  return rank;
}

}  // namespace

bool is_almost_lex(const StronglyStableIdeal& I) {
  if (I.is_zero() || I.is_unit()) return true;
  assert(is_saturated(I));
  int nv = I.ring.num_vars - 1;
  if (nv == 1) return true;  // a single power of x_0
  std::vector<Monomial> gens;
  gens.reserve(I.gens.size());
  for (const Monomial& g : I.gens) {
    std::vector<int> e(g.exponents().begin(), g.exponents().begin() + nv);
    gens.emplace_back(std::move(e));
  }
  StronglyStableIdeal restricted{AmbientRing{nv}, gens};
  SeriesNumerator gnum = series_numerator_of(restricted);
  int np = nv - 1;

  // check each generator degree: between generator degrees the piece is the
  // shadow of the previous one, and the shadow of a lex segment is again one
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i + 1 < gens.size() && gens[i + 1].degree() == gens[i].degree()) {
      continue;  // handle each degree once, at its last generator
    }
    int j = gens[i].degree();
    Int dim = binom(Int(j + np), static_cast<unsigned long>(np)) -
              h_from_numerator(gnum, np, j);
    const Monomial* least = nullptr;
    Monomial least_mult;
    for (const Monomial& m : gens) {
      if (m.degree() > j) break;
      Monomial mult = regrade(m, j);
      if (least == nullptr || lex_compare(mult, least_mult) < 0) {
        least = &m;
        least_mult = std::move(mult);
      }
    }
    Int rank = lex_desc_rank_int(least_mult) + 1;
    if (rank != dim) return false;
  }
  return true;
}

std::vector<StronglyStableIdeal> max_betti_filter(
    const std::vector<StronglyStableIdeal>& ideals) {
  std::vector<std::vector<Int>> bettis;
  bettis.reserve(ideals.size());
  std::size_t width = 0;
  for (const StronglyStableIdeal& I : ideals) {
    bettis.push_back(betti_numbers(I));
    width = std::max(width, bettis.back().size());
  }
  std::vector<Int> maxvec(width, Int(0));
  for (std::vector<Int>& b : bettis) {
    b.resize(width, Int(0));
    for (std::size_t i = 0; i < width; ++i) {
      if (b[i] > maxvec[i]) maxvec[i] = b[i];
    }
  }
  std::vector<StronglyStableIdeal> out;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (bettis[i] == maxvec) out.push_back(ideals[i]);
  }
  return out;
}

}  // namespace borel
