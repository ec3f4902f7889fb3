#include "graphcap/combinatorics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

namespace graphcap {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetClock {
  const SearchBudget& budget;
  Clock::time_point start = Clock::now();
  std::uint64_t nodes = 0;

  // Returns false once the budget is spent. Time is polled every 1024 nodes.
  bool tick() {
    ++nodes;
    if (nodes > budget.node_limit) return false;
    if ((nodes & 1023u) == 0) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    Clock::now() - start)
                    .count();
      if (ms > budget.time_limit_ms) return false;
    }
    return true;
  }
};

// Greedy proper coloring of the subgraph induced by P, ascending vertex
// order; the number of colors used upper-bounds the clique number of G[P].
int greedy_color_bound(const Graph& g, const Bitset& p) {
  std::vector<Bitset> classes;
  for (std::size_t v = p.find_first(); v != Bitset::npos; v = p.find_next(v)) {
    bool placed = false;
    for (auto& cls : classes) {
      if (!(g.neighbors(static_cast<int>(v)) & cls).any()) {
        cls.set(v);
        placed = true;
        break;
      }
    }
    if (!placed) {
      Bitset cls(g.vertex_count());
      cls.set(v);
      classes.push_back(std::move(cls));
    }
  }
  return static_cast<int>(classes.size());
}

int branch_vertex(const Graph& g, const Bitset& p) {
  int best = -1, best_deg = -1;
  for (std::size_t v = p.find_first(); v != Bitset::npos; v = p.find_next(v)) {
    int deg = static_cast<int>((g.neighbors(static_cast<int>(v)) & p).count());
    if (deg > best_deg) {
      best_deg = deg;
      best = static_cast<int>(v);
    }
  }
  return best;
}

struct CliqueSearch {
  const Graph& g;
  BudgetClock clock;
  int best = 0;
  std::vector<int> best_set;
  std::vector<int> current;
  bool exhausted = false;

  void expand(Bitset p) {
    if (exhausted) return;
    if (!clock.tick()) {
      exhausted = true;
      return;
    }
    if (static_cast<int>(current.size()) > best) {
      best = static_cast<int>(current.size());
      best_set = current;
    }
    if (!p.any()) return;
    if (static_cast<int>(current.size()) + greedy_color_bound(g, p) <= best)
      return;
    int v = branch_vertex(g, p);
    current.push_back(v);
    expand(p & g.neighbors(v));
    current.pop_back();
    if (exhausted) return;
    p.reset(v);
    if (static_cast<int>(current.size()) + greedy_color_bound(g, p) > best)
      expand(std::move(p));
  }
};

}  // namespace

IndependentSetResult max_clique(const Graph& g, const SearchBudget& budget) {
  CliqueSearch search{g, BudgetClock{budget}};
  Bitset all(g.vertex_count());
  all.set();
  search.expand(std::move(all));
  if (search.exhausted)
    throw BudgetExhausted("max_clique: budget exhausted", search.best,
                          g.vertex_count());
  std::sort(search.best_set.begin(), search.best_set.end());
  return {search.best, search.best_set, search.clock.nodes};
}

IndependentSetResult max_independent_set(const Graph& g,
                                         const SearchBudget& budget) {
  return max_clique(complement(g), budget);
}

int independence_number(const Graph& g, const SearchBudget& budget) {
  return max_independent_set(g, budget).size;
}

namespace {

// Exact chromatic number: DSATUR-ordered branch and bound. Ties are broken
// by saturation, then residual degree, then lowest index.
struct ColorSearch {
  const Graph& g;
  BudgetClock clock;
  int n;
  int best_upper;          // best complete coloring found so far
  std::vector<int> color;  // 1-based, 0 = uncolored
  bool exhausted = false;

  int pick() const {
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] != 0) continue;
      Bitset seen(best_upper + 2);
      int deg = 0;
      for (std::size_t u = g.neighbors(v).find_first(); u != Bitset::npos;
           u = g.neighbors(v).find_next(u)) {
        if (color[u] != 0)
          seen.set(color[u]);
        else
          ++deg;
      }
      int sat = static_cast<int>(seen.count());
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    return pick;
  }

  void search(int uncolored, int used) {
    if (exhausted) return;
    if (!clock.tick()) {
      exhausted = true;
      return;
    }
    if (used >= best_upper) return;
    if (uncolored == 0) {
      best_upper = used;
      return;
    }
    int v = pick();
    Bitset forbidden(used + 2);
    for (std::size_t u = g.neighbors(v).find_first(); u != Bitset::npos;
         u = g.neighbors(v).find_next(u))
      if (color[u] != 0) forbidden.set(color[u]);
    for (int c = 1; c <= std::min(used + 1, best_upper - 1); ++c) {
      if (forbidden.test(c)) continue;
      color[v] = c;
      search(uncolored - 1, std::max(used, c));
      color[v] = 0;
      if (exhausted) return;
    }
  }
};

int greedy_coloring(const Graph& g) {
  Bitset all(g.vertex_count());
  all.set();
  return greedy_color_bound(g, all);
}

}  // namespace

int chromatic_number(const Graph& g, const SearchBudget& budget) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  int upper = greedy_coloring(g);
  int lower;
  try {
    lower = max_clique(g, budget).size;
  } catch (const BudgetExhausted& e) {
    throw BudgetExhausted("chromatic_number: budget exhausted in clique bound",
                          e.best_lower, upper);
  }
  if (lower == upper) return upper;
  ColorSearch search{g, BudgetClock{budget}, n, upper,
                     std::vector<int>(n, 0)};
  search.search(n, 0);
  if (search.exhausted)
    throw BudgetExhausted("chromatic_number: budget exhausted", lower,
                          search.best_upper);
  return search.best_upper;
}

int clique_cover_number(const Graph& g, const SearchBudget& budget) {
  if (g.vertex_count() < 1)
    throw std::invalid_argument("clique_cover_number: need n >= 1");
  return chromatic_number(complement(g), budget);
}

namespace {

struct HomSearch {
  const Graph& g;
  const Graph& h;
  BudgetClock clock;
  std::vector<int> order;       // vertices of g, degree-descending
  std::vector<int> assignment;  // -1 = unassigned
  bool exhausted = false;

  bool assign(std::size_t pos, std::vector<Bitset> domains) {
    if (exhausted) return false;
    if (!clock.tick()) {
      exhausted = true;
      return false;
    }
    if (pos == order.size()) return true;
    int v = order[pos];
    const Bitset& dom = domains[v];
    for (std::size_t cand = dom.find_first(); cand != Bitset::npos;
         cand = dom.find_next(cand)) {
      assignment[v] = static_cast<int>(cand);
      auto next = domains;
      next[v].reset();
      next[v].set(cand);
      bool dead = false;
      for (std::size_t u = g.neighbors(v).find_first(); u != Bitset::npos;
           u = g.neighbors(v).find_next(u)) {
        if (assignment[u] != -1) continue;
        next[u] &= h.neighbors(static_cast<int>(cand));
        if (!next[u].any()) {
          dead = true;
          break;
        }
      }
      if (!dead && assign(pos + 1, std::move(next))) return true;
      assignment[v] = -1;
      if (exhausted) return false;
    }
    return false;
  }
};

bool verify_homomorphism(const Graph& g, const Graph& h,
                         const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != g.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (!h.adjacent(f[u], f[v])) return false;
  return true;
}

}  // namespace

HomSearchResult homomorphism_exists(const Graph& g, const Graph& h,
                                    const SearchBudget& budget) {
  int n = g.vertex_count();
  if (n == 0) return {TriState::yes, {}, 0};
  if (h.vertex_count() == 0) return {TriState::no, {}, 0};

  HomSearch search{g, h, BudgetClock{budget}};
  search.order.resize(n);
  std::iota(search.order.begin(), search.order.end(), 0);
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  search.assignment.assign(n, -1);

  std::vector<Bitset> domains(n, Bitset(h.vertex_count()));
  for (auto& d : domains) d.set();
  // A vertex with an edge can never map to an isolated target vertex; the
  // forward check handles this as soon as a neighbor is assigned.
  bool found = search.assign(0, std::move(domains));
  if (search.exhausted)
    return {TriState::unknown, {}, search.clock.nodes};
  if (!found) return {TriState::no, {}, search.clock.nodes};
  if (!verify_homomorphism(g, h, search.assignment))
    throw std::logic_error("homomorphism_exists: witness failed re-verification");
  return {TriState::yes, search.assignment, search.clock.nodes};
}

HomSearchResult cohom_leq(const Graph& g, const Graph& h,
                          const SearchBudget& budget) {
  return homomorphism_exists(complement(g), complement(h), budget);
}

CapacityEstimate capacity_lower_bound(const Graph& g, int power,
                                      const SearchBudget& budget) {
  if (power < 1) throw std::invalid_argument("capacity_lower_bound: need k >= 1");
  Graph p = strong_power(g, power);
  CapacityEstimate est;
  est.power = power;
  try {
    est.alpha_value = max_independent_set(p, budget).size;
    est.exact = true;
  } catch (const BudgetExhausted& e) {
    est.alpha_value = e.best_lower;
    est.exact = false;
  }
  est.root = std::pow(static_cast<double>(est.alpha_value), 1.0 / power);
  return est;
}

}  // namespace graphcap
