#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphcap/graph.hpp"

namespace graphcap {

/// Caps for the exact solvers. Exhaustion is reported, never silently
/// truncated. Defaults are sized for graphs up to roughly 60 vertices.
struct SearchBudget {
  std::uint64_t node_limit = 10'000'000;
  std::int64_t time_limit_ms = 60'000;
};

/// Thrown when a solver runs out of budget; carries the best bounds found.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, long long lower, long long upper)
      : std::runtime_error(what), best_lower(lower), best_upper(upper) {}
  long long best_lower;
  long long best_upper;
};

enum class TriState { yes, no, unknown };

struct HomSearchResult {
  TriState found = TriState::unknown;
  std::vector<int> witness;  // vertex map, set when found == yes
  std::uint64_t nodes = 0;
};

struct IndependentSetResult {
  int size = 0;
  std::vector<int> vertices;
  std::uint64_t nodes = 0;
};

/// power, the exact independence number of the power, and its k-th root.
struct CapacityEstimate {
  int power = 1;
  long long alpha_value = 0;
  double root = 0.0;
  bool exact = true;  // false when the budget ran out and alpha_value is only a lower bound
};

/// Exact maximum clique via branch and bound with a greedy-coloring bound.
/// Deterministic: branches on the lowest-index vertex of maximum degree in
/// the residual graph. Throws BudgetExhausted carrying the best bounds.
IndependentSetResult max_clique(const Graph& g, const SearchBudget& budget = {});

/// Exact independence number (max clique of the complement).
IndependentSetResult max_independent_set(const Graph& g, const SearchBudget& budget = {});
int independence_number(const Graph& g, const SearchBudget& budget = {});

/// Exact clique cover number, i.e. the chromatic number of the complement.
int clique_cover_number(const Graph& g, const SearchBudget& budget = {});
int chromatic_number(const Graph& g, const SearchBudget& budget = {});

/// Edge-preserving map search G -> H, backtracking over vertices in
/// degree-descending order with forward checking. Witnesses are re-verified
/// before they are returned. Budget exhaustion yields TriState::unknown.
HomSearchResult homomorphism_exists(const Graph& g, const Graph& h,
                                    const SearchBudget& budget = {});

/// Cohomomorphism preorder: G <= H iff complement(G) -> complement(H).
HomSearchResult cohom_leq(const Graph& g, const Graph& h,
                          const SearchBudget& budget = {});

/// alpha(G^boxtimes k)^(1/k). On budget exhaustion returns the best
/// independent set found, flagged non-exact.
CapacityEstimate capacity_lower_bound(const Graph& g, int power,
                                      const SearchBudget& budget = {});

}  // namespace graphcap
