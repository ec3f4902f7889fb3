#pragma once

#include <vector>

#include "graphcap/graph.hpp"
#include "graphcap/rational.hpp"

namespace graphcap {

/// Maximal cliques of g as vertex bitsets, Bron-Kerbosch with pivoting,
/// sorted canonically (by size descending is NOT used; lexicographic on the
/// sorted vertex lists). Every vertex lies in some maximal clique.
std::vector<Bitset> maximal_cliques(const Graph& g, int vertex_cap = 40);

/// Exact optimum of the clique cover LP together with both certificates:
/// primal weights s_C per clique (cover side) and dual weights t_g per
/// vertex (packing side). Both are feasible and share the optimum.
struct LpResult {
  Rational optimum;
  std::vector<Bitset> cliques;          // column order for primal_weights
  std::vector<Rational> primal_weights; // one per clique, sum = optimum
  std::vector<Rational> dual_weights;   // one per vertex, sum = optimum
};

/// Fractional clique cover number by exact rational simplex (Bland's rule)
/// over the maximal cliques. Requires n >= 1.
LpResult fractional_clique_cover(const Graph& g);

/// Recomputes feasibility of both weight vectors and equality of the two
/// objectives from scratch.
bool check_lp_certificates(const Graph& g, const LpResult& result);

}  // namespace graphcap
