#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace graphcap {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Finite simple graph on vertices 0..n-1. Adjacency is kept as one bitset
/// row per vertex; rows stay symmetric and loop-free. Values are immutable
/// after construction apart from add_edge, which is only meant for builders.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const;

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const Bitset& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].count()); }

  /// Adds the undirected edge {u,v}. Rejects loops and out-of-range vertices.
  void add_edge(int u, int v);

  /// Edge list with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  std::vector<Bitset> adj_;
};

/// Row-major pairing (g,h) -> g*m+h indexing the vertices of a product,
/// where m is the vertex count of the second factor.
inline int pair_index(int g, int h, int m) { return g * m + h; }

/// Named constructors. Supported kinds: "cycle" n (n>=3), "complete" n,
/// "empty" n, "petersen", "schlafli-complement". The Schlafli complement is
/// built from the 27-line intersection rules and self-validates as a
/// strongly regular graph with parameters (27,10,1,5).
Graph make_named(const std::string& kind, const std::vector<int>& params = {});

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph strong_product(const Graph& g, const Graph& h);
Graph strong_power(const Graph& g, int k);

/// Relabels vertices: vertex v of the input becomes perm[v] in the output.
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Edge-list text format: header "n m", then m lines "u v" with 0-indexed
/// endpoints. Rejects loops, duplicate edges and out-of-range vertices.
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

}  // namespace graphcap
