#include "graphcap/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace graphcap {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  adj_.assign(n, Bitset(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: loop edge");
  adj_[u].set(v);
  adj_[v].set(u);
}

std::size_t Graph::edge_count() const {
  std::size_t deg_sum = 0;
  for (const auto& row : adj_) deg_sum += row.count();
  return deg_sum / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (std::size_t v = adj_[u].find_next(u); v != Bitset::npos;
         v = adj_[u].find_next(v))
      out.emplace_back(u, static_cast<int>(v));
  return out;
}

namespace {

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph make_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);        // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);              // spokes
  }
  return g;
}

// Checks strong regularity with parameters (v,k,lambda,mu) by a triple loop.
bool is_srg(const Graph& g, int v, int k, int lambda, int mu) {
  if (g.vertex_count() != v) return false;
  for (int a = 0; a < v; ++a)
    if (g.degree(a) != k) return false;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) {
      int common = static_cast<int>((g.neighbors(a) & g.neighbors(b)).count());
      if (common != (g.adjacent(a, b) ? lambda : mu)) return false;
    }
  return true;
}

// 27 lines a_1..a_6, b_1..b_6, c_{ij} (i<j) with the classical intersection
// rules; vertices 0..5 = a, 6..11 = b, 12..26 = c in lexicographic (i,j).
Graph make_schlafli_complement() {
  Graph g(27);
  auto c_index = [](int i, int j) {  // 0-based i<j over {0..5}
    int idx = 12;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) {
        if (a == i && b == j) return idx;
        ++idx;
      }
    throw std::logic_error("c_index");
  };
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (i != j) g.add_edge(i, 6 + j);  // a_i ~ b_j iff i != j
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k)
        if (i == j || i == k) {
          g.add_edge(i, c_index(j, k));      // a_i ~ c_{jk} iff i in {j,k}
          g.add_edge(6 + i, c_index(j, k));  // b_i ~ c_{jk} iff i in {j,k}
        }
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = 0; k < 6; ++k)
        for (int l = k + 1; l < 6; ++l) {
          if (std::make_pair(i, j) >= std::make_pair(k, l)) continue;
          if (i != k && i != l && j != k && j != l)
            g.add_edge(c_index(i, j), c_index(k, l));  // disjoint pairs meet
        }
  if (!is_srg(g, 27, 10, 1, 5))
    throw std::logic_error("schlafli-complement: SRG(27,10,1,5) validation failed");
  return g;
}

}  // namespace

Graph make_named(const std::string& kind, const std::vector<int>& params) {
  auto need_n = [&]() {
    if (params.size() != 1)
      throw std::invalid_argument("make_named: kind '" + kind +
                                  "' takes one integer parameter");
    return params[0];
  };
  if (kind == "cycle") return make_cycle(need_n());
  if (kind == "complete") return make_complete(need_n());
  if (kind == "empty") return Graph(need_n());
  if (kind == "petersen") return make_petersen();
  if (kind == "schlafli-complement") return make_schlafli_complement();
  throw std::invalid_argument("make_named: unknown kind '" + kind + "'");
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  int ng = g.vertex_count();
  Graph out(ng + h.vertex_count());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(ng + u, ng + v);
  return out;
}

Graph strong_product(const Graph& g, const Graph& h) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  Graph out(ng * nh);
  for (int g1 = 0; g1 < ng; ++g1)
    for (int h1 = 0; h1 < nh; ++h1)
      for (int g2 = 0; g2 < ng; ++g2)
        for (int h2 = 0; h2 < nh; ++h2) {
          int p = pair_index(g1, h1, nh), q = pair_index(g2, h2, nh);
          if (p >= q) continue;
          bool gok = (g1 == g2) || g.adjacent(g1, g2);
          bool hok = (h1 == h2) || h.adjacent(h1, h2);
          if (gok && hok) out.add_edge(p, q);
        }
  return out;
}

Graph strong_power(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("strong_power: need k >= 1");
  Graph out = g;
  for (int i = 1; i < k; ++i) out = strong_product(out, g);
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("relabel: permutation size mismatch");
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0)
    throw std::invalid_argument("parse_edge_list: malformed header");
  Graph g(static_cast<int>(n));
  std::set<std::pair<long long, long long>> seen;
  for (long long e = 0; e < m; ++e) {
    long long u, v;
    if (!(in >> u >> v))
      throw std::invalid_argument("parse_edge_list: missing edge line");
    if (u == v) throw std::invalid_argument("parse_edge_list: loop edge");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("parse_edge_list: vertex out of range");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw std::invalid_argument("parse_edge_list: duplicate edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  auto es = g.edges();
  out << g.vertex_count() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace graphcap
