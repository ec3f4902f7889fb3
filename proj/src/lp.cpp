#include "graphcap/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphcap {

namespace {

void bron_kerbosch(const Graph& g, Bitset r, Bitset p, Bitset x,
                   std::vector<Bitset>& out) {
  if (!p.any() && !x.any()) {
    out.push_back(r);
    return;
  }
  // Pivot: vertex of P | X maximizing |P & N(u)|, lowest index on ties.
  Bitset px = p | x;
  int pivot = -1;
  std::size_t best = 0;
  for (std::size_t u = px.find_first(); u != Bitset::npos; u = px.find_next(u)) {
    std::size_t cnt = (p & g.neighbors(static_cast<int>(u))).count();
    if (pivot < 0 || cnt > best) {
      pivot = static_cast<int>(u);
      best = cnt;
    }
  }
  Bitset candidates = p & ~g.neighbors(pivot);
  for (std::size_t v = candidates.find_first(); v != Bitset::npos;
       v = candidates.find_next(v)) {
    Bitset rv = r;
    rv.set(v);
    bron_kerbosch(g, std::move(rv), p & g.neighbors(static_cast<int>(v)),
                  x & g.neighbors(static_cast<int>(v)), out);
    p.reset(v);
    x.set(v);
  }
}

std::vector<int> to_vertex_list(const Bitset& b) {
  std::vector<int> out;
  for (std::size_t v = b.find_first(); v != Bitset::npos; v = b.find_next(v))
    out.push_back(static_cast<int>(v));
  return out;
}

}  // namespace

std::vector<Bitset> maximal_cliques(const Graph& g, int vertex_cap) {
  int n = g.vertex_count();
  if (n > vertex_cap)
    throw std::invalid_argument("maximal_cliques: vertex cap exceeded");
  std::vector<Bitset> out;
  Bitset all(n);
  all.set();
  bron_kerbosch(g, Bitset(n), std::move(all), Bitset(n), out);
  std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
    return to_vertex_list(a) < to_vertex_list(b);
  });
  return out;
}

namespace {

// Dense rational simplex for: maximize sum(t) subject to A t <= 1, t >= 0,
// where row i of A is the incidence vector of clique i. The slack basis is
// feasible, Bland's rule guarantees termination. At optimality the reduced
// costs on the slack columns are the clique weights of the covering side.
struct Simplex {
  int m, n;                       // rows (cliques), structural columns (vertices)
  std::vector<std::vector<Rational>> tab;  // m rows, n+m+1 columns (last = rhs)
  std::vector<Rational> obj;               // reduced-cost row, n+m+1 entries
  std::vector<int> basis;                  // basic variable per row

  Simplex(const Graph& g, const std::vector<Bitset>& cliques) {
    m = static_cast<int>(cliques.size());
    n = g.vertex_count();
    tab.assign(m, std::vector<Rational>(n + m + 1, Rational(0)));
    for (int i = 0; i < m; ++i) {
      for (std::size_t v = cliques[i].find_first(); v != Bitset::npos;
           v = cliques[i].find_next(v))
        tab[i][v] = 1;
      tab[i][n + i] = 1;
      tab[i][n + m] = 1;
    }
    // Maximization: keep objective row as (z_j - c_j); start with -c.
    obj.assign(n + m + 1, Rational(0));
    for (int j = 0; j < n; ++j) obj[j] = -1;
    basis.resize(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;
  }

  void pivot(int row, int col) {
    Rational inv = 1 / tab[row][col];
    for (auto& v : tab[row]) v *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || tab[i][col] == 0) continue;
      Rational f = tab[i][col];
      for (int j = 0; j <= n + m; ++j) tab[i][j] -= f * tab[row][j];
    }
    if (obj[col] != 0) {
      Rational f = obj[col];
      for (int j = 0; j <= n + m; ++j) obj[j] -= f * tab[row][j];
    }
    basis[row] = col;
  }

  void solve() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n + m; ++j)
        if (obj[j] < 0) {  // Bland: lowest-index improving column
          enter = j;
          break;
        }
      if (enter < 0) return;
      int leave = -1;
      Rational best_ratio(0);
      for (int i = 0; i < m; ++i) {
        if (tab[i][enter] <= 0) continue;
        Rational ratio = tab[i][n + m] / tab[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0)
        throw std::logic_error("simplex: unbounded (cannot happen here)");
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult fractional_clique_cover(const Graph& g) {
  if (g.vertex_count() < 1)
    throw std::invalid_argument("fractional_clique_cover: need n >= 1");
  LpResult result;
  result.cliques = maximal_cliques(g);
  Simplex lp(g, result.cliques);
  lp.solve();

  int n = g.vertex_count(), m = static_cast<int>(result.cliques.size());
  result.dual_weights.assign(n, Rational(0));
  for (int i = 0; i < m; ++i)
    if (lp.basis[i] < n) result.dual_weights[lp.basis[i]] = lp.tab[i][n + m];
  result.primal_weights.assign(m, Rational(0));
  for (int i = 0; i < m; ++i) result.primal_weights[i] = lp.obj[n + i];
  result.optimum = lp.obj[n + m];

  if (!check_lp_certificates(g, result))
    throw std::logic_error("fractional_clique_cover: certificate check failed");
  return result;
}

bool check_lp_certificates(const Graph& g, const LpResult& r) {
  int n = g.vertex_count(), m = static_cast<int>(r.cliques.size());
  if (static_cast<int>(r.primal_weights.size()) != m) return false;
  if (static_cast<int>(r.dual_weights.size()) != n) return false;

  Rational primal_sum(0);
  for (int i = 0; i < m; ++i) {
    if (r.primal_weights[i] < 0) return false;
    primal_sum += r.primal_weights[i];
  }
  // Cover side: every vertex receives total weight at least 1.
  for (int v = 0; v < n; ++v) {
    Rational covered(0);
    for (int i = 0; i < m; ++i)
      if (r.cliques[i].test(v)) covered += r.primal_weights[i];
    if (covered < 1) return false;
  }
  // Packing side: every clique carries total vertex weight at most 1.
  Rational dual_sum(0);
  for (int v = 0; v < n; ++v) {
    if (r.dual_weights[v] < 0) return false;
    dual_sum += r.dual_weights[v];
  }
  for (int i = 0; i < m; ++i) {
    Rational load(0);
    for (std::size_t v = r.cliques[i].find_first(); v != Bitset::npos;
         v = r.cliques[i].find_next(v))
      load += r.dual_weights[v];
    if (load > 1) return false;
  }
  return primal_sum == r.optimum && dual_sum == r.optimum;
}

}  // namespace graphcap
