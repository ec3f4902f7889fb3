#include "graphcap/haemers.hpp"

#include <stdexcept>

namespace graphcap {

namespace {

void check_shape(const DRep& rep) {
  int n = rep.graph.vertex_count();
  std::size_t want = static_cast<std::size_t>(n) * n;
  if (rep.d < 1) throw std::invalid_argument("drep: block size must be >= 1");
  if (rep.complex_entries) {
    if (rep.complex_blocks.size() != want)
      throw std::invalid_argument("drep: block count mismatch");
    for (const auto& b : rep.complex_blocks)
      if (b.rows() != rep.d || b.cols() != rep.d)
        throw std::invalid_argument("drep: block dimension mismatch");
  } else {
    if (rep.exact_blocks.size() != want)
      throw std::invalid_argument("drep: block count mismatch");
    for (const auto& b : rep.exact_blocks)
      if (b.rows() != rep.d || b.cols() != rep.d || b.field() != rep.field)
        throw std::invalid_argument("drep: block dimension or field mismatch");
  }
}

bool exact_block_is(const ExactMatrix& b, const ExactMatrix& want) {
  return b == want;
}

}  // namespace

bool verify_drep(const DRep& rep, double tol) {
  check_shape(rep);
  int n = rep.graph.vertex_count();
  if (rep.complex_entries) {
    CMatrix id = CMatrix::Identity(rep.d, rep.d);
    for (int g = 0; g < n; ++g)
      for (int g2 = 0; g2 < n; ++g2) {
        const CMatrix& block = rep.complex_blocks[g * n + g2];
        if (g == g2) {
          if (max_abs(block - id) > tol) return false;
        } else if (!rep.graph.adjacent(g, g2)) {
          if (max_abs(block) > tol) return false;
        }
      }
    return true;
  }
  ExactMatrix id = ExactMatrix::identity(rep.field, rep.d);
  ExactMatrix zero(rep.field, rep.d, rep.d);
  for (int g = 0; g < n; ++g)
    for (int g2 = 0; g2 < n; ++g2) {
      const ExactMatrix& block = rep.exact_blocks[g * n + g2];
      if (g == g2) {
        if (!exact_block_is(block, id)) return false;
      } else if (!rep.graph.adjacent(g, g2)) {
        if (!exact_block_is(block, zero)) return false;
      }
    }
  return true;
}

ExactMatrix assemble_exact(const DRep& rep) {
  if (rep.complex_entries)
    throw std::invalid_argument("assemble_exact: complex representation");
  int n = rep.graph.vertex_count(), d = rep.d;
  ExactMatrix out(rep.field, n * d, n * d);
  for (int g = 0; g < n; ++g)
    for (int g2 = 0; g2 < n; ++g2) {
      const ExactMatrix& block = rep.exact_blocks[g * n + g2];
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          if (rep.field.is_rationals())
            out.set(g * d + i, g2 * d + j, block.rat_at(i, j));
          else
            out.set_mod(g * d + i, g2 * d + j, block.mod_at(i, j));
        }
    }
  return out;
}

CMatrix assemble_complex(const DRep& rep) {
  if (!rep.complex_entries)
    throw std::invalid_argument("assemble_complex: exact representation");
  int n = rep.graph.vertex_count(), d = rep.d;
  CMatrix out = CMatrix::Zero(n * d, n * d);
  for (int g = 0; g < n; ++g)
    for (int g2 = 0; g2 < n; ++g2)
      out.block(g * d, g2 * d, d, d) = rep.complex_blocks[g * n + g2];
  return out;
}

Rational haemers_upper_from_rep(const DRep& rep, double tol) {
  if (!verify_drep(rep, tol))
    throw std::invalid_argument("haemers_upper_from_rep: invalid representation");
  long long rank = rep.complex_entries
                       ? rank_numeric(assemble_complex(rep), tol)
                       : rank_exact(assemble_exact(rep));
  return Rational(rank, rep.d);
}

DRep eigen_shift_rep(const Graph& g, long long t) {
  if (t == 0) throw std::invalid_argument("eigen_shift_rep: t must be nonzero");
  int n = g.vertex_count();
  DRep rep;
  rep.graph = g;
  rep.d = 1;
  rep.field = FieldTag::rationals();
  rep.exact_blocks.assign(static_cast<std::size_t>(n) * n,
                          ExactMatrix(rep.field, 1, 1));
  Rational shift(-1, t);
  for (int u = 0; u < n; ++u) {
    rep.exact_blocks[u * n + u].set(0, 0, Rational(1));
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v)) rep.exact_blocks[u * n + v].set(0, 0, shift);
  }
  return rep;
}

DRep realify_drep(const DRep& rep) {
  if (!rep.complex_entries)
    throw std::invalid_argument("realify_drep: input must be complex");
  if (!verify_drep(rep))
    throw std::invalid_argument("realify_drep: invalid representation");
  int n = rep.graph.vertex_count(), d = rep.d;
  DRep out;
  out.graph = rep.graph;
  out.complex_entries = true;  // real entries, kept in the complex container
  out.d = 2 * d;
  out.complex_blocks.reserve(rep.complex_blocks.size());
  for (int g = 0; g < n; ++g)
    for (int g2 = 0; g2 < n; ++g2)
      out.complex_blocks.push_back(
          realify(rep.complex_blocks[g * n + g2]).cast<std::complex<double>>());
  return out;
}

DRep drep_product(const DRep& a, const DRep& b) {
  if (a.complex_entries != b.complex_entries ||
      (!a.complex_entries && !(a.field == b.field)))
    throw std::invalid_argument("drep_product: field mismatch");
  int na = a.graph.vertex_count(), nb = b.graph.vertex_count();
  DRep out;
  out.graph = strong_product(a.graph, b.graph);
  out.complex_entries = a.complex_entries;
  out.field = a.field;
  out.d = a.d * b.d;
  int n = na * nb;
  if (a.complex_entries) {
    out.complex_blocks.assign(static_cast<std::size_t>(n) * n,
                              CMatrix::Zero(out.d, out.d));
    for (int g = 0; g < na; ++g)
      for (int h = 0; h < nb; ++h)
        for (int g2 = 0; g2 < na; ++g2)
          for (int h2 = 0; h2 < nb; ++h2)
            out.complex_blocks[pair_index(g, h, nb) * n +
                               pair_index(g2, h2, nb)] =
                kron(a.complex_blocks[g * na + g2], b.complex_blocks[h * nb + h2]);
  } else {
    out.exact_blocks.assign(static_cast<std::size_t>(n) * n,
                            ExactMatrix(out.field, out.d, out.d));
    for (int g = 0; g < na; ++g)
      for (int h = 0; h < nb; ++h)
        for (int g2 = 0; g2 < na; ++g2)
          for (int h2 = 0; h2 < nb; ++h2)
            out.exact_blocks[pair_index(g, h, nb) * n +
                             pair_index(g2, h2, nb)] =
                kron(a.exact_blocks[g * na + g2], b.exact_blocks[h * nb + h2]);
  }
  return out;
}

int haemers_gf2_min_rank(const Graph& g) {
  int n = g.vertex_count();
  if (n > 5)
    throw std::invalid_argument("haemers_gf2_min_rank: oracle limited to n <= 5");
  auto edges = g.edges();
  // Free entries: one GF(2) value per ordered adjacent pair.
  std::vector<std::pair<int, int>> slots;
  for (auto [u, v] : edges) {
    slots.emplace_back(u, v);
    slots.emplace_back(v, u);
  }
  int best = n;
  std::uint64_t total = std::uint64_t(1) << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    // Rows as bit vectors over GF(2); diagonal fixed to 1.
    std::vector<std::uint32_t> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = 1u << i;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask & (std::uint64_t(1) << s))
        rows[slots[s].first] |= 1u << slots[s].second;
    int rank = 0;
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      for (int r = rank; r < n; ++r)
        if (rows[r] & (1u << col)) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(rows[pivot], rows[rank]);
      for (int r = rank + 1; r < n; ++r)
        if (rows[r] & (1u << col)) rows[r] ^= rows[rank];
      ++rank;
    }
    best = std::min(best, rank);
  }
  return best;
}

}  // namespace graphcap
