#pragma once

#include <vector>

#include "graphcap/cmatrix.hpp"
#include "graphcap/exact_matrix.hpp"
#include "graphcap/graph.hpp"

namespace graphcap {

/// Block matrix fitting the graph pattern: M_{g,g} = I_d and M_{g,g'} = 0 on
/// distinct non-adjacent pairs. Entries live over an exact field or over the
/// complex numbers (reals are complex blocks with zero imaginary part).
struct DRep {
  Graph graph;
  bool complex_entries = false;
  FieldTag field = FieldTag::rationals();  // meaningful when !complex_entries
  int d = 1;
  // Row-major ordered vertex pairs: block (g,g') sits at index g*n+g'.
  std::vector<ExactMatrix> exact_blocks;
  std::vector<CMatrix> complex_blocks;
};

bool verify_drep(const DRep& rep, double tol = kVerifyTol);

ExactMatrix assemble_exact(const DRep& rep);  // nd x nd
CMatrix assemble_complex(const DRep& rep);

/// rk(M)/d for a valid representation; an upper bound on the fractional
/// Haemers bound over the representation's field. Exact fields use exact
/// rank, complex uses the tolerance rank.
Rational haemers_upper_from_rep(const DRep& rep, double tol = kVerifyTol);

/// d=1 rational representation with diagonal 1 and off-diagonal -A_{gg'}/t.
/// When t is an integer adjacency eigenvalue, rank = n - mult(t).
DRep eigen_shift_rep(const Graph& g, long long t);

/// Complex representation -> real representation with block size 2d; the
/// bound rk/d is preserved.
DRep realify_drep(const DRep& rep);

/// Kronecker of valid representations of G and H: a valid representation of
/// the strong product with multiplied block size.
DRep drep_product(const DRep& a, const DRep& b);

/// Exhaustive minimum of rk(M) over all d=1 representations over GF(2);
/// test oracle only, requires n <= 5.
int haemers_gf2_min_rank(const Graph& g);

}  // namespace graphcap
