#pragma once

#include <array>
#include <string>
#include <vector>

#include "graphcap/cmatrix.hpp"
#include "graphcap/graph.hpp"
#include "graphcap/rational.hpp"

namespace graphcap {

/// Verification outcome with the worst violating tuple and its magnitude.
struct VerifyReport {
  bool ok = true;
  std::string failure;  // invariant family that broke, empty when ok
  double worst = 0.0;
  std::array<int, 4> where{-1, -1, -1, -1};
};

/// Witness for the quantum preorder pair source <= target. Data is indexed by
/// the preorder pair's own vertices; the verifier complements internally, so
/// the stored projectors realize a quantum homomorphism between complements.
struct QHomCert {
  Graph source, target;
  int d = 1;
  std::vector<CMatrix> ops;  // ops[g * |V(target)| + h], each d x d

  const CMatrix& op(int g, int h) const {
    return ops[static_cast<std::size_t>(g) * target.vertex_count() + h];
  }
  CMatrix& op(int g, int h) {
    return ops[static_cast<std::size_t>(g) * target.vertex_count() + h];
  }
};

/// Entanglement-assisted witness: psd operators summing to a shared positive
/// definite rho, same complement bookkeeping as QHomCert.
struct EaHomCert {
  Graph source, target;
  int d = 1;
  CMatrix rho;
  std::vector<CMatrix> ops;

  const CMatrix& op(int g, int h) const {
    return ops[static_cast<std::size_t>(g) * target.vertex_count() + h];
  }
  CMatrix& op(int g, int h) {
    return ops[static_cast<std::size_t>(g) * target.vertex_count() + h];
  }
};

/// Unit vectors per vertex, orthogonal on non-adjacent pairs.
struct OrthRep {
  Graph graph;
  int dim = 0;
  std::vector<Eigen::VectorXd> vectors;
};

/// Rank-r projectors killing the edges of the declared graph.
struct ProjRep {
  Graph graph;
  int d = 1;
  int r = 1;
  std::vector<CMatrix> projectors;
};

VerifyReport verify_qhom(const QHomCert& cert, double tol = kUserTol);
VerifyReport verify_eahom(const EaHomCert& cert, double tol = kUserTol);

/// d=1 lift of a classical cohomomorphism witness f (a homomorphism between
/// the complements, e.g. from cohom_leq). Re-verifies f first.
QHomCert lift_classical(const Graph& g, const Graph& h, const std::vector<int>& f);

EaHomCert ea_from_qhom(const QHomCert& cert);

/// Complex projectors -> real projectors of doubled dimension.
QHomCert realify_qhom(const QHomCert& cert);

// Preorder combinators. Union and product take witnesses for G<=H and K<=L
// and emit witnesses for the disjoint union resp. strong product pairs;
// compose chains G<=H and H<=L. All dimensions multiply.
QHomCert combine_union(const QHomCert& c1, const QHomCert& c2);
QHomCert combine_product(const QHomCert& c1, const QHomCert& c2);
QHomCert compose_transitive(const QHomCert& c1, const QHomCert& c2);
EaHomCert combine_union(const EaHomCert& c1, const EaHomCert& c2);
EaHomCert combine_product(const EaHomCert& c1, const EaHomCert& c2);
EaHomCert compose_transitive(const EaHomCert& c1, const EaHomCert& c2);

bool verify_orth_rep(const OrthRep& rep, double tol = kVerifyTol);

/// From an orthonormal representation of complement(G) and M disjoint
/// d-subsets whose vectors each resolve the identity, builds the projector
/// witness for empty_M <= G. The identity resolutions are checked.
QHomCert observation_cert(const OrthRep& orth,
                          const std::vector<std::vector<int>>& cliques,
                          double tol = kVerifyTol);

struct ProjRankReport {
  VerifyReport report;
  Rational bound;  // d/r when valid
};

/// Validity plus the certified upper bound d/r on the projective rank of the
/// declared graph.
ProjRankReport verify_projrank(const ProjRep& rep, double tol = kUserTol);

ProjRep realify_projrep(const ProjRep& rep);

}  // namespace graphcap
