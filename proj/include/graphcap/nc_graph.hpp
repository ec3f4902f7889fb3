#pragma once

#include <optional>
#include <vector>

#include "graphcap/certs.hpp"
#include "graphcap/cmatrix.hpp"
#include "graphcap/graph.hpp"

namespace graphcap {

/// Operator subspace S of the n x n complex matrices with S = S^dagger and
/// I in S, stored as a Hilbert-Schmidt-orthonormal generator list. `dim` is
/// the dimension of the underlying space, `basis.size()` the linear
/// dimension of the subspace. When the subspace was built from a classical
/// graph, the graph travels along as provenance.
struct NcGraph {
  int dim = 0;
  std::vector<CMatrix> basis;
  std::optional<Graph> provenance;

  int subspace_dim() const { return static_cast<int>(basis.size()); }
};

/// Span of gens together with their adjoints and the identity, orthonormal
/// under the Hilbert-Schmidt inner product; rank decisions at drop_tol
/// relative to the incoming norm.
NcGraph nc_from_generators(int dim, const std::vector<CMatrix>& gens,
                           double drop_tol = 1e-10);

/// S_G: diagonal units plus the matrix units of adjacent pairs; provenance
/// marker set. Subspace dimension n + 2|E|.
NcGraph nc_from_graph(const Graph& g);

NcGraph nc_tensor(const NcGraph& s, const NcGraph& t);
NcGraph nc_direct_sum(const NcGraph& s, const NcGraph& t);

/// Orthonormal basis of the Hilbert-Schmidt orthogonal complement.
std::vector<CMatrix> nc_perp(const NcGraph& s);

/// Projection residual of x onto the span of s is at most tol.
bool nc_contains(const NcGraph& s, const CMatrix& x, double tol = kVerifyTol);
bool nc_span_equal(const NcGraph& s, const NcGraph& t, double tol = kVerifyTol);

/// Checks orthonormality, adjoint closure and membership of the identity.
bool check_nc_invariants(const NcGraph& s, double tol = kVerifyTol);

/// Kraus-operator witness for source <= target (plain) or source <=_* target
/// (assisted, with the positive definite rho on the ancilla).
struct NcCohomCert {
  NcGraph source, target;
  std::vector<CMatrix> kraus;  // dim_T x dim_S, or dim_T x (dim_S * k) assisted
  std::optional<CMatrix> rho;  // assisted flavor only, k x k

  bool assisted() const { return rho.has_value(); }
};

VerifyReport verify_nc_cohom(const NcCohomCert& cert, double tol = kUserTol);

/// The identity channel witnesses S <= S.
NcCohomCert nc_identity_cert(const NcGraph& s);

/// Kraus operators |psi_i><i| for pure states with |psi_i><psi_j| orthogonal
/// to S for i != j (checked); witnesses empty_k <= S.
NcCohomCert indep_to_nc_cert(const NcGraph& s,
                             const std::vector<CVector>& states,
                             double tol = kVerifyTol);

/// Purification and POVM realizing an ensemble: rho_k =
/// Tr_1((A_k (x) I)|Omega><Omega|), with sum A_k = I. The transpose in
/// A_k = rho^{-1/2} rho_k^T rho^{-1/2} is taken in the eigenbasis of rho so
/// that the POVM property holds for complex rho as well.
struct PovmResult {
  CVector omega;               // in C^d (x) C^d
  std::vector<CMatrix> povm;   // one element per ensemble member
};
PovmResult povm_from_ensemble(const std::vector<CMatrix>& rhos,
                              double tol = kVerifyTol);

/// Converts an entanglement-assisted graph witness G <=_* H into an assisted
/// nc-graph witness S_G <=_* S_H via the POVM square roots.
NcCohomCert graph_cert_to_nc(const EaHomCert& cert, double tol = kVerifyTol);

/// Kraus operators of a quantum channel, sum of E^dagger E equal to the
/// identity within tol.
struct ChannelSpec {
  std::vector<CMatrix> kraus;
};
bool check_channel(const ChannelSpec& channel, double tol = kVerifyTol);

/// Bell-basis teleportation witness: the n^2 measurement operators
/// |i,j><Phi_ij| together with rho = I_n form an assisted certificate for
/// span{I_n} <=_* empty_{n^2}.
struct BellResult {
  std::vector<CVector> bell_basis;  // n^2 vectors, orthonormal
  NcCohomCert cert;
};
BellResult bell_kraus(int n);

/// Both sides of the output-orthogonality equivalence for encoders E_i, E_j
/// through channel N with shared state Omega: lhs tests Hilbert-Schmidt
/// orthogonality of the two channel outputs, rhs tests orthogonality of
/// span{E_i,l Tr_2(|Omega><Omega|) E_j,l'} to span{N_m^dagger N_n}. The two
/// booleans agree.
struct OrthCheckResult {
  bool lhs = false;
  bool rhs = false;
  double lhs_value = 0.0;  // |<out_i, out_j>|
  double rhs_value = 0.0;  // worst overlap with the channel subspace
};
OrthCheckResult channel_orthogonality_check(const ChannelSpec& channel,
                                            const ChannelSpec& encoder_i,
                                            const ChannelSpec& encoder_j,
                                            const CVector& omega,
                                            double tol = kVerifyTol);

}  // namespace graphcap
