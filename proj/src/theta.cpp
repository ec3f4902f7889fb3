#include "graphcap/theta.hpp"

#include <algorithm>
#include <cmath>

#include "graphcap/nc_graph.hpp"

namespace graphcap {

namespace {

constexpr int kMaxIterations = 200;
constexpr double kGapRel = 1e-9;

struct ThetaProblem {
  int n;
  std::vector<std::pair<int, int>> edges;
  int m;  // |edges| + 1, the trace constraint is last

  explicit ThetaProblem(const Graph& g) : n(g.vertex_count()), edges(g.edges()) {
    m = static_cast<int>(edges.size()) + 1;
  }

  // Z-contribution of dual variables: sum_e y_e (E_uv + E_vu) + y_tr I.
  RMatrix adjoint_apply(const Eigen::VectorXd& y) const {
    RMatrix out = RMatrix::Zero(n, n);
    for (int k = 0; k < m - 1; ++k) {
      auto [u, v] = edges[k];
      out(u, v) += y(k);
      out(v, u) += y(k);
    }
    out.diagonal().array() += y(m - 1);
    return out;
  }

  // Keeps iterates exactly on the affine constraints.
  void project_primal(RMatrix& x) const {
    for (auto [u, v] : edges) {
      x(u, v) = 0.0;
      x(v, u) = 0.0;
    }
    x /= x.trace();
  }
};

double psd_step_length(const RMatrix& s, const RMatrix& ds) {
  double alpha = 1.0;
  while (alpha > 1e-12) {
    Eigen::LLT<RMatrix> llt(s + alpha * ds);
    if (llt.info() == Eigen::Success) break;
    alpha *= 0.8;
  }
  if (alpha < 1.0) alpha = std::min(1.0, 0.95 * alpha);
  return alpha;
}

}  // namespace

SdpSolution lovasz_theta(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {0.0, RMatrix(0, 0), RMatrix(0, 0), 0.0, 0};
  ThetaProblem prob(g);
  const int m = prob.m;

  Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
  b(m - 1) = 1.0;

  RMatrix X = RMatrix::Identity(n, n) / n;
  Eigen::VectorXd y = Eigen::VectorXd::Zero(m);
  y(m - 1) = n + 1;
  RMatrix Z = (n + 1.0) * RMatrix::Identity(n, n) - RMatrix::Ones(n, n);

  double phi = y(m - 1);    // dual objective
  double psi = X.sum();     // primal objective <J,X>
  int iter = 0;

  while (phi - psi > kGapRel * (1.0 + std::abs(phi))) {
    if (iter >= kMaxIterations)
      throw SdpNoConvergence("lovasz_theta: no convergence", phi - psi, iter);
    ++iter;

    RMatrix Zi = Z.llt().solve(RMatrix::Identity(n, n));
    Zi = ((Zi + Zi.transpose()) / 2.0).eval();
    RMatrix ZiX = Zi * X;
    RMatrix XZi = ZiX.transpose();

    // System matrix M_kl = <A_k, Zi A_l X> (nonsymmetric), edge rows first.
    RMatrix M(m, m);
    for (int k = 0; k < m - 1; ++k) {
      auto [p, q] = prob.edges[k];
      for (int l = 0; l < m - 1; ++l) {
        auto [u, v] = prob.edges[l];
        M(k, l) = Zi(q, u) * X(v, p) + Zi(q, v) * X(u, p) + Zi(p, u) * X(v, q) +
                  Zi(p, v) * X(u, q);
      }
      M(k, m - 1) = ZiX(q, p) + ZiX(p, q);
      M(m - 1, k) = XZi(q, p) + XZi(p, q);
    }
    M(m - 1, m - 1) = ZiX.trace();

    Eigen::PartialPivLU<RMatrix> lu(M);

    Eigen::VectorXd rhs(m);
    for (int k = 0; k < m - 1; ++k) {
      auto [p, q] = prob.edges[k];
      rhs(k) = 2.0 * Zi(p, q);
    }
    rhs(m - 1) = Zi.trace();

    double gap_now = (Z.cwiseProduct(X)).sum();

    // Predictor: pure Newton step toward the boundary (mu = 0).
    Eigen::VectorXd dy_aff = lu.solve(-b);
    RMatrix dZ_aff = prob.adjoint_apply(dy_aff);
    RMatrix dX_aff = -X - Zi * dZ_aff * X;
    dX_aff = ((dX_aff + dX_aff.transpose()) / 2.0).eval();
    double ap_aff = psd_step_length(X, dX_aff);
    double ad_aff = psd_step_length(Z, dZ_aff);
    double gap_aff =
        ((Z + ad_aff * dZ_aff).cwiseProduct(X + ap_aff * dX_aff)).sum();
    double sigma = std::pow(std::max(gap_aff, 0.0) / gap_now, 3.0);
    sigma = std::clamp(sigma, 1e-10, 1.0);
    double mu = sigma * gap_now / (2.0 * n);

    // Corrector: recentered step with the Mehrotra target.
    Eigen::VectorXd dy = lu.solve(mu * rhs - b);
    RMatrix dZ = prob.adjoint_apply(dy);
    RMatrix dX = mu * Zi - X - Zi * dZ * X;
    dX = ((dX + dX.transpose()) / 2.0).eval();

    double alpha_p = psd_step_length(X, dX);
    double alpha_d = psd_step_length(Z, dZ);

    X += alpha_p * dX;
    X = ((X + X.transpose()) / 2.0).eval();
    prob.project_primal(X);
    y += alpha_d * dy;
    Z += alpha_d * dZ;
    Z = ((Z + Z.transpose()) / 2.0).eval();

    phi = b.dot(y);
    psi = X.sum();
  }

  SdpSolution sol;
  sol.value = phi;
  sol.primal = X;
  sol.dual = prob.adjoint_apply(y) - RMatrix::Ones(n, n);
  sol.gap = phi - psi;
  sol.iterations = iter;
  return sol;
}

SdpSolution theta_tilde_graph(const NcGraph& s) {
  if (!s.provenance.has_value())
    throw std::invalid_argument(
        "theta_tilde_graph: unsupported nc-graph (no graph provenance)");
  return lovasz_theta(*s.provenance);
}

}  // namespace graphcap
