#include "graphcap/nc_graph.hpp"

#include <cmath>
#include <stdexcept>

namespace graphcap {

namespace {

// Modified Gram-Schmidt with one re-orthogonalization pass. Returns the
// residual after projecting x onto the current basis; callers decide whether
// the residual is worth keeping.
CMatrix project_out(const std::vector<CMatrix>& basis, CMatrix x) {
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : basis) x -= hs_inner(b, x) * b;
  return x;
}

void track(VerifyReport& report, const std::string& what, double magnitude,
           std::array<int, 4> where) {
  if (report.failure.empty() || magnitude > report.worst) {
    report.worst = magnitude;
    report.where = where;
    report.failure = what;
  }
  report.ok = false;
}

}  // namespace

NcGraph nc_from_generators(int dim, const std::vector<CMatrix>& gens,
                           double drop_tol) {
  for (const auto& g : gens)
    if (g.rows() != dim || g.cols() != dim)
      throw std::invalid_argument("nc_from_generators: dimension mismatch");
  NcGraph out;
  out.dim = dim;
  std::vector<CMatrix> pool;
  pool.push_back(CMatrix::Identity(dim, dim));
  for (const auto& g : gens) {
    pool.push_back(g);
    pool.push_back(g.adjoint());
  }
  for (const auto& m : pool) {
    double scale = hs_norm(m);
    if (scale == 0.0) continue;
    CMatrix residual = project_out(out.basis, m);
    double res_norm = hs_norm(residual);
    if (res_norm > drop_tol * scale) out.basis.push_back(residual / res_norm);
  }
  return out;
}

NcGraph nc_from_graph(const Graph& g) {
  int n = g.vertex_count();
  NcGraph out;
  out.dim = n;
  out.provenance = g;
  for (int v = 0; v < n; ++v) {
    CMatrix unit = CMatrix::Zero(n, n);
    unit(v, v) = 1.0;
    out.basis.push_back(std::move(unit));
  }
  for (auto [u, v] : g.edges()) {
    CMatrix a = CMatrix::Zero(n, n), b = CMatrix::Zero(n, n);
    a(u, v) = 1.0;
    b(v, u) = 1.0;
    out.basis.push_back(std::move(a));
    out.basis.push_back(std::move(b));
  }
  return out;
}

NcGraph nc_tensor(const NcGraph& s, const NcGraph& t) {
  NcGraph out;
  out.dim = s.dim * t.dim;
  out.basis.reserve(s.basis.size() * t.basis.size());
  for (const auto& a : s.basis)
    for (const auto& b : t.basis) out.basis.push_back(kron(a, b));
  if (s.provenance && t.provenance)
    out.provenance = strong_product(*s.provenance, *t.provenance);
  return out;
}

NcGraph nc_direct_sum(const NcGraph& s, const NcGraph& t) {
  NcGraph out;
  out.dim = s.dim + t.dim;
  out.basis.reserve(s.basis.size() + t.basis.size());
  for (const auto& a : s.basis) {
    CMatrix m = CMatrix::Zero(out.dim, out.dim);
    m.topLeftCorner(s.dim, s.dim) = a;
    out.basis.push_back(std::move(m));
  }
  for (const auto& b : t.basis) {
    CMatrix m = CMatrix::Zero(out.dim, out.dim);
    m.bottomRightCorner(t.dim, t.dim) = b;
    out.basis.push_back(std::move(m));
  }
  if (s.provenance && t.provenance)
    out.provenance = disjoint_union(*s.provenance, *t.provenance);
  return out;
}

std::vector<CMatrix> nc_perp(const NcGraph& s) {
  std::vector<CMatrix> out;
  int n = s.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CMatrix unit = CMatrix::Zero(n, n);
      unit(i, j) = 1.0;
      CMatrix residual = project_out(s.basis, unit);
      residual = project_out(out, std::move(residual));
      double norm = hs_norm(residual);
      if (norm > 1e-10) out.push_back(residual / norm);
    }
  if (static_cast<int>(out.size() + s.basis.size()) != n * n)
    throw std::logic_error("nc_perp: dimension count mismatch");
  return out;
}

bool nc_contains(const NcGraph& s, const CMatrix& x, double tol) {
  if (x.rows() != s.dim || x.cols() != s.dim)
    throw std::invalid_argument("nc_contains: dimension mismatch");
  double scale = std::max(1.0, hs_norm(x));
  return hs_norm(project_out(s.basis, x)) <= tol * scale;
}

bool nc_span_equal(const NcGraph& s, const NcGraph& t, double tol) {
  if (s.dim != t.dim) return false;
  if (s.basis.size() != t.basis.size()) return false;
  for (const auto& b : s.basis)
    if (!nc_contains(t, b, tol)) return false;
  for (const auto& b : t.basis)
    if (!nc_contains(s, b, tol)) return false;
  return true;
}

bool check_nc_invariants(const NcGraph& s, double tol) {
  for (std::size_t i = 0; i < s.basis.size(); ++i) {
    if (s.basis[i].rows() != s.dim || s.basis[i].cols() != s.dim) return false;
    for (std::size_t j = 0; j < s.basis.size(); ++j) {
      std::complex<double> want = (i == j) ? 1.0 : 0.0;
      if (std::abs(hs_inner(s.basis[i], s.basis[j]) - want) > tol) return false;
    }
  }
  if (s.dim == 0) return s.basis.empty();
  if (!nc_contains(s, CMatrix::Identity(s.dim, s.dim), tol)) return false;
  for (const auto& b : s.basis)
    if (!nc_contains(s, b.adjoint().eval(), tol)) return false;
  return true;
}

VerifyReport verify_nc_cohom(const NcCohomCert& cert, double tol) {
  VerifyReport report;
  int ds = cert.source.dim, dt = cert.target.dim;
  int k = cert.assisted() ? static_cast<int>(cert.rho->rows()) : 1;
  int domain = cert.assisted() ? ds * k : ds;
  if (cert.kraus.empty())
    throw std::invalid_argument("nc_cohom: empty Kraus list");
  for (const auto& e : cert.kraus)
    if (e.rows() != dt || e.cols() != domain)
      throw std::invalid_argument("nc_cohom: Kraus dimension mismatch");
  if (cert.assisted()) {
    if (cert.rho->rows() != cert.rho->cols())
      throw std::invalid_argument("nc_cohom: rho must be square");
    double herm = max_abs(*cert.rho - cert.rho->adjoint());
    if (herm > tol) track(report, "rho-hermitian", herm, {-1, -1, -1, -1});
    double eig = min_hermitian_eigenvalue(*cert.rho);
    if (eig <= tol)
      track(report, "rho-positive-definite", tol - eig, {-1, -1, -1, -1});
  }

  CMatrix sum = CMatrix::Zero(domain, domain);
  for (const auto& e : cert.kraus) sum += e.adjoint() * e;
  double tp = max_abs(sum - CMatrix::Identity(domain, domain));
  if (tp > tol) track(report, "kraus-completeness", tp, {-1, -1, -1, -1});

  std::vector<CMatrix> perp = nc_perp(cert.source);
  int nk = static_cast<int>(cert.kraus.size());
  for (int x = 0; x < static_cast<int>(perp.size()); ++x) {
    CMatrix lifted = cert.assisted() ? kron(perp[x], *cert.rho) : perp[x];
    for (int i = 0; i < nk; ++i)
      for (int j = 0; j < nk; ++j) {
        CMatrix moved = cert.kraus[i] * lifted * cert.kraus[j].adjoint();
        for (int y = 0; y < static_cast<int>(cert.target.basis.size()); ++y) {
          double overlap = std::abs(hs_inner(moved, cert.target.basis[y]));
          if (overlap > tol) track(report, "orthogonality", overlap, {x, i, j, y});
        }
      }
  }
  return report;
}

NcCohomCert nc_identity_cert(const NcGraph& s) {
  NcCohomCert cert;
  cert.source = s;
  cert.target = s;
  cert.kraus.push_back(CMatrix::Identity(s.dim, s.dim));
  return cert;
}

NcCohomCert indep_to_nc_cert(const NcGraph& s, const std::vector<CVector>& states,
                             double tol) {
  int k = static_cast<int>(states.size());
  for (const auto& psi : states) {
    if (psi.size() != s.dim)
      throw std::invalid_argument("indep_to_nc_cert: state dimension mismatch");
    if (std::abs(psi.norm() - 1.0) > tol)
      throw std::invalid_argument("indep_to_nc_cert: states must be unit vectors");
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      CMatrix dyad = states[i] * states[j].adjoint();
      for (const auto& y : s.basis)
        if (std::abs(hs_inner(dyad, y)) > tol)
          throw std::invalid_argument(
              "indep_to_nc_cert: states are not independent for S");
    }
  NcCohomCert cert;
  cert.source = nc_from_graph(Graph(k));
  cert.target = s;
  for (int i = 0; i < k; ++i) {
    CMatrix e = CMatrix::Zero(s.dim, k);
    e.col(i) = states[i];
    cert.kraus.push_back(std::move(e));
  }
  return cert;
}

namespace {

struct Spectral {
  Eigen::VectorXd eigenvalues;
  CMatrix eigenvectors;  // columns
};

Spectral hermitian_eigen(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es((m + m.adjoint()) / 2.0);
  return {es.eigenvalues(), es.eigenvectors()};
}

}  // namespace

PovmResult povm_from_ensemble(const std::vector<CMatrix>& rhos, double tol) {
  if (rhos.empty()) throw std::invalid_argument("povm_from_ensemble: empty ensemble");
  int d = static_cast<int>(rhos[0].rows());
  CMatrix rho = CMatrix::Zero(d, d);
  for (const auto& r : rhos) {
    if (r.rows() != d || r.cols() != d)
      throw std::invalid_argument("povm_from_ensemble: dimension mismatch");
    if (!psd_check(r, tol))
      throw std::invalid_argument("povm_from_ensemble: ensemble member not psd");
    rho += r;
  }
  Spectral es = hermitian_eigen(rho);
  if (es.eigenvalues.minCoeff() <= tol)
    throw std::invalid_argument("povm_from_ensemble: sum is singular");

  PovmResult out;
  out.omega = CVector::Zero(d * d);
  for (int i = 0; i < d; ++i)
    out.omega += std::sqrt(es.eigenvalues(i)) *
                 kron(es.eigenvectors.col(i), es.eigenvectors.col(i));
  Eigen::VectorXd inv_sqrt = es.eigenvalues.cwiseInverse().cwiseSqrt();
  for (const auto& r : rhos) {
    CMatrix in_basis = es.eigenvectors.adjoint() * r * es.eigenvectors;
    CMatrix a = es.eigenvectors *
                (inv_sqrt.asDiagonal() * in_basis.transpose() *
                 inv_sqrt.asDiagonal()) *
                es.eigenvectors.adjoint();
    out.povm.push_back(std::move(a));
  }
  return out;
}

NcCohomCert graph_cert_to_nc(const EaHomCert& cert, double tol) {
  VerifyReport check = verify_eahom(cert, std::max(tol, kUserTol));
  if (!check.ok)
    throw std::invalid_argument("graph_cert_to_nc: input certificate invalid: " +
                                check.failure);
  int n = cert.source.vertex_count(), m = cert.target.vertex_count();
  int d = cert.d;

  Spectral rho_es = hermitian_eigen(cert.rho);
  if (rho_es.eigenvalues.minCoeff() <= tol)
    throw std::invalid_argument("graph_cert_to_nc: rho is singular");
  Eigen::VectorXd inv_sqrt = rho_es.eigenvalues.cwiseInverse().cwiseSqrt();
  const CMatrix& v = rho_es.eigenvectors;

  NcCohomCert out;
  out.source = nc_from_graph(cert.source);
  out.target = nc_from_graph(cert.target);
  out.rho = cert.rho;

  for (int g = 0; g < n; ++g)
    for (int h = 0; h < m; ++h) {
      // A_g^h = rho^{-1/2} (rho_g^h)^T rho^{-1/2}, transpose in rho's eigenbasis.
      CMatrix in_basis = v.adjoint() * cert.op(g, h) * v;
      CMatrix a = v * (inv_sqrt.asDiagonal() * in_basis.transpose() *
                       inv_sqrt.asDiagonal()) * v.adjoint();
      Spectral a_es = hermitian_eigen(a);
      double cutoff = 1e-12 * std::max(1.0, a_es.eigenvalues.cwiseAbs().maxCoeff());
      // M_g^h maps the x-th eigenvector of A_g^h to the x-th eigenvector of
      // rho, scaled by sqrt(mu_x); then A = M^dagger M.
      CMatrix mgh = CMatrix::Zero(d, d);
      for (int x = 0; x < d; ++x) {
        if (a_es.eigenvalues(x) <= cutoff) continue;
        mgh += std::sqrt(a_es.eigenvalues(x)) * v.col(x) *
               a_es.eigenvectors.col(x).adjoint();
      }
      for (int i = 0; i < d; ++i) {
        // E_{i,g,h} = |h> (<g| (x) <psi_i| M_g^h)
        Eigen::RowVectorXcd row = v.col(i).adjoint() * mgh;
        if (row.norm() <= 1e-14) continue;
        CMatrix e = CMatrix::Zero(m, n * d);
        e.block(h, g * d, 1, d) = row;
        out.kraus.push_back(std::move(e));
      }
    }
  return out;
}

bool check_channel(const ChannelSpec& channel, double tol) {
  if (channel.kraus.empty()) return false;
  Eigen::Index in = channel.kraus[0].cols();
  CMatrix sum = CMatrix::Zero(in, in);
  for (const auto& e : channel.kraus) {
    if (e.cols() != in) return false;
    sum += e.adjoint() * e;
  }
  return max_abs(sum - CMatrix::Identity(in, in)) <= tol;
}

BellResult bell_kraus(int n) {
  if (n < 1) throw std::invalid_argument("bell_kraus: need n >= 1");
  const std::complex<double> tau(0.0, 2.0 * M_PI / n);
  BellResult out;
  // |Phi_ij> = n^{-1/2} sum_k (X(i)Z(j)|k>) (x) |k>.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CVector phi = CVector::Zero(n * n);
      for (int k = 0; k < n; ++k) {
        std::complex<double> amp = std::exp(tau * double(j * k)) / std::sqrt(double(n));
        phi(((i + k) % n) * n + k) = amp;
      }
      out.bell_basis.push_back(std::move(phi));
    }
  NcCohomCert cert;
  cert.source = nc_from_generators(n, {});          // span{I_n}
  cert.target = nc_from_graph(Graph(n * n));        // empty_{n^2}
  cert.rho = CMatrix::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // Bell measurement: |i,j><Phi_ij|.
      CMatrix e = CMatrix::Zero(n * n, n * n);
      e.row(i * n + j) = out.bell_basis[i * n + j].adjoint();
      cert.kraus.push_back(std::move(e));
    }
  out.cert = std::move(cert);
  return out;
}

OrthCheckResult channel_orthogonality_check(const ChannelSpec& channel,
                                            const ChannelSpec& encoder_i,
                                            const ChannelSpec& encoder_j,
                                            const CVector& omega, double tol) {
  if (channel.kraus.empty() || encoder_i.kraus.empty() || encoder_j.kraus.empty())
    throw std::invalid_argument("channel_orthogonality_check: empty Kraus list");
  int a_dim = static_cast<int>(channel.kraus[0].cols());
  int b_dim = static_cast<int>(channel.kraus[0].rows());
  int a0_dim = static_cast<int>(encoder_i.kraus[0].cols());
  if (encoder_i.kraus[0].rows() != a_dim || encoder_j.kraus[0].rows() != a_dim ||
      encoder_j.kraus[0].cols() != a0_dim)
    throw std::invalid_argument("channel_orthogonality_check: dimension mismatch");
  if (omega.size() % a0_dim != 0)
    throw std::invalid_argument("channel_orthogonality_check: omega dimension mismatch");
  int b0_dim = static_cast<int>(omega.size()) / a0_dim;

  CMatrix omega_state = omega * omega.adjoint();
  auto push_through = [&](const ChannelSpec& enc) {
    CMatrix out = CMatrix::Zero(b_dim * b0_dim, b_dim * b0_dim);
    CMatrix id0 = CMatrix::Identity(b0_dim, b0_dim);
    for (const auto& nk : channel.kraus)
      for (const auto& ek : enc.kraus) {
        CMatrix lifted = kron(CMatrix(nk * ek), id0);
        out += lifted * omega_state * lifted.adjoint();
      }
    return out;
  };
  CMatrix out_i = push_through(encoder_i);
  CMatrix out_j = push_through(encoder_j);

  OrthCheckResult result;
  result.lhs_value = std::abs(hs_inner(out_i, out_j));
  result.lhs = result.lhs_value <= tol;

  CMatrix sigma = partial_trace_second(omega_state, a0_dim, b0_dim);
  double worst = 0.0;
  for (const auto& ei : encoder_i.kraus)
    for (const auto& ej : encoder_j.kraus) {
      CMatrix moved = ei * sigma * ej.adjoint();
      for (const auto& nm : channel.kraus)
        for (const auto& nn : channel.kraus)
          worst = std::max(worst,
                           std::abs(hs_inner(CMatrix(nm.adjoint() * nn), moved)));
    }
  result.rhs_value = worst;
  result.rhs = worst <= tol;
  return result;
}

}  // namespace graphcap
