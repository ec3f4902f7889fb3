#include "graphcap/certs.hpp"

#include <stdexcept>

namespace graphcap {

namespace {

void require_shapes(int ng, int nh, int d, const std::vector<CMatrix>& ops) {
  if (ops.size() != static_cast<std::size_t>(ng) * nh)
    throw std::invalid_argument("certificate: operator count mismatch");
  for (const auto& m : ops)
    if (m.rows() != d || m.cols() != d)
      throw std::invalid_argument("certificate: operator dimension mismatch");
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

// The forbidden tuples of the complement bookkeeping: (g,g') a distinct
// non-adjacent pair of the preorder source, (h,h') equal or adjacent in the
// preorder target.
template <typename Cert, typename Check>
void scan_orthogonality(const Cert& cert, Check&& check) {
  int ng = cert.source.vertex_count(), nh = cert.target.vertex_count();
  for (int g = 0; g < ng; ++g)
    for (int g2 = 0; g2 < ng; ++g2) {
      if (g == g2 || cert.source.adjacent(g, g2)) continue;
      for (int h = 0; h < nh; ++h)
        for (int h2 = 0; h2 < nh; ++h2) {
          if (h != h2 && !cert.target.adjacent(h, h2)) continue;
          check(g, h, g2, h2);
        }
    }
}

}  // namespace

VerifyReport verify_qhom(const QHomCert& cert, double tol) {
  int ng = cert.source.vertex_count(), nh = cert.target.vertex_count();
  require_shapes(ng, nh, cert.d, cert.ops);
  VerifyReport report;

  CMatrix id = CMatrix::Identity(cert.d, cert.d);
  for (int g = 0; g < ng; ++g) {
    CMatrix row_sum = CMatrix::Zero(cert.d, cert.d);
    for (int h = 0; h < nh; ++h) {
      const CMatrix& e = cert.op(g, h);
      double herm = max_abs(e - e.adjoint());
      if (herm > tol) track(report, "projector-hermitian", herm, {g, h, -1, -1});
      double idem = max_abs(e * e - e);
      if (idem > tol) track(report, "projector-idempotent", idem, {g, h, -1, -1});
      row_sum += e;
    }
    double res = max_abs(row_sum - id);
    if (res > tol) track(report, "row-sum-identity", res, {g, -1, -1, -1});
  }

  scan_orthogonality(cert, [&](int g, int h, int g2, int h2) {
    double v = max_abs(cert.op(g, h) * cert.op(g2, h2));
    if (v > tol) track(report, "orthogonality", v, {g, h, g2, h2});
  });
  return report;
}

VerifyReport verify_eahom(const EaHomCert& cert, double tol) {
  int ng = cert.source.vertex_count(), nh = cert.target.vertex_count();
  require_shapes(ng, nh, cert.d, cert.ops);
  if (cert.rho.rows() != cert.d || cert.rho.cols() != cert.d)
    throw std::invalid_argument("eahom: rho dimension mismatch");
  VerifyReport report;

  double rho_herm = max_abs(cert.rho - cert.rho.adjoint());
  if (rho_herm > tol) track(report, "rho-hermitian", rho_herm, {-1, -1, -1, -1});
  double min_eig = min_hermitian_eigenvalue(cert.rho);
  if (min_eig <= tol)
    track(report, "rho-positive-definite", tol - min_eig, {-1, -1, -1, -1});

  for (int g = 0; g < ng; ++g) {
    CMatrix row_sum = CMatrix::Zero(cert.d, cert.d);
    for (int h = 0; h < nh; ++h) {
      const CMatrix& r = cert.op(g, h);
      double herm = max_abs(r - r.adjoint());
      if (herm > tol) track(report, "psd-hermitian", herm, {g, h, -1, -1});
      double eig = min_hermitian_eigenvalue(r);
      if (eig < -tol) track(report, "psd-eigenvalue", -eig, {g, h, -1, -1});
      row_sum += r;
    }
    double res = max_abs(row_sum - cert.rho);
    if (res > tol) track(report, "row-sum-rho", res, {g, -1, -1, -1});
  }

  scan_orthogonality(cert, [&](int g, int h, int g2, int h2) {
    double v = max_abs(cert.op(g, h) * cert.op(g2, h2));
    if (v > tol) track(report, "orthogonality", v, {g, h, g2, h2});
  });
  return report;
}

QHomCert lift_classical(const Graph& g, const Graph& h,
                        const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != g.vertex_count())
    throw std::invalid_argument("lift_classical: witness size mismatch");
  Graph gc = complement(g), hc = complement(h);
  for (auto [u, v] : gc.edges())
    if (!hc.adjacent(f[u], f[v]))
      throw std::invalid_argument("lift_classical: not a cohomomorphism witness");
  QHomCert cert;
  cert.source = g;
  cert.target = h;
  cert.d = 1;
  cert.ops.assign(
      static_cast<std::size_t>(g.vertex_count()) * h.vertex_count(),
      CMatrix::Zero(1, 1));
  for (int u = 0; u < g.vertex_count(); ++u) cert.op(u, f[u])(0, 0) = 1.0;
  return cert;
}

EaHomCert ea_from_qhom(const QHomCert& cert) {
  EaHomCert out;
  out.source = cert.source;
  out.target = cert.target;
  out.d = cert.d;
  out.rho = CMatrix::Identity(cert.d, cert.d);
  out.ops = cert.ops;
  return out;
}

QHomCert realify_qhom(const QHomCert& cert) {
  QHomCert out;
  out.source = cert.source;
  out.target = cert.target;
  out.d = 2 * cert.d;
  out.ops.reserve(cert.ops.size());
  for (const auto& e : cert.ops)
    out.ops.push_back(realify(e).cast<std::complex<double>>());
  return out;
}

QHomCert combine_union(const QHomCert& c1, const QHomCert& c2) {
  int ng = c1.source.vertex_count(), nh = c1.target.vertex_count();
  int nk = c2.source.vertex_count(), nl = c2.target.vertex_count();
  QHomCert out;
  out.source = disjoint_union(c1.source, c2.source);
  out.target = disjoint_union(c1.target, c2.target);
  out.d = c1.d * c2.d;
  out.ops.assign(static_cast<std::size_t>(ng + nk) * (nh + nl),
                 CMatrix::Zero(out.d, out.d));
  CMatrix i1 = CMatrix::Identity(c1.d, c1.d), i2 = CMatrix::Identity(c2.d, c2.d);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < nh; ++v) out.op(u, v) = kron(c1.op(u, v), i2);
  for (int u = 0; u < nk; ++u)
    for (int v = 0; v < nl; ++v) out.op(ng + u, nh + v) = kron(i1, c2.op(u, v));
  return out;
}

QHomCert combine_product(const QHomCert& c1, const QHomCert& c2) {
  int ng = c1.source.vertex_count(), nh = c1.target.vertex_count();
  int nk = c2.source.vertex_count(), nl = c2.target.vertex_count();
  QHomCert out;
  out.source = strong_product(c1.source, c2.source);
  out.target = strong_product(c1.target, c2.target);
  out.d = c1.d * c2.d;
  out.ops.assign(static_cast<std::size_t>(ng * nk) * (nh * nl),
                 CMatrix::Zero(out.d, out.d));
  for (int g = 0; g < ng; ++g)
    for (int k = 0; k < nk; ++k)
      for (int h = 0; h < nh; ++h)
        for (int l = 0; l < nl; ++l)
          out.op(pair_index(g, k, nk), pair_index(h, l, nl)) =
              kron(c1.op(g, h), c2.op(k, l));
  return out;
}

QHomCert compose_transitive(const QHomCert& c1, const QHomCert& c2) {
  if (!(c1.target == c2.source))
    throw std::invalid_argument("compose_transitive: middle graph mismatch");
  int ng = c1.source.vertex_count(), nh = c1.target.vertex_count();
  int nl = c2.target.vertex_count();
  QHomCert out;
  out.source = c1.source;
  out.target = c2.target;
  out.d = c1.d * c2.d;
  out.ops.assign(static_cast<std::size_t>(ng) * nl, CMatrix::Zero(out.d, out.d));
  for (int g = 0; g < ng; ++g)
    for (int l = 0; l < nl; ++l) {
      CMatrix acc = CMatrix::Zero(out.d, out.d);
      for (int h = 0; h < nh; ++h) acc += kron(c1.op(g, h), c2.op(h, l));
      out.op(g, l) = acc;
    }
  return out;
}

EaHomCert combine_union(const EaHomCert& c1, const EaHomCert& c2) {
  int ng = c1.source.vertex_count(), nh = c1.target.vertex_count();
  int nk = c2.source.vertex_count(), nl = c2.target.vertex_count();
  EaHomCert out;
  out.source = disjoint_union(c1.source, c2.source);
  out.target = disjoint_union(c1.target, c2.target);
  out.d = c1.d * c2.d;
  out.rho = kron(c1.rho, c2.rho);
  out.ops.assign(static_cast<std::size_t>(ng + nk) * (nh + nl),
                 CMatrix::Zero(out.d, out.d));
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < nh; ++v) out.op(u, v) = kron(c1.op(u, v), c2.rho);
  for (int u = 0; u < nk; ++u)
    for (int v = 0; v < nl; ++v) out.op(ng + u, nh + v) = kron(c1.rho, c2.op(u, v));
  return out;
}

EaHomCert combine_product(const EaHomCert& c1, const EaHomCert& c2) {
  int ng = c1.source.vertex_count(), nh = c1.target.vertex_count();
  int nk = c2.source.vertex_count(), nl = c2.target.vertex_count();
  EaHomCert out;
  out.source = strong_product(c1.source, c2.source);
  out.target = strong_product(c1.target, c2.target);
  out.d = c1.d * c2.d;
  out.rho = kron(c1.rho, c2.rho);
  out.ops.assign(static_cast<std::size_t>(ng * nk) * (nh * nl),
                 CMatrix::Zero(out.d, out.d));
  for (int g = 0; g < ng; ++g)
    for (int k = 0; k < nk; ++k)
      for (int h = 0; h < nh; ++h)
        for (int l = 0; l < nl; ++l)
          out.op(pair_index(g, k, nk), pair_index(h, l, nl)) =
              kron(c1.op(g, h), c2.op(k, l));
  return out;
}

EaHomCert compose_transitive(const EaHomCert& c1, const EaHomCert& c2) {
  if (!(c1.target == c2.source))
    throw std::invalid_argument("compose_transitive: middle graph mismatch");
  int ng = c1.source.vertex_count(), nh = c1.target.vertex_count();
  int nl = c2.target.vertex_count();
  EaHomCert out;
  out.source = c1.source;
  out.target = c2.target;
  out.d = c1.d * c2.d;
  out.rho = kron(c1.rho, c2.rho);
  out.ops.assign(static_cast<std::size_t>(ng) * nl, CMatrix::Zero(out.d, out.d));
  for (int g = 0; g < ng; ++g)
    for (int l = 0; l < nl; ++l) {
      CMatrix acc = CMatrix::Zero(out.d, out.d);
      for (int h = 0; h < nh; ++h) acc += kron(c1.op(g, h), c2.op(h, l));
      out.op(g, l) = acc;
    }
  return out;
}

bool verify_orth_rep(const OrthRep& rep, double tol) {
  int n = rep.graph.vertex_count();
  if (static_cast<int>(rep.vectors.size()) != n) return false;
  for (const auto& u : rep.vectors)
    if (u.size() != rep.dim || std::abs(u.norm() - 1.0) > tol) return false;
  for (int g = 0; g < n; ++g)
    for (int g2 = g + 1; g2 < n; ++g2)
      if (!rep.graph.adjacent(g, g2) &&
          std::abs(rep.vectors[g].dot(rep.vectors[g2])) > tol)
        return false;
  return true;
}

QHomCert observation_cert(const OrthRep& orth,
                          const std::vector<std::vector<int>>& cliques,
                          double tol) {
  if (!verify_orth_rep(orth, tol))
    throw std::invalid_argument("observation_cert: invalid orthonormal representation");
  int d = orth.dim;
  int n = orth.graph.vertex_count();
  int m = static_cast<int>(cliques.size());

  Bitset used(n);
  for (const auto& c : cliques) {
    if (static_cast<int>(c.size()) != d)
      throw std::invalid_argument("observation_cert: clique size must equal dim");
    RMatrix sum = RMatrix::Zero(d, d);
    for (int v : c) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("observation_cert: vertex out of range");
      if (used.test(v))
        throw std::invalid_argument("observation_cert: cliques overlap");
      used.set(v);
      sum += orth.vectors[v] * orth.vectors[v].transpose();
    }
    if ((sum - RMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > tol)
      throw std::invalid_argument(
          "observation_cert: clique vectors do not resolve the identity");
  }

  QHomCert cert;
  cert.source = Graph(m);                    // empty graph on m vertices
  cert.target = complement(orth.graph);      // the preorder pair (empty_m, G)
  cert.d = d;
  cert.ops.assign(static_cast<std::size_t>(m) * n, CMatrix::Zero(d, d));
  for (int i = 0; i < m; ++i)
    for (int v : cliques[i])
      cert.op(i, v) = (orth.vectors[v] * orth.vectors[v].transpose())
                          .cast<std::complex<double>>();
  return cert;
}

ProjRankReport verify_projrank(const ProjRep& rep, double tol) {
  int n = rep.graph.vertex_count();
  ProjRankReport out;
  out.bound = Rational(rep.d, rep.r);
  if (static_cast<int>(rep.projectors.size()) != n)
    throw std::invalid_argument("projrank: projector count mismatch");
  for (const auto& e : rep.projectors)
    if (e.rows() != rep.d || e.cols() != rep.d)
      throw std::invalid_argument("projrank: projector dimension mismatch");

  for (int g = 0; g < n; ++g) {
    const CMatrix& e = rep.projectors[g];
    double herm = max_abs(e - e.adjoint());
    if (herm > tol) track(out.report, "projector-hermitian", herm, {g, -1, -1, -1});
    double idem = max_abs(e * e - e);
    if (idem > tol) track(out.report, "projector-idempotent", idem, {g, -1, -1, -1});
    int rank = rank_numeric(e, tol);
    if (rank != rep.r)
      track(out.report, "projector-rank", std::abs(rank - rep.r), {g, -1, -1, -1});
  }
  for (auto [g, g2] : rep.graph.edges()) {
    double v = max_abs(rep.projectors[g] * rep.projectors[g2]);
    if (v > tol) track(out.report, "edge-orthogonality", v, {g, g2, -1, -1});
  }
  return out;
}

ProjRep realify_projrep(const ProjRep& rep) {
  ProjRep out;
  out.graph = rep.graph;
  out.d = 2 * rep.d;
  out.r = 2 * rep.r;
  out.projectors.reserve(rep.projectors.size());
  for (const auto& e : rep.projectors)
    out.projectors.push_back(realify(e).cast<std::complex<double>>());
  return out;
}

}  // namespace graphcap
