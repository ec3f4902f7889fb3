#include "graphcap/cmatrix.hpp"

#include <stdexcept>

namespace graphcap {

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

std::complex<double> hs_inner(const CMatrix& x, const CMatrix& y) {
  return (x.adjoint() * y).trace();
}

double hs_norm(const CMatrix& x) { return x.norm(); }

int rank_numeric(const CMatrix& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  double cutoff = tol * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

RMatrix realify(const CMatrix& e) {
  Eigen::Index r = e.rows(), c = e.cols();
  RMatrix out(2 * r, 2 * c);
  out.topLeftCorner(r, c) = e.real();
  out.topRightCorner(r, c) = e.imag();
  out.bottomLeftCorner(r, c) = -e.imag();
  out.bottomRightCorner(r, c) = e.real();
  return out;
}

ExactMatrix realify_to_exact(const CMatrix& e) {
  int r = static_cast<int>(e.rows()), c = static_cast<int>(e.cols());
  ExactMatrix out(FieldTag::rationals(), 2 * r, 2 * c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      Rational re = rational_from_double(e(i, j).real());
      Rational im = rational_from_double(e(i, j).imag());
      out.set(i, j, re);
      out.set(i, c + j, im);
      out.set(r + i, j, -im);
      out.set(r + i, c + j, re);
    }
  return out;
}

bool is_hermitian(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

double min_hermitian_eigenvalue(const CMatrix& m) {
  if (m.rows() == 0) return 0.0;
  CMatrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool psd_check(const CMatrix& m, double tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("psd_check: non-square input");
  if (!is_hermitian(m, tol)) return false;
  return min_hermitian_eigenvalue(m) >= -tol;
}

bool projector_check(const CMatrix& m, double tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("projector_check: non-square input");
  if (!is_hermitian(m, tol)) return false;
  return max_abs(m * m - m) <= tol;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix partial_trace_first(const CMatrix& m, int da, int db) {
  if (m.rows() != da * db || m.cols() != da * db)
    throw std::invalid_argument("partial_trace: dimension mismatch");
  CMatrix out = CMatrix::Zero(db, db);
  for (int a = 0; a < da; ++a)
    out += m.block(a * db, a * db, db, db);
  return out;
}

CMatrix partial_trace_second(const CMatrix& m, int da, int db) {
  if (m.rows() != da * db || m.cols() != da * db)
    throw std::invalid_argument("partial_trace: dimension mismatch");
  CMatrix out = CMatrix::Zero(da, da);
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < da; ++b) {
      std::complex<double> acc = 0.0;
      for (int k = 0; k < db; ++k) acc += m(a * db + k, b * db + k);
      out(a, b) = acc;
    }
  return out;
}

}  // namespace graphcap
