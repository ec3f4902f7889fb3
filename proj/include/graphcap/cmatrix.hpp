#pragma once

#include <Eigen/Dense>
#include <complex>

#include "graphcap/exact_matrix.hpp"

namespace graphcap {

using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;

/// Default tolerance for certificate checks.
inline constexpr double kVerifyTol = 1e-9;
/// Tighter tolerance for constructions produced in-process.
inline constexpr double kBuildTol = 1e-12;
/// Default for user-supplied certificates.
inline constexpr double kUserTol = 1e-6;

double max_abs(const CMatrix& m);

std::complex<double> hs_inner(const CMatrix& x, const CMatrix& y);  // Tr(x^dagger y)
double hs_norm(const CMatrix& x);

/// Singular values above tol * (largest singular value) count toward rank.
int rank_numeric(const CMatrix& m, double tol = kVerifyTol);

/// [[Re E, Im E], [-Im E, Re E]], doubling both dimensions.
RMatrix realify(const CMatrix& e);

/// Same block layout with exact rational entries (doubles are dyadic).
ExactMatrix realify_to_exact(const CMatrix& e);

bool is_hermitian(const CMatrix& m, double tol = kVerifyTol);
double min_hermitian_eigenvalue(const CMatrix& m);

/// Hermitian within tol and min eigenvalue >= -tol. Throws on non-square input.
bool psd_check(const CMatrix& m, double tol = kVerifyTol);

/// Hermitian within tol and ||M^2 - M||_max <= tol. Throws on non-square input.
bool projector_check(const CMatrix& m, double tol = kVerifyTol);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Partial traces on a bipartite space of dimension da*db (row-major pairing).
CMatrix partial_trace_first(const CMatrix& m, int da, int db);
CMatrix partial_trace_second(const CMatrix& m, int da, int db);

}  // namespace graphcap
