#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace implode {

using cplx = std::complex<double>;

using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;
using CMatrix2 = Eigen::Matrix2cd;
using CMatrix4 = Eigen::Matrix4cd;

namespace linalg {

// Rank of an integer matrix computed over the rationals (exact).
int exact_rank(const IntMatrix& m);

// Greatest common divisor of the entries (0 for the zero vector).
std::int64_t content(const IntVector& v);

// v divided by its content; the zero vector is returned unchanged.
IntVector primitive(const IntVector& v);

// True iff the rows u, v are rational multiples of one another (either sign).
bool proportional(const IntVector& u, const IntVector& v);

// Integer basis of {x in Z^n : m x = 0}, as columns. The basis is saturated
// (it generates the full kernel lattice, not a finite-index sublattice).
IntMatrix integer_kernel(const IntMatrix& m);

// Inverse of a unimodular integer matrix. Throws if det is not +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Solve x^T m = rhs^T over the rationals for an integer matrix with
// independent rows; returns the coordinates scaled by the common denominator
// and made primitive (so the result only fixes the ray of the solution).
IntVector rational_coordinates_primitive(const IntMatrix& rows, const IntVector& rhs);

// Hermitian matrix functions through a self-adjoint eigendecomposition.
CMatrix hermitian_sqrt(const CMatrix& h);
CMatrix hermitian_exp(const CMatrix& h, double scale);

CMatrix traceless_part(const CMatrix& m);

// 2x2 symplectic form J = [[0,1],[-1,0]].
CMatrix2 symplectic_j();

}  // namespace linalg
}  // namespace implode
