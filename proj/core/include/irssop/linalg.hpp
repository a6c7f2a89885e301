// Copyright 2026 The irssop Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace irssop {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Max elementwise deviation from A = A^H accepted as Hermitian.
inline constexpr double kHermitianTol = 1e-10;

struct EigResult {
  RVector eigenvalues;   // ascending
  CMatrix eigenvectors;  // unit-norm columns, phase-normalized
};

/// True when A is square and max |A - A^H| <= tol.
bool is_hermitian(const CMatrix& A, double tol = kHermitianTol);

/// Rotates v so its largest-magnitude entry is real and nonnegative. The
/// first entry wins ties. Zero vectors are returned unchanged.
CVector normalize_phase(const CVector& v);

/// Full spectral decomposition of a Hermitian matrix.
///
/// Throws kNotHermitian on a symmetry violation and kNoConvergence if the
/// QR iteration does not converge.
EigResult herm_eig(const CMatrix& A);

struct GeneralizedEigPair {
  double lambda_max = 0.0;
  CVector vector;  // unit Euclidean norm
};

/// Leading eigenpair of B^{-1}A for Hermitian A and Hermitian positive
/// definite B, computed through a Cholesky factor of B.
///
/// A B whose smallest eigenvalue lies in (0, 1e-12] is regularized with
/// +1e-10 I; anything at or below zero throws kNotPositiveDefinite.
GeneralizedEigPair generalized_max_eigvec(const CMatrix& A, const CMatrix& B);

/// Frobenius-nearest positive semidefinite matrix (negative eigenvalues
/// clamped to zero).
CMatrix psd_project(const CMatrix& A);

/// [[Re A, -Im A], [Im A, Re A]].
RMatrix real_embed(const CMatrix& A);

/// w^H A w / w^H B w.
double rayleigh_quotient(const CMatrix& A, const CMatrix& B, const CVector& w);

/// Re tr(A^H B), the real Frobenius inner product.
inline double frob_inner(const CMatrix& A, const CMatrix& B) {
  return (A.conjugate().cwiseProduct(B)).sum().real();
}

}  // namespace irssop
