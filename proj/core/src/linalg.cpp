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
#include "irssop/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "irssop/errors.hpp"

namespace irssop {
namespace {

// Smallest eigenvalue of B below which generalized_max_eigvec regularizes.
constexpr double kPdFloor = 1e-12;
constexpr double kPdRegularization = 1e-10;

void require_hermitian(const CMatrix& A, const char* what) {
  if (A.rows() != A.cols()) {
    throw Error(ErrorCode::kNotHermitian,
                fmt::format("{}: matrix is {}x{}, not square", what, A.rows(), A.cols()));
  }
  if (!is_hermitian(A)) {
    throw Error(ErrorCode::kNotHermitian, fmt::format("{}: matrix is not Hermitian", what));
  }
}

CMatrix hermitian_part(const CMatrix& A) { return 0.5 * (A + A.adjoint()); }

}  // namespace

bool is_hermitian(const CMatrix& A, double tol) {
  if (A.rows() != A.cols()) return false;
  if (A.size() == 0) return true;
  // Absolute below unit scale, relative above it, so products like X X^H of
  // large entries are not rejected for rounding.
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  return (A - A.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

CVector normalize_phase(const CVector& v) {
  if (v.size() == 0) return v;
  Eigen::Index best = 0;
  double best_abs = std::abs(v(0));
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  if (best_abs == 0.0) return v;
  const Complex rotation = std::conj(v(best)) / best_abs;
  CVector out = v * rotation;
  out(best) = Complex(best_abs, 0.0);
  return out;
}

EigResult herm_eig(const CMatrix& A) {
  require_hermitian(A, "herm_eig");
  EigResult result;
  if (A.size() == 0) return result;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(A));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kNoConvergence, "herm_eig: eigensolver did not converge");
  }
  result.eigenvalues = solver.eigenvalues();
  result.eigenvectors = solver.eigenvectors();
  for (Eigen::Index j = 0; j < A.cols(); ++j) {
    result.eigenvectors.col(j) = normalize_phase(result.eigenvectors.col(j));
  }
  return result;
}

GeneralizedEigPair generalized_max_eigvec(const CMatrix& A, const CMatrix& B) {
  require_hermitian(A, "generalized_max_eigvec (A)");
  require_hermitian(B, "generalized_max_eigvec (B)");
  if (A.rows() != B.rows() || A.rows() == 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("generalized_max_eigvec: A is {0}x{0}, B is {1}x{1}", A.rows(),
                            B.rows()));
  }
  CMatrix b = hermitian_part(B);
  const double min_eig = herm_eig(b).eigenvalues(0);
  if (min_eig <= 0.0) {
    throw Error(ErrorCode::kNotPositiveDefinite,
                fmt::format("generalized_max_eigvec: smallest eigenvalue of B is {}", min_eig));
  }
  if (min_eig <= kPdFloor) {
    b += kPdRegularization * CMatrix::Identity(b.rows(), b.cols());
  }
  Eigen::LLT<CMatrix> llt(b);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kNotPositiveDefinite, "generalized_max_eigvec: Cholesky failed");
  }
  // C = L^{-1} A L^{-H}
  CMatrix C = llt.matrixL().solve(hermitian_part(A));
  C = llt.matrixL().solve(CMatrix(C.adjoint()));
  const EigResult eig = herm_eig(hermitian_part(C));
  const Eigen::Index top = eig.eigenvalues.size() - 1;
  CVector w = llt.matrixU().solve(CVector(eig.eigenvectors.col(top)));
  w.normalize();
  return {eig.eigenvalues(top), normalize_phase(w)};
}

CMatrix psd_project(const CMatrix& A) {
  const EigResult eig = herm_eig(A);
  if (A.size() == 0) return A;
  const RVector clamped = eig.eigenvalues.cwiseMax(0.0);
  const CMatrix& V = eig.eigenvectors;
  return hermitian_part(V * clamped.asDiagonal() * V.adjoint());
}

RMatrix real_embed(const CMatrix& A) {
  require_hermitian(A, "real_embed");
  const Eigen::Index n = A.rows();
  RMatrix out(2 * n, 2 * n);
  const RMatrix re = A.real();
  const RMatrix im = A.imag();
  out.topLeftCorner(n, n) = re;
  out.topRightCorner(n, n) = -im;
  out.bottomLeftCorner(n, n) = im;
  out.bottomRightCorner(n, n) = re;
  return out;
}

double rayleigh_quotient(const CMatrix& A, const CMatrix& B, const CVector& w) {
  const double num = w.dot(A * w).real();
  const double den = w.dot(B * w).real();
  return num / den;
}

}  // namespace irssop
