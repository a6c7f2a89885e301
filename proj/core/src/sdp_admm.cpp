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
#include <algorithm>
#include <cmath>

#include "sdp_internal.hpp"

namespace irssop::detail {
namespace {

// Point of the product space Herm(n) x R x R^K.
struct Point {
  CMatrix Q;
  double u = 0.0;
  RVector s;

  double squared_norm() const { return Q.squaredNorm() + u * u + s.squaredNorm(); }
  bool finite() const { return Q.allFinite() && std::isfinite(u) && s.allFinite(); }
};

double distance(const Point& x, const Point& y) {
  return std::sqrt((x.Q - y.Q).squaredNorm() + (x.u - y.u) * (x.u - y.u) +
                   (x.s - y.s).squaredNorm());
}

// Euclidean projection onto {diag(Q) = 1, <C_k, Q> - u - s_k = -a_k}.
class AffineProjector {
 public:
  explicit AffineProjector(const ScaledInstance& d) : d_(d) {
    const int n = d.dim;
    const int K = d.count;
    RMatrix gram = RMatrix::Zero(n + K, n + K);
    gram.topLeftCorner(n, n).setIdentity();
    for (int k = 0; k < K; ++k) {
      for (int m = 0; m < n; ++m) gram(m, n + k) = gram(n + k, m) = d.C[k](m, m).real();
      for (int j = 0; j <= k; ++j) {
        const double g = frob_inner(d.C[k], d.C[j]) + 1.0 + (j == k ? 1.0 : 0.0);
        gram(n + k, n + j) = gram(n + j, n + k) = g;
      }
    }
    factor_.compute(gram);
  }

  void project(const Point& v, Point& out) const {
    const int n = d_.dim;
    const int K = d_.count;
    RVector r(n + K);
    for (int m = 0; m < n; ++m) r(m) = v.Q(m, m).real() - 1.0;
    for (int k = 0; k < K; ++k) r(n + k) = frob_inner(d_.C[k], v.Q) - v.u - v.s(k) + d_.a(k);
    const RVector mu = factor_.solve(r);
    out.Q = v.Q;
    for (int m = 0; m < n; ++m) out.Q(m, m) -= mu(m);
    out.u = v.u;
    out.s = v.s;
    for (int k = 0; k < K; ++k) {
      out.Q.noalias() -= mu(n + k) * d_.C[k];
      out.u += mu(n + k);
      out.s(k) += mu(n + k);
    }
  }

 private:
  const ScaledInstance& d_;
  Eigen::LLT<RMatrix> factor_;
};

CMatrix project_psd(const CMatrix& A, Eigen::SelfAdjointEigenSolver<CMatrix>& solver) {
  solver.compute(A);
  const RVector& lambda = solver.eigenvalues();
  Eigen::Index first = 0;
  while (first < lambda.size() && lambda(first) <= 0.0) ++first;
  const Eigen::Index count = lambda.size() - first;
  if (count == 0) return CMatrix::Zero(A.rows(), A.cols());
  const CMatrix Vp = solver.eigenvectors().rightCols(count);
  CMatrix out = Vp * lambda.tail(count).asDiagonal() * Vp.adjoint();
  return 0.5 * (out + out.adjoint());
}

}  // namespace

SdpSolution solve_operator_splitting(const SdpInstance& inst, const SdpOptions& options) {
  const ScaledInstance d = scale_instance(inst);
  const int n = d.dim;
  const int K = d.count;
  const AffineProjector affine(d);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(n);

  auto consistent_point = [&](const CMatrix& Q) {
    Point p;
    p.Q = Q;
    p.s.resize(K);
    for (int k = 0; k < K; ++k) p.s(k) = d.a(k) + frob_inner(d.C[k], Q);
    p.u = p.s.minCoeff();
    p.s.array() -= p.u;
    return p;
  };

  Point z;
  Point y;
  double penalty = options.initial_penalty;
  const auto& warm = options.warm_start;
  if (warm && warm->Q.rows() == n && warm->Q.cols() == n && warm->dual_Q.rows() == n &&
      warm->dual_s.size() == K) {
    z = consistent_point(warm->Q);
    y.Q = warm->dual_Q;
    y.s = warm->dual_s;
    y.u = warm->dual_u;
    penalty = warm->penalty;
  } else {
    z = consistent_point(CMatrix::Identity(n, n));
    y.Q = CMatrix::Zero(n, n);
    y.s = RVector::Zero(K);
  }

  const double alpha = options.relaxation;
  const double sqrt_dim = std::sqrt(static_cast<double>(n) * n + 1.0 + K);
  SdpSolution sol;
  sol.status = SdpStatus::kMaxIterations;
  Point v, x, xr, z_prev;
  for (int iter = 1; iter <= options.max_iter; ++iter) {
    // x-step: argmin over the affine set of -u + penalty/2 |x - (z - y)|^2.
    v.Q = z.Q - y.Q;
    v.u = z.u - y.u + 1.0 / penalty;
    v.s = z.s - y.s;
    affine.project(v, x);

    xr.Q = alpha * x.Q + (1.0 - alpha) * z.Q;
    xr.u = alpha * x.u + (1.0 - alpha) * z.u;
    xr.s = alpha * x.s + (1.0 - alpha) * z.s;

    z_prev = z;
    z.Q = project_psd(xr.Q + y.Q, eig);
    z.u = xr.u + y.u;
    z.s = (xr.s + y.s).cwiseMax(0.0);

    y.Q += xr.Q - z.Q;
    y.u += xr.u - z.u;
    y.s += xr.s - z.s;

    const double r_primal = distance(x, z);
    const double r_dual = penalty * distance(z, z_prev);
    sol.primal_history.push_back(r_primal);
    sol.iterations = iter;
    sol.primal_residual = r_primal;
    sol.dual_residual = r_dual;

    if (!z.finite() || !y.finite()) {
      sol.status = SdpStatus::kInfeasible;
      break;
    }
    const double eps_primal =
        options.tol * (sqrt_dim + std::sqrt(std::max(x.squared_norm(), z.squared_norm())));
    const double eps_dual = options.tol * (sqrt_dim + penalty * std::sqrt(y.squared_norm()));
    if (r_primal <= eps_primal && r_dual <= eps_dual) {
      sol.status = SdpStatus::kOptimal;
      break;
    }
    if (iter % options.balance_interval == 0) {
      const double p = r_primal / eps_primal;
      const double q = r_dual / eps_dual;
      double factor = 1.0;
      if (p > options.balance_ratio * q) factor = 2.0;
      if (q > options.balance_ratio * p) factor = 0.5;
      penalty *= factor;
      y.Q /= factor;
      y.u /= factor;
      y.s /= factor;
    }
  }

  sol.Q = sol.status == SdpStatus::kInfeasible ? CMatrix::Identity(n, n) : polish(z.Q);
  sol.u = epigraph_value(inst, sol.Q);
  sol.state.Q = z.Q;
  sol.state.dual_Q = y.Q;
  sol.state.dual_s = y.s;
  sol.state.dual_u = y.u;
  sol.state.penalty = penalty;
  return sol;
}

}  // namespace irssop::detail
