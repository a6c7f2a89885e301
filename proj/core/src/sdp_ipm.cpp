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
#include <limits>

#include "sdp_internal.hpp"

namespace irssop::detail {
namespace {

constexpr int kInteriorPointCap = 200;
constexpr double kStepFraction = 0.95;
constexpr double kBlowUp = 1e12;

CMatrix herm(const CMatrix& A) { return 0.5 * (A + A.adjoint()); }

// Largest step in (0, 1] keeping X + t dX positive definite, shortened by
// kStepFraction when the boundary is hit first.
double cone_step(const CMatrix& X, const CMatrix& dX) {
  Eigen::LLT<CMatrix> llt(X);
  if (llt.info() != Eigen::Success) return 0.0;
  const CMatrix Linv = llt.matrixL().solve(CMatrix::Identity(X.rows(), X.cols()));
  const CMatrix S = herm(Linv * dX * Linv.adjoint());
  const double lmin = Eigen::SelfAdjointEigenSolver<CMatrix>(S, Eigen::EigenvaluesOnly)
                          .eigenvalues()
                          .minCoeff();
  if (lmin >= 0.0) return 1.0;
  return std::min(1.0, -kStepFraction / lmin);
}

double orthant_step(const RVector& x, const RVector& dx) {
  double t = 1.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (dx(i) < 0.0) t = std::min(t, -kStepFraction * x(i) / dx(i));
  }
  return t;
}

// Variables: X = Q and x = (s_1..s_K, w) with u = u_lb + w. Rows of the
// equality system are diag(X) = 1 followed by <C_k, X> - s_k - w = u_lb - a_k.
class InteriorPoint {
 public:
  explicit InteriorPoint(const ScaledInstance& d) : d_(d), n_(d.dim), K_(d.count) {
    u_lb_ = std::numeric_limits<double>::infinity();
    for (int k = 0; k < K_; ++k) u_lb_ = std::min(u_lb_, d.a(k) + d.C[k].trace().real());
    u_lb_ -= 1.0;
    b_.resize(n_ + K_);
    b_.head(n_).setOnes();
    for (int k = 0; k < K_; ++k) b_(n_ + k) = u_lb_ - d.a(k);
    c_ = RVector::Zero(K_ + 1);
    c_(K_) = -1.0;
  }

  SdpSolution run(int max_iter, double tol) {
    // X = I with w = 1/2 is primal feasible; the dual starts infeasible.
    X_ = CMatrix::Identity(n_, n_);
    x_.resize(K_ + 1);
    x_(K_) = 0.5;
    for (int k = 0; k < K_; ++k) {
      x_(k) = d_.a(k) + d_.C[k].trace().real() - u_lb_ - x_(K_);
    }
    Z_ = CMatrix::Identity(n_, n_);
    z_ = RVector::Ones(K_ + 1);
    y_ = RVector::Zero(n_ + K_);

    SdpSolution sol;
    sol.status = SdpStatus::kMaxIterations;
    const double b_norm = 1.0 + b_.norm();
    const double c_norm = 1.0 + c_.norm();
    const double cone_dim = static_cast<double>(n_ + K_ + 1);
    for (int iter = 1; iter <= max_iter; ++iter) {
      const RVector Rp = b_ - apply_A(X_) - apply_Alp(x_);
      const CMatrix Rd = -Z_ - apply_At(y_);
      const RVector rd = c_ - z_ - apply_Alp_t(y_);
      const double pinf = Rp.norm() / b_norm;
      const double dinf = std::sqrt(Rd.squaredNorm() + rd.squaredNorm()) / c_norm;
      const double pobj = c_.dot(x_);
      const double dobj = b_.dot(y_);
      const double gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
      sol.primal_residual = pinf;
      sol.dual_residual = dinf;
      sol.primal_history.push_back(pinf);
      sol.iterations = iter;
      if (pinf <= tol && dinf <= tol && gap <= tol) {
        sol.status = SdpStatus::kOptimal;
        break;
      }
      if (!X_.allFinite() || !Z_.allFinite() || !y_.allFinite() ||
          X_.norm() > kBlowUp || y_.norm() > kBlowUp) {
        sol.status = SdpStatus::kInfeasible;
        break;
      }

      Eigen::LLT<CMatrix> zfac(Z_);
      if (zfac.info() != Eigen::Success) break;
      Zi_ = herm(zfac.solve(CMatrix::Identity(n_, n_)));
      if (!factor_schur()) break;

      const double mu = ((X_ * Z_).trace().real() + x_.dot(z_)) / cone_dim;
      const CMatrix XZ = X_ * Z_;

      // Predictor.
      Direction aff = direction(Rp, Rd, rd, -XZ, -x_.cwiseProduct(z_));
      const double ap = std::min(cone_step(X_, aff.dX), orthant_step(x_, aff.dx));
      const double ad = std::min(cone_step(Z_, aff.dZ), orthant_step(z_, aff.dz));
      const double mu_aff = ((X_ + ap * aff.dX) * (Z_ + ad * aff.dZ)).trace().real() / cone_dim +
                            (x_ + ap * aff.dx).dot(z_ + ad * aff.dz) / cone_dim;
      const double sigma = std::pow(std::clamp(mu_aff / mu, 0.0, 1.0), 3);

      // Corrector.
      const CMatrix Rc =
          sigma * mu * CMatrix::Identity(n_, n_) - XZ - aff.dX * aff.dZ;
      const RVector rc = RVector::Constant(K_ + 1, sigma * mu) - x_.cwiseProduct(z_) -
                         aff.dx.cwiseProduct(aff.dz);
      Direction dir = direction(Rp, Rd, rd, Rc, rc);
      const double tp = std::min(cone_step(X_, dir.dX), orthant_step(x_, dir.dx));
      const double td = std::min(cone_step(Z_, dir.dZ), orthant_step(z_, dir.dz));
      if (tp <= 0.0 && td <= 0.0) break;

      X_ = herm(X_ + tp * dir.dX);
      x_ += tp * dir.dx;
      Z_ = herm(Z_ + td * dir.dZ);
      z_ += td * dir.dz;
      y_ += td * dir.dy;
    }
    sol.Q = sol.status == SdpStatus::kInfeasible ? CMatrix::Identity(n_, n_) : polish(X_);
    return sol;
  }

 private:
  struct Direction {
    CMatrix dX, dZ;
    RVector dx, dz, dy;
  };

  RVector apply_A(const CMatrix& X) const {
    RVector out(n_ + K_);
    for (int i = 0; i < n_; ++i) out(i) = X(i, i).real();
    for (int k = 0; k < K_; ++k) out(n_ + k) = frob_inner(d_.C[k], X);
    return out;
  }

  RVector apply_Alp(const RVector& x) const {
    RVector out = RVector::Zero(n_ + K_);
    for (int k = 0; k < K_; ++k) out(n_ + k) = -x(k) - x(K_);
    return out;
  }

  CMatrix apply_At(const RVector& y) const {
    CMatrix out = CMatrix::Zero(n_, n_);
    for (int i = 0; i < n_; ++i) out(i, i) = y(i);
    for (int k = 0; k < K_; ++k) out.noalias() += y(n_ + k) * d_.C[k];
    return out;
  }

  RVector apply_Alp_t(const RVector& y) const {
    RVector out(K_ + 1);
    for (int k = 0; k < K_; ++k) out(k) = -y(n_ + k);
    out(K_) = -y.tail(K_).sum();
    return out;
  }

  // Schur complement M_ij = <A_i, X A_j Z^-1> plus the orthant block.
  bool factor_schur() {
    const int m = n_ + K_;
    RMatrix M(m, m);
    M.topLeftCorner(n_, n_) = X_.cwiseProduct(Zi_.transpose()).real();
    std::vector<CMatrix> P(K_);
    for (int k = 0; k < K_; ++k) {
      P[k] = X_ * d_.C[k] * Zi_;
      for (int i = 0; i < n_; ++i) M(i, n_ + k) = M(n_ + k, i) = P[k](i, i).real();
    }
    const RVector D = x_.cwiseQuotient(z_);
    for (int j = 0; j < K_; ++j) {
      for (int k = 0; k <= j; ++k) {
        double v = d_.C[j].cwiseProduct(P[k].transpose()).sum().real() + D(K_);
        if (j == k) v += D(k);
        M(n_ + j, n_ + k) = M(n_ + k, n_ + j) = v;
      }
    }
    schur_.compute(M);
    return schur_.info() == Eigen::Success;
  }

  Direction direction(const RVector& Rp, const CMatrix& Rd, const RVector& rd, const CMatrix& Rc,
                      const RVector& rc) const {
    Direction out;
    const CMatrix T = (Rc - X_ * Rd) * Zi_;
    const RVector lp = rc.cwiseQuotient(z_) - x_.cwiseQuotient(z_).cwiseProduct(rd);
    const RVector rhs = Rp - apply_A(T) - apply_Alp(lp);
    out.dy = schur_.solve(rhs);
    out.dZ = Rd - apply_At(out.dy);
    out.dX = herm((Rc - X_ * out.dZ) * Zi_);
    out.dz = rd - apply_Alp_t(out.dy);
    out.dx = (rc - x_.cwiseProduct(out.dz)).cwiseQuotient(z_);
    return out;
  }

  const ScaledInstance& d_;
  int n_;
  int K_;
  double u_lb_;
  RVector b_, c_;
  CMatrix X_, Z_, Zi_;
  RVector x_, z_, y_;
  Eigen::LDLT<RMatrix> schur_;
};

}  // namespace

SdpSolution solve_interior_point(const SdpInstance& inst, const SdpOptions& options) {
  const ScaledInstance d = scale_instance(inst);
  InteriorPoint ipm(d);
  SdpSolution sol = ipm.run(std::min(options.max_iter, kInteriorPointCap), options.tol);
  sol.u = epigraph_value(inst, sol.Q);
  sol.state.Q = sol.Q;
  return sol;
}

}  // namespace irssop::detail
