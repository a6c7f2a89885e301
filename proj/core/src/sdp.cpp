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
#include "irssop/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "irssop/errors.hpp"
#include "sdp_internal.hpp"

namespace irssop {
namespace detail {

ScaledInstance scale_instance(const SdpInstance& inst) {
  ScaledInstance out;
  out.dim = inst.dim;
  out.count = inst.num_inequalities();
  double scale = 0.0;
  for (int k = 0; k < out.count; ++k) {
    scale = std::max({scale, inst.C[k].norm(), std::abs(inst.a[k])});
  }
  if (!(scale > 0.0)) scale = 1.0;
  out.scale = scale;
  out.a.resize(out.count);
  for (int k = 0; k < out.count; ++k) {
    out.C.push_back(0.5 * (inst.C[k] + inst.C[k].adjoint()) / scale);
    out.a(k) = inst.a[k] / scale;
  }
  return out;
}

CMatrix polish(const CMatrix& Q) {
  CMatrix out = psd_project(0.5 * (Q + Q.adjoint()));
  const Eigen::Index n = out.rows();
  RVector d(n);
  for (Eigen::Index m = 0; m < n; ++m) {
    d(m) = out(m, m).real();
    if (d(m) <= 1e-12) {
      out.row(m).setZero();
      out.col(m).setZero();
      out(m, m) = 1.0;
      d(m) = 1.0;
    }
  }
  const RVector inv = d.cwiseSqrt().cwiseInverse();
  out = inv.asDiagonal() * out * inv.asDiagonal();
  out = 0.5 * (out + out.adjoint());
  for (Eigen::Index m = 0; m < n; ++m) out(m, m) = 1.0;
  return out;
}

double epigraph_value(const SdpInstance& inst, const CMatrix& Q) {
  double u = std::numeric_limits<double>::infinity();
  for (int k = 0; k < inst.num_inequalities(); ++k) {
    u = std::min(u, inst.a[k] + frob_inner(inst.C[k], Q));
  }
  return u;
}

}  // namespace detail

const char* to_string(SdpStatus status) {
  switch (status) {
    case SdpStatus::kOptimal: return "optimal";
    case SdpStatus::kMaxIterations: return "max_iterations";
    case SdpStatus::kInfeasible: return "infeasible";
  }
  return "unknown";
}

void SdpInstance::validate() const {
  if (dim < 1) throw Error(ErrorCode::kDimensionMismatch, fmt::format("dim {} < 1", dim));
  if (C.empty() || C.size() != a.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("need >= 1 inequality with matching a: {} matrices, {} offsets",
                            C.size(), a.size()));
  }
  for (std::size_t k = 0; k < C.size(); ++k) {
    if (C[k].rows() != dim || C[k].cols() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  fmt::format("C_{} is {}x{}, expected {}x{}", k, C[k].rows(), C[k].cols(), dim,
                              dim));
    }
    if (!C[k].allFinite() || !std::isfinite(a[k])) {
      throw Error(ErrorCode::kDomainError, fmt::format("inequality {} has non-finite data", k));
    }
    if (!is_hermitian(C[k])) {
      throw Error(ErrorCode::kNotHermitian, fmt::format("C_{} is not Hermitian", k));
    }
  }
}

SdpSolution solve(const SdpInstance& inst, double tol, int max_iter) {
  SdpOptions options;
  options.tol = tol;
  options.max_iter = max_iter;
  return solve(inst, options);
}

SdpSolution solve(const SdpInstance& inst, const SdpOptions& options) {
  inst.validate();
  if (!(options.tol > 0.0) || options.max_iter < 1) {
    throw Error(ErrorCode::kDomainError,
                fmt::format("solver needs tol > 0 and max_iter >= 1 (got {}, {})", options.tol,
                            options.max_iter));
  }
  return options.method == SdpMethod::kInteriorPoint
             ? detail::solve_interior_point(inst, options)
             : detail::solve_operator_splitting(inst, options);
}

void dump_instance(const SdpInstance& inst, std::ostream& out) {
  out << "irssop-sdp 1\n";
  out << "dim " << inst.dim << "\n";
  out << "inequalities " << inst.C.size() << "\n";
  out << "a";
  for (double v : inst.a) out << fmt::format(" {:.17g}", v);
  out << "\n";
  for (std::size_t k = 0; k < inst.C.size(); ++k) {
    out << "C " << k << "\n";
    for (Eigen::Index i = 0; i < inst.C[k].rows(); ++i) {
      for (Eigen::Index j = 0; j < inst.C[k].cols(); ++j) {
        if (j > 0) out << "  ";
        out << fmt::format("{:.17g} {:.17g}", inst.C[k](i, j).real(), inst.C[k](i, j).imag());
      }
      out << "\n";
    }
  }
}

std::string dump_instance(const SdpInstance& inst) {
  std::ostringstream out;
  dump_instance(inst, out);
  return out.str();
}

SdpInstance load_instance(std::istream& in) {
  auto fail = [](const std::string& msg) {
    throw Error(ErrorCode::kParse, "sdp instance: " + msg);
  };
  auto expect = [&](const std::string& word) {
    std::string token;
    if (!(in >> token) || token != word) fail(fmt::format("expected '{}', got '{}'", word, token));
  };
  expect("irssop-sdp");
  int version = 0;
  if (!(in >> version) || version != 1) fail("unsupported version");
  SdpInstance inst;
  std::size_t count = 0;
  expect("dim");
  if (!(in >> inst.dim) || inst.dim < 1) fail("bad dimension");
  expect("inequalities");
  if (!(in >> count)) fail("bad inequality count");
  expect("a");
  inst.a.resize(count);
  for (auto& v : inst.a) {
    if (!(in >> v)) fail("truncated offsets");
  }
  for (std::size_t k = 0; k < count; ++k) {
    expect("C");
    std::size_t index = 0;
    if (!(in >> index) || index != k) fail(fmt::format("expected block {}", k));
    CMatrix M(inst.dim, inst.dim);
    for (int i = 0; i < inst.dim; ++i) {
      for (int j = 0; j < inst.dim; ++j) {
        double re = 0.0;
        double im = 0.0;
        if (!(in >> re >> im)) fail(fmt::format("truncated block {}", k));
        M(i, j) = Complex(re, im);
      }
    }
    inst.C.push_back(std::move(M));
  }
  return inst;
}

SdpInstance load_instance_from_string(const std::string& text) {
  std::istringstream in(text);
  return load_instance(in);
}

}  // namespace irssop
