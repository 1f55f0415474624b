// Copyright 2026 The rpca-landscape Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rpca/certificate.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "rpca/kernels.hpp"

namespace rpca {
namespace {

constexpr double kOrthonormalTolerance = 1e-10;

Matrix TperpUnchecked(const Matrix& w, const Matrix& u, const Matrix& v) {
  Matrix out = w - u * (u.transpose() * w);
  out -= (out * v) * v.transpose();
  return out;
}

Matrix NegSign(const Matrix& s, const Mask& omega) {
  Matrix out = Matrix::Zero(s.rows(), s.cols());
  for (Index i = 0; i < s.rows(); ++i) {
    for (Index j = 0; j < s.cols(); ++j) {
      if (omega(i, j)) out(i, j) = s(i, j) > 0 ? -1.0 : (s(i, j) < 0 ? 1 : 0);
    }
  }
  return out;
}

double SubspaceResidual(const Matrix& lambda, const Matrix& u,
                        const Matrix& v) {
  return std::max(MaxAbs(lambda * v), MaxAbs(lambda.transpose() * u));
}

}  // namespace

void CheckTangentBases(const Matrix& u, const Matrix& v, Index m, Index n) {
  if (u.rows() != m || v.rows() != n || u.cols() != v.cols()) {
    throw ArgumentError("tangent bases do not match an " + std::to_string(m) +
                        "x" + std::to_string(n) + " matrix");
  }
  const Index r = u.cols();
  const double du = MaxAbs(u.transpose() * u - Matrix::Identity(r, r));
  const double dv = MaxAbs(v.transpose() * v - Matrix::Identity(r, r));
  if (du > kOrthonormalTolerance || dv > kOrthonormalTolerance) {
    std::ostringstream msg;
    msg << "tangent bases are not orthonormal (deviation " << std::max(du, dv)
        << ")";
    throw PreconditionError(msg.str());
  }
}

Matrix ProjectT(const Matrix& w, const Matrix& u, const Matrix& v) {
  CheckTangentBases(u, v, w.rows(), w.cols());
  const Matrix utw = u.transpose() * w;
  const Matrix wv = w * v;
  return u * utw + wv * v.transpose() - u * ((utw * v) * v.transpose());
}

Matrix ProjectTperp(const Matrix& w, const Matrix& u, const Matrix& v) {
  CheckTangentBases(u, v, w.rows(), w.cols());
  return TperpUnchecked(w, u, v);
}

void MeasureResiduals(const Matrix& u, const Matrix& v, const Matrix& s,
                      const Mask& omega, Certificate* cert) {
  const Matrix& lambda = cert->lambda;
  cert->residual_subspace = SubspaceResidual(lambda, u, v);
  double box = 0.0, sign = 0.0;
  const double bound = 1.0 - cert->eps;
  for (Index i = 0; i < lambda.rows(); ++i) {
    for (Index j = 0; j < lambda.cols(); ++j) {
      if (omega(i, j)) {
        const double sg = s(i, j) > 0 ? 1.0 : (s(i, j) < 0 ? -1.0 : 0.0);
        sign = std::max(sign, std::abs(lambda(i, j) + sg));
      } else {
        box = std::max(box, std::abs(lambda(i, j)) - bound);
      }
    }
  }
  cert->residual_box = box;
  cert->residual_sign = sign;
  cert->feasible = cert->residual_subspace <= cert->tol &&
                   cert->residual_box <= cert->tol &&
                   cert->residual_sign <= cert->tol;
}

Certificate FindCertificate(const Matrix& u, const Matrix& v, const Matrix& s,
                            const Mask& omega,
                            const CertificateOptions& options) {
  if (!(options.eps > 0 && options.eps < 1)) {
    throw ArgumentError("eps must lie in (0, 1)");
  }
  if (!(options.tol > 0)) throw ArgumentError("tol must be positive");
  if (options.max_iter < 1) throw ArgumentError("max_iter must be >= 1");
  if (s.rows() != omega.rows() || s.cols() != omega.cols()) {
    throw ArgumentError("S and Omega shapes differ");
  }
  CheckTangentBases(u, v, s.rows(), s.cols());
  const auto start = std::chrono::steady_clock::now();

  const Matrix fixed = NegSign(s, omega);
  const double bound = 1.0 - options.eps;
  Certificate cert;
  cert.eps = options.eps;
  cert.tol = options.tol;
  cert.lambda = fixed;  // projection of 0 onto the box set

  Matrix a;
  Matrix p_corr = Matrix::Zero(s.rows(), s.cols());
  Matrix q_corr = Matrix::Zero(s.rows(), s.cols());
  for (int it = 1; it <= options.max_iter; ++it) {
    cert.iterations = it;
    if (options.dykstra) {
      const Matrix shifted = cert.lambda + p_corr;
      a = TperpUnchecked(shifted, u, v);
      p_corr = shifted - a;
      Matrix b = a + q_corr;
      kernels::ProjectBox(omega, fixed, bound, &b);
      q_corr = a + q_corr - b;
      if (options.record_gaps) {
        cert.gap_history.push_back((cert.lambda - a).norm());
        cert.gap_history.push_back((a - b).norm());
      }
      cert.lambda = std::move(b);
    } else {
      a = TperpUnchecked(cert.lambda, u, v);
      Matrix b = a;
      kernels::ProjectBox(omega, fixed, bound, &b);
      if (options.record_gaps) {
        cert.gap_history.push_back((cert.lambda - a).norm());
        cert.gap_history.push_back((a - b).norm());
      }
      cert.lambda = std::move(b);
    }
    if (SubspaceResidual(cert.lambda, u, v) <= options.tol) break;
  }
  MeasureResiduals(u, v, s, omega, &cert);
  cert.wall_seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return cert;
}

EpsSweep SweepEps(const Matrix& u, const Matrix& v, const Matrix& s,
                  const Mask& omega, const std::vector<double>& eps_values,
                  CertificateOptions options) {
  EpsSweep out;
  for (double eps : eps_values) {
    options.eps = eps;
    out.runs.push_back(FindCertificate(u, v, s, omega, options));
    if (out.runs.back().feasible) out.best_eps = std::max(out.best_eps, eps);
  }
  return out;
}

bool VerifyCriticality(const FactorPair& pair, const Certificate& cert,
                       double tol, const Matrix* low_rank) {
  if (!cert.feasible) {
    throw PreconditionError("certificate is not feasible");
  }
  if (pair.x.rows() != cert.lambda.rows() ||
      pair.y.rows() != cert.lambda.cols() ||
      pair.x.cols() != pair.y.cols()) {
    throw ArgumentError("factor shapes do not match the certificate");
  }
  if (low_rank) {
    const double gap = (pair.x * pair.y.transpose() - *low_rank).norm();
    if (gap > tol * low_rank->norm()) {
      throw PreconditionError("factors do not reproduce the low-rank matrix");
    }
  }
  const double gx = MaxAbs(cert.lambda * pair.y);
  const double gy = MaxAbs(cert.lambda.transpose() * pair.x);
  return gx <= tol * pair.y.norm() && gy <= tol * pair.x.norm();
}

}  // namespace rpca
