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

#include "rpca/baselines.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "rpca/kernels.hpp"

namespace rpca {

Matrix SoftThreshold(const Matrix& a, double tau) {
  if (!(tau >= 0)) throw ArgumentError("threshold must be nonnegative");
  Matrix out;
  kernels::SoftThreshold(a, tau, &out);
  return out;
}

Matrix SvThreshold(const Matrix& a, double tau, double* nuclear_norm) {
  if (!(tau >= 0)) throw ArgumentError("threshold must be nonnegative");
  Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector shrunk =
      (svd.singularValues().array() - tau).max(0.0).matrix();
  Index keep = 0;
  while (keep < shrunk.size() && shrunk(keep) > 0) ++keep;
  if (nuclear_norm) *nuclear_norm = shrunk.head(keep).sum();
  if (keep == 0) return Matrix::Zero(a.rows(), a.cols());
  return svd.matrixU().leftCols(keep) * shrunk.head(keep).asDiagonal() *
         svd.matrixV().leftCols(keep).transpose();
}

double DefaultPcpLambda(Index m, Index n) {
  return 1.0 / std::sqrt(static_cast<double>(std::max(m, n)));
}

PcpResult SolvePcpIalm(const Matrix& m, const PcpOptions& options,
                       const Matrix* reference) {
  const double lambda = options.lambda > 0
                            ? options.lambda
                            : DefaultPcpLambda(m.rows(), m.cols());
  if (!(options.tol > 0)) throw ArgumentError("tol must be positive");
  if (options.max_iter < 1) throw ArgumentError("max_iter must be >= 1");

  PcpResult out;
  out.l_hat = Matrix::Zero(m.rows(), m.cols());
  out.s_hat = Matrix::Zero(m.rows(), m.cols());
  const double m_norm = m.norm();
  if (m_norm == 0) {
    out.converged = true;
    return out;
  }
  Eigen::BDCSVD<Matrix> top(m);
  const double spectral = top.singularValues()(0);
  Matrix dual = m / std::max(spectral, MaxAbs(m) / lambda);
  double mu = 1.25 / spectral;
  const double mu_cap = options.mu_cap_factor * mu;
  const double ref_norm = reference ? reference->norm() : 0.0;

  Matrix z;
  for (int it = 1; it <= options.max_iter; ++it) {
    out.iterations = it;
    kernels::SoftThreshold(m - out.l_hat + dual / mu, lambda / mu,
                           &out.s_hat);
    double nuclear = 0.0;
    out.threshold_history.push_back(1.0 / mu);
    out.l_hat = SvThreshold(m - out.s_hat + dual / mu, 1.0 / mu, &nuclear);
    out.objective_history.push_back(nuclear +
                                    lambda * kernels::L1Norm(out.s_hat));
    z = m - out.l_hat - out.s_hat;
    dual += mu * z;
    mu = std::min(mu * options.mu_growth, mu_cap);
    out.primal_residual = z.norm() / m_norm;
    out.residual_history.push_back(out.primal_residual);
    if (reference) {
      out.rel_err_history.push_back((out.l_hat - *reference).norm() /
                                    ref_norm);
    }
    if (out.primal_residual <= options.tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace rpca
