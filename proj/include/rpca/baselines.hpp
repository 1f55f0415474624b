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

// Principal component pursuit
//
//   min ||L||_* + lambda ||S||_1  s.t.  L + S = M
//
// solved by the inexact augmented Lagrangian method.

#ifndef RPCA_BASELINES_HPP_
#define RPCA_BASELINES_HPP_

#include <vector>

#include "rpca/types.hpp"

namespace rpca {

// sign(a) max(|a| - tau, 0) entrywise. Throws ArgumentError for tau < 0.
Matrix SoftThreshold(const Matrix& a, double tau);

// Shrinks the singular values of `a` by tau. Optionally reports the nuclear
// norm of the result.
Matrix SvThreshold(const Matrix& a, double tau,
                   double* nuclear_norm = nullptr);

// 1 / sqrt(max(m, n)).
double DefaultPcpLambda(Index m, Index n);

struct PcpOptions {
  double lambda = 0.0;  // <= 0 selects DefaultPcpLambda
  double tol = 1e-7;
  int max_iter = 500;
  double mu_growth = 1.5;
  double mu_cap_factor = 1e7;
};

struct PcpResult {
  Matrix l_hat;
  Matrix s_hat;
  int iterations = 0;
  bool converged = false;
  double primal_residual = 0.0;  // ||M - L - S||_F / ||M||_F
  std::vector<double> residual_history;
  // ||L||_* + lambda ||S||_1 and the singular-value threshold 1 / mu.
  std::vector<double> objective_history;
  std::vector<double> threshold_history;
  // Filled when a reference low-rank matrix is supplied.
  std::vector<double> rel_err_history;
};

PcpResult SolvePcpIalm(const Matrix& m, const PcpOptions& options,
                       const Matrix* reference = nullptr);

}  // namespace rpca

#endif  // RPCA_BASELINES_HPP_
