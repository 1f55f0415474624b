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

// Dual certificates for criticality of exact factorizations.
//
// A certificate is a matrix Lambda with Lambda V = 0, Lambda^T U = 0,
// Lambda = -sign(S) on the support of S and |Lambda| <= 1 - eps elsewhere.
// It is searched for by alternating projections between the subspace and the
// box.

#ifndef RPCA_CERTIFICATE_HPP_
#define RPCA_CERTIFICATE_HPP_

#include <vector>

#include "rpca/types.hpp"

namespace rpca {

// Throws PreconditionError if U or V is not orthonormal within 1e-10, or
// ArgumentError on shape mismatch with W.
void CheckTangentBases(const Matrix& u, const Matrix& v, Index m, Index n);

// U U^T W + W V V^T - U U^T W V V^T.
Matrix ProjectT(const Matrix& w, const Matrix& u, const Matrix& v);
// (I - U U^T) W (I - V V^T).
Matrix ProjectTperp(const Matrix& w, const Matrix& u, const Matrix& v);

struct Certificate {
  Matrix lambda;
  double eps = 0.0;
  double tol = 0.0;
  double residual_subspace = 0.0;  // max(|Lambda V|_inf, |Lambda^T U|_inf)
  double residual_box = 0.0;       // excess of |Lambda| over 1 - eps off Omega
  double residual_sign = 0.0;      // max over Omega of |Lambda + sign(S)|
  bool feasible = false;
  int iterations = 0;
  double wall_seconds = 0.0;
  // Distances ||b_t - a_t||_F, ||a_t - b_{t+1}||_F, ... between consecutive
  // half steps. Nonincreasing for plain alternating projections.
  std::vector<double> gap_history;
};

struct CertificateOptions {
  double eps = 0.1;
  double tol = 1e-8;
  int max_iter = 20000;
  bool dykstra = false;
  bool record_gaps = false;
};

Certificate FindCertificate(const Matrix& u, const Matrix& v, const Matrix& s,
                            const Mask& omega,
                            const CertificateOptions& options);

struct EpsSweep {
  std::vector<Certificate> runs;  // in the order of the requested eps values
  // Largest eps with a feasible certificate; 0 when none was found.
  double best_eps = 0.0;
};

EpsSweep SweepEps(const Matrix& u, const Matrix& v, const Matrix& s,
                  const Mask& omega, const std::vector<double>& eps_values,
                  CertificateOptions options);

// Recomputes the three residuals of `lambda` and sets `feasible`.
void MeasureResiduals(const Matrix& u, const Matrix& v, const Matrix& s,
                      const Mask& omega, Certificate* cert);

// True iff |Lambda Y|_inf <= tol ||Y||_F and |Lambda^T X|_inf <= tol ||X||_F.
// Throws PreconditionError for an infeasible certificate, or when `low_rank`
// is given and ||X Y^T - low_rank||_F > tol ||low_rank||_F.
bool VerifyCriticality(const FactorPair& pair, const Certificate& cert,
                       double tol, const Matrix* low_rank = nullptr);

}  // namespace rpca

#endif  // RPCA_CERTIFICATE_HPP_
