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

// Numerical probes of the objective landscape around exact factorizations:
// the restricted l1 norm of the support projector on the tangent space T,
// norm bounds for unit-l1 elements of T, sharp growth when k = r, and the
// explicit quadratic descent direction when k > r.

#ifndef RPCA_LANDSCAPE_HPP_
#define RPCA_LANDSCAPE_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rpca/types.hpp"

namespace rpca {

// ---------------------------------------------------------------------------
// Restricted ratio sup_{W in T} ||P_Omega W||_1 / ||W||_1.

struct RatioOptions {
  int restarts = 200;
  int iters = 100;  // ascent steps per restart
  std::uint64_t seed = 0;
  // Coordinate polishing along the rank-one generators of T.
  bool polish = true;
  // Polish only the best `polish_top` restarts; 0 polishes all of them.
  int polish_top = 8;
  int polish_sweeps = 50;
  // Extra starting point, e.g. the witness found for a smaller mask.
  std::optional<Matrix> warm_start;
};

struct RatioEstimate {
  double value = 0.0;
  Matrix witness;  // in T with unit l1 norm
  int restarts_used = 0;
  int best_restart = -1;  // -1 when the warm start won
};

// Lower bound on the supremum by multi-restart ascent.
RatioEstimate RestrictedRatioAscent(const Matrix& u, const Matrix& v,
                                    const Mask& omega,
                                    const RatioOptions& options);

// ||P_Omega W||_1 / ||W||_1 (0 for W = 0).
double RestrictedRatio(const Matrix& w, const Mask& omega);

// Best step s for max (||P_Omega(w + s d)||_1 + n0) / (||w + s d||_1 + d0)
// over the breakpoints s = -w_j / d_j, with (n0, d0) the contribution of the
// entries outside the segment. Returns {0, current ratio} if no breakpoint
// improves it.
std::pair<double, double> BestBreakpointStep(const double* w, const bool* mask,
                                             const double* d, Index len,
                                             Index stride, double n0,
                                             double d0);

// ---------------------------------------------------------------------------
// Norm bounds for unit-l1 elements of T.

struct DiameterReport {
  int samples = 0;
  double fro_bound = 0.0;  // sqrt(mu r / m + mu r / n)
  double inf_bound = 0.0;  // mu r / m + mu r / n
  double max_fro_ratio = 0.0;  // max ||W||_F / fro_bound over samples
  double max_inf_ratio = 0.0;
  int fro_violations = 0;
  int inf_violations = 0;
  // Same quantities for the normalized basis images P_T(E_ij).
  double basis_max_fro_ratio = 0.0;
  double basis_max_inf_ratio = 0.0;
  std::pair<Index, Index> basis_argmax{0, 0};
};

DiameterReport DiameterCheck(const Matrix& u, const Matrix& v, double mu,
                             int samples, std::uint64_t seed,
                             bool include_basis_images = true);

// ---------------------------------------------------------------------------
// Exact factorizations of L = U diag(sigma) V^T at search rank k >= r:
// X = [U Sigma^1/2, 0] G, Y = [V Sigma^1/2, 0] G^{-T}. G = I when
// `balanced`, otherwise a random well-conditioned k x k matrix.
FactorPair TrueFactorization(const Matrix& u, const Vector& sigma,
                             const Matrix& v, Index k, std::uint64_t seed,
                             bool balanced = false);

struct SaddleDirection {
  Matrix h;  // m x k
  Matrix k;  // n x k
  double gamma = 0.0;
  double t0 = 0.0;
  std::pair<Index, Index> pivot{0, 0};
  Index rank = 0;  // detected rank of the factors
};

// Quadratic descent direction at an exact factorization with k > rank.
// Verifies unit norm, H Y^T + X K^T = 0 and H K^T = gamma sign(S_ij) e_i e_j^T
// before returning; throws NumericError if any check fails and
// PreconditionError if k <= rank, the ranks of X and Y differ, or S = 0.
SaddleDirection ComputeSaddleDirection(
    const FactorPair& star, const Matrix& s,
    std::optional<std::pair<Index, Index>> pivot = std::nullopt);

// 1/2 ||N_Y^T N_X||_op from kernel bases of X and Y obtained by pivoted QR.
double GammaFromKernels(const FactorPair& star);

// ---------------------------------------------------------------------------
// Sharp growth at k = r.

// Projects (H, K) onto the orthogonal complement of the tangent directions
// {(X A, -Y A^T)} of the solution set, so that X^T H = K^T Y.
void ProjectNormal(const FactorPair& star, Matrix* h, Matrix* k);

struct SharpnessOptions {
  double eps_hat = 0.1;
  int directions = 200;
  std::vector<double> t_grid{1e-4};
  std::uint64_t seed = 0;
};

struct SharpnessReport {
  double eps_hat = 0.0;
  double sigma_min = 0.0;  // min(sigma_r(X), sigma_r(Y))
  double floor = 0.0;      // eps_hat / 8 * sigma_min
  std::vector<double> t_grid;
  std::vector<double> min_ratio;  // per t, over directions
  int directions = 0;
  int violations_at_smallest_t = 0;
};

// (f(X + t H, Y + t K) - f(X, Y)) / t for a unit direction.
double DirectionalGrowth(const FactorPair& star, const Matrix& m,
                         const Matrix& h, const Matrix& k, double t);

// Throws ArgumentError unless X and Y have exactly rank-many columns, i.e.
// k equals the detected rank.
SharpnessReport SharpnessProbe(const FactorPair& star, const Matrix& m,
                               const SharpnessOptions& options);

// ---------------------------------------------------------------------------
// Corruption that makes the ground truth non-optimal: S = -L e_j e_j^T.

struct OverfitReport {
  Index column = 0;
  Matrix s;
  Mask omega;
  Matrix m;
  FactorPair witness;        // rank-k factors of M from its SVD
  double witness_objective;  // ||X Y^T - M||_1
  double sparse_l1;          // ||S||_1 = ||L e_j||_1
};

OverfitReport OverfitDemo(const Matrix& l, Index k, Index column);

}  // namespace rpca

#endif  // RPCA_LANDSCAPE_HPP_
