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

// Synthetic low-rank plus sparse instances.

#ifndef RPCA_MODEL_HPP_
#define RPCA_MODEL_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "rpca/types.hpp"

namespace rpca {

struct LowRank {
  Matrix l;      // m x n, rank r
  Matrix u;      // m x r, orthonormal columns
  Vector sigma;  // r nonincreasing positive singular values
  Matrix v;      // n x r, orthonormal columns
  double mu = 0.0;
  std::uint64_t seed_used = 0;  // seed after any rank-deficiency retries
};

// Supplies the m x r and n x r factors A, B of L = A B^T in place of the
// Gaussian draw. Used for hand-built cases in tests.
using FactorOverride =
    std::function<void(std::uint64_t seed, Matrix* a, Matrix* b)>;

// L = (scale / sqrt(r)) A B^T with A, B standard normal. Retries with seed+1
// while sigma_r <= 1e-10 sigma_1.
LowRank GenerateLowRank(Index m, Index n, Index r, double scale,
                        std::uint64_t seed,
                        const FactorOverride& factors = nullptr);

// Thin SVD of a matrix known to have rank r, plus measured incoherence.
LowRank LowRankFromMatrix(const Matrix& l, Index r);

// max(m/r max_i ||U_i||^2, n/r max_j ||V_j||^2). Throws PreconditionError if
// U or V deviates from orthonormality by more than 1e-10.
double Incoherence(const Matrix& u, const Matrix& v);

struct MagnitudeModel {
  enum class Kind { kUniform, kRademacher };
  Kind kind = Kind::kUniform;
  // Uniform: values in [-amplitude, amplitude] \ {0}. Rademacher: +-amplitude.
  double amplitude = 1.0;

  std::string Name() const;
  static MagnitudeModel Parse(const std::string& name, double amplitude);
};

struct SparsePart {
  Matrix s;
  Mask omega;
};

// Omega_ij ~ Bernoulli(p) i.i.d., S_ij drawn from the magnitude model on
// Omega (zeros are redrawn) and exactly zero elsewhere.
SparsePart GenerateSparse(Index m, Index n, double p,
                          const MagnitudeModel& magnitude, std::uint64_t seed);

Matrix Assemble(const Matrix& l, const Matrix& s);

struct Instance {
  Dims dims;
  Matrix l;
  Matrix u;
  Vector sigma;
  Matrix v;
  Matrix s;
  Mask omega;
  Matrix m;
  double mu = 0.0;
  double p = 0.0;
  std::uint64_t seed = 0;
  double scale = 1.0;
  MagnitudeModel magnitude;

  Index SupportSize() const { return omega.count(); }
};

struct InstanceConfig {
  Dims dims;
  double p = 0.1;
  double scale = 1.0;
  std::uint64_t seed = 0;
  // Magnitude of corruptions relative to mean |L_ij|.
  double magnitude_scale = 10.0;
  MagnitudeModel::Kind magnitude_kind = MagnitudeModel::Kind::kUniform;
  // Reject low-rank draws with mu above this cap.
  std::optional<double> mu_cap;
};

Instance GenerateInstance(const InstanceConfig& config);

// Directory layout: meta.json plus row-major little-endian float64 files
// L.bin, S.bin, M.bin, U.bin, V.bin, sigma.bin and one byte per entry in
// omega.bin. Throws IoError on failure.
void SaveInstance(const Instance& instance, const std::string& dir);
Instance LoadInstance(const std::string& dir);

void WriteMatrixBin(const Matrix& a, const std::string& path);
Matrix ReadMatrixBin(const std::string& path, Index rows, Index cols);

}  // namespace rpca

#endif  // RPCA_MODEL_HPP_
