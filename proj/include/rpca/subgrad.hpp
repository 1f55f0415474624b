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

// Subgradient descent on f(X, Y) = ||X Y^T - M||_1.

#ifndef RPCA_SUBGRAD_HPP_
#define RPCA_SUBGRAD_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rpca/types.hpp"

namespace rpca {

struct ConstantStep {
  double initial = 1e-3;
};

// step_t = initial * decay^t.
struct GeometricStep {
  double initial = 1e-3;
  double decay = 0.999;
};

// The step is multiplied by `factor` after `patience` consecutive iterations
// without a new best objective value.
struct AdaptiveHalvingStep {
  double initial = 1e-3;
  int patience = 10;
  double factor = 0.5;
};

using StepSchedule = std::variant<ConstantStep, GeometricStep,
                                  AdaptiveHalvingStep>;

// Throws ArgumentError on nonpositive rates, decay or factor outside (0, 1),
// or patience < 1.
void ValidateSchedule(const StepSchedule& schedule);
std::string ScheduleName(const StepSchedule& schedule);

class StepController {
 public:
  explicit StepController(const StepSchedule& schedule);

  // Feeds the objective of the current iterate and returns the step to take
  // from it.
  double Next(double objective);
  double current() const { return step_; }

 private:
  StepSchedule schedule_;
  double step_;
  double best_;
  int stall_ = 0;
  bool first_ = true;
};

// 0.1 / sqrt(m n).
double DefaultInitialStep(Index m, Index n);
// factor * ||M||_F / sqrt(m n k), factor = 1e-3 by default.
double DefaultInitScale(const Matrix& m, Index k, double factor = 1e-3);

double Objective(const FactorPair& pair, const Matrix& m);

// (Lambda Y, Lambda^T X) with Lambda = sign(X Y^T - M), sign(0) = 0.
FactorPair Subgradient(const FactorPair& pair, const Matrix& m);

struct SolveTrace {
  std::vector<double> objective;
  std::vector<double> rel_err;  // empty without a reference matrix
  std::vector<double> step;
  int iterations = 0;
};

enum class SolveStatus { kTargetReached, kMaxIterations, kDiverged };
std::string StatusName(SolveStatus status);

struct SolveOptions {
  StepSchedule schedule = AdaptiveHalvingStep{};
  double init_scale = 1e-3;
  int max_iters = 1000;
  double target_rel_err = 0.0;
  std::uint64_t seed = 0;
  // Divide each step by ||(G_X, G_Y)||_F.
  bool normalized = false;
  // Abort when the objective exceeds this multiple of the initial one.
  double divergence_factor = 1e6;
  // Starting point; drawn from N(0, init_scale^2) when absent.
  std::optional<FactorPair> initial;
};

struct SolveResult {
  FactorPair pair;
  SolveTrace trace;
  SolveStatus status = SolveStatus::kMaxIterations;
};

// `reference` (the ground-truth low-rank matrix) enables relative-error
// tracking and the target stop; pass nullptr to run the full budget.
SolveResult Solve(const Matrix& m, Index k, const SolveOptions& options,
                  const Matrix* reference = nullptr);

// Header `iter,objective,rel_err,step`; rel_err is empty when not tracked.
void WriteTraceCsv(const SolveTrace& trace, const std::string& path);

}  // namespace rpca

#endif  // RPCA_SUBGRAD_HPP_
