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

// Recovery success rates over a grid of (rank, corruption probability).

#ifndef RPCA_EXPERIMENTS_HPP_
#define RPCA_EXPERIMENTS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rpca/types.hpp"

namespace rpca {

enum class Solver { kSubgrad, kIalm };
std::string SolverName(Solver solver);
Solver ParseSolver(const std::string& name);

struct PhaseConfig {
  Index m = 100;
  Index n = 80;
  Index k = 20;
  std::vector<Index> ranks;
  std::vector<double> ps;
  int trials = 20;
  double threshold = 1e-3;  // success: ||L_hat - L||_F / ||L||_F <= threshold
  Solver solver = Solver::kSubgrad;
  std::uint64_t seed = 0;
  // Subgradient settings; step <= 0 selects DefaultInitialStep.
  int max_iters = 4000;
  double step = 0.0;
  double init_factor = 1e-3;
  // IALM settings.
  int ialm_max_iter = 500;
  double ialm_tol = 1e-7;
  // OpenMP threads for the trial fan-out; 0 keeps the runtime default.
  int workers = 0;
};

// Ranks 2, 4, ..., 40 and p = 0.02, 0.06, ..., 0.50.
std::vector<Index> DefaultPhaseRanks();
std::vector<double> DefaultPhasePs();

// Throws ArgumentError on empty or unsorted axes, trials < 1, or ranks that
// exceed min(m, n).
void ValidatePhaseConfig(const PhaseConfig& config);

// Seed of one trial, a function of the base seed, r, the bits of p and the
// trial index only, so that cells are independent of the grid they sit in.
std::uint64_t CellSeed(std::uint64_t base, Index r, double p, int trial);

struct TrialOutcome {
  double rel_err = 0.0;
  bool success = false;
  int iterations = 0;
};

TrialOutcome RunPhaseTrial(const PhaseConfig& config, Index r, double p,
                           int trial);

struct PhaseGrid {
  std::vector<Index> ranks;
  std::vector<double> ps;
  int trials = 0;
  double threshold = 0.0;
  std::vector<std::vector<int>> successes;  // [rank][p]
  std::vector<std::vector<double>> success_rate;
};

PhaseGrid RunPhaseGrid(const PhaseConfig& config);

// Header `rank,p,success_rate,successes,trials`.
void WritePhaseCsv(const PhaseGrid& grid, const std::string& path);
// Binary graymap, rows = ranks (top = smallest), columns = p, white = 1.
void WritePhasePgm(const PhaseGrid& grid, const std::string& path,
                   int cell_pixels = 16);

}  // namespace rpca

#endif  // RPCA_EXPERIMENTS_HPP_
