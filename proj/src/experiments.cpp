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

#include "rpca/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>

#include <omp.h>

#include "rpca/baselines.hpp"
#include "rpca/model.hpp"
#include "rpca/subgrad.hpp"

namespace rpca {

std::string SolverName(Solver solver) {
  return solver == Solver::kSubgrad ? "subgrad" : "ialm";
}

Solver ParseSolver(const std::string& name) {
  if (name == "subgrad") return Solver::kSubgrad;
  if (name == "ialm") return Solver::kIalm;
  throw ArgumentError("unknown solver '" + name + "'");
}

std::vector<Index> DefaultPhaseRanks() {
  std::vector<Index> out;
  for (Index r = 2; r <= 40; r += 2) out.push_back(r);
  return out;
}

std::vector<double> DefaultPhasePs() {
  std::vector<double> out;
  for (int q = 0; q < 13; ++q) out.push_back(0.02 + 0.04 * q);
  return out;
}

void ValidatePhaseConfig(const PhaseConfig& c) {
  if (c.ranks.empty() || c.ps.empty()) {
    throw ArgumentError("phase grid axes must be nonempty");
  }
  if (!std::is_sorted(c.ranks.begin(), c.ranks.end()) ||
      !std::is_sorted(c.ps.begin(), c.ps.end())) {
    throw ArgumentError("phase grid axes must be sorted");
  }
  if (c.trials < 1) throw ArgumentError("trials must be >= 1");
  if (!(c.threshold > 0)) throw ArgumentError("threshold must be positive");
  if (c.max_iters < 1) throw ArgumentError("max_iters must be >= 1");
  Dims{c.m, c.n, c.k, c.ranks.back()}.Validate();
  Dims{c.m, c.n, c.k, c.ranks.front()}.Validate();
  for (double p : c.ps) {
    if (!(p > 0 && p < 1)) throw ArgumentError("p values must lie in (0, 1)");
  }
}

std::uint64_t CellSeed(std::uint64_t base, Index r, double p, int trial) {
  std::uint64_t h = MixSeed(base, static_cast<std::uint64_t>(r));
  h = MixSeed(h, std::bit_cast<std::uint64_t>(p));
  return MixSeed(h, static_cast<std::uint64_t>(trial));
}

TrialOutcome RunPhaseTrial(const PhaseConfig& config, Index r, double p,
                           int trial) {
  InstanceConfig ic;
  ic.dims = {config.m, config.n, config.k, r};
  ic.p = p;
  ic.seed = CellSeed(config.seed, r, p, trial);
  const Instance inst = GenerateInstance(ic);

  TrialOutcome out;
  if (config.solver == Solver::kSubgrad) {
    SolveOptions opt;
    const double step = config.step > 0
                            ? config.step
                            : DefaultInitialStep(config.m, config.n);
    opt.schedule = AdaptiveHalvingStep{step, 10, 0.5};
    opt.init_scale = DefaultInitScale(inst.m, config.k, config.init_factor);
    opt.max_iters = config.max_iters;
    opt.target_rel_err = config.threshold;
    opt.seed = MixSeed(ic.seed, 0x501e);
    const SolveResult res = Solve(inst.m, config.k, opt, &inst.l);
    out.rel_err = res.trace.rel_err.back();
    out.iterations = res.trace.iterations;
  } else {
    PcpOptions opt;
    opt.tol = config.ialm_tol;
    opt.max_iter = config.ialm_max_iter;
    const PcpResult res = SolvePcpIalm(inst.m, opt);
    out.rel_err = (res.l_hat - inst.l).norm() / inst.l.norm();
    out.iterations = res.iterations;
  }
  out.success = std::isfinite(out.rel_err) && out.rel_err <= config.threshold;
  return out;
}

PhaseGrid RunPhaseGrid(const PhaseConfig& config) {
  ValidatePhaseConfig(config);
  const std::size_t nr = config.ranks.size();
  const std::size_t np = config.ps.size();
  const std::size_t nt = static_cast<std::size_t>(config.trials);
  const long total = static_cast<long>(nr * np * nt);
  std::vector<char> ok(static_cast<std::size_t>(total), 0);

  const int threads =
      config.workers > 0 ? config.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long idx = 0; idx < total; ++idx) {
    const std::size_t q = static_cast<std::size_t>(idx);
    const std::size_t a = q / (np * nt);
    const std::size_t b = (q / nt) % np;
    const int t = static_cast<int>(q % nt);
    ok[q] = RunPhaseTrial(config, config.ranks[a], config.ps[b], t).success;
  }

  PhaseGrid grid;
  grid.ranks = config.ranks;
  grid.ps = config.ps;
  grid.trials = config.trials;
  grid.threshold = config.threshold;
  grid.successes.assign(nr, std::vector<int>(np, 0));
  grid.success_rate.assign(nr, std::vector<double>(np, 0.0));
  for (std::size_t a = 0; a < nr; ++a) {
    for (std::size_t b = 0; b < np; ++b) {
      int count = 0;
      for (std::size_t t = 0; t < nt; ++t) count += ok[(a * np + b) * nt + t];
      grid.successes[a][b] = count;
      grid.success_rate[a][b] =
          static_cast<double>(count) / static_cast<double>(config.trials);
    }
  }
  return grid;
}

void WritePhaseCsv(const PhaseGrid& grid, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out.precision(17);
  out << "rank,p,success_rate,successes,trials\n";
  for (std::size_t a = 0; a < grid.ranks.size(); ++a) {
    for (std::size_t b = 0; b < grid.ps.size(); ++b) {
      out << grid.ranks[a] << ',' << grid.ps[b] << ','
          << grid.success_rate[a][b] << ',' << grid.successes[a][b] << ','
          << grid.trials << '\n';
    }
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

void WritePhasePgm(const PhaseGrid& grid, const std::string& path,
                   int cell_pixels) {
  if (cell_pixels < 1) throw ArgumentError("cell_pixels must be >= 1");
  const std::size_t width = grid.ps.size() * cell_pixels;
  const std::size_t height = grid.ranks.size() * cell_pixels;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << "P5\n" << width << ' ' << height << "\n255\n";
  std::vector<unsigned char> row(width);
  for (std::size_t a = 0; a < grid.ranks.size(); ++a) {
    for (std::size_t b = 0; b < grid.ps.size(); ++b) {
      const auto level = static_cast<unsigned char>(
          std::lround(255.0 * grid.success_rate[a][b]));
      std::fill_n(row.begin() + static_cast<long>(b * cell_pixels),
                  cell_pixels, level);
    }
    for (int y = 0; y < cell_pixels; ++y) {
      out.write(reinterpret_cast<const char*>(row.data()),
                static_cast<std::streamsize>(row.size()));
    }
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace rpca
