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

#include "rpca/subgrad.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "rpca/kernels.hpp"
#include "rpca/random.hpp"

namespace rpca {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void CheckPair(const FactorPair& pair, const Matrix& m) {
  if (pair.x.rows() != m.rows() || pair.y.rows() != m.cols() ||
      pair.x.cols() != pair.y.cols()) {
    throw ArgumentError("factor shapes do not match the data matrix");
  }
}

}  // namespace

void ValidateSchedule(const StepSchedule& schedule) {
  std::visit(
      Overloaded{
          [](const ConstantStep& s) {
            if (!(s.initial > 0)) throw ArgumentError("step must be positive");
          },
          [](const GeometricStep& s) {
            if (!(s.initial > 0)) throw ArgumentError("step must be positive");
            if (!(s.decay > 0 && s.decay < 1)) {
              throw ArgumentError("geometric decay must lie in (0, 1)");
            }
          },
          [](const AdaptiveHalvingStep& s) {
            if (!(s.initial > 0)) throw ArgumentError("step must be positive");
            if (!(s.factor > 0 && s.factor < 1)) {
              throw ArgumentError("halving factor must lie in (0, 1)");
            }
            if (s.patience < 1) throw ArgumentError("patience must be >= 1");
          }},
      schedule);
}

std::string ScheduleName(const StepSchedule& schedule) {
  return std::visit(
      Overloaded{[](const ConstantStep&) { return std::string("constant"); },
                 [](const GeometricStep&) { return std::string("geometric"); },
                 [](const AdaptiveHalvingStep&) {
                   return std::string("adaptive_halving");
                 }},
      schedule);
}

StepController::StepController(const StepSchedule& schedule)
    : schedule_(schedule),
      step_(std::visit([](const auto& s) { return s.initial; }, schedule)),
      best_(std::numeric_limits<double>::infinity()) {
  ValidateSchedule(schedule);
}

double StepController::Next(double objective) {
  if (auto* g = std::get_if<GeometricStep>(&schedule_)) {
    if (!first_) step_ *= g->decay;
  } else if (auto* h = std::get_if<AdaptiveHalvingStep>(&schedule_)) {
    if (objective < best_) {
      best_ = objective;
      stall_ = 0;
    } else if (++stall_ >= h->patience) {
      step_ *= h->factor;
      stall_ = 0;
    }
  }
  first_ = false;
  return step_;
}

double DefaultInitialStep(Index m, Index n) {
  return 0.1 / std::sqrt(static_cast<double>(m) * static_cast<double>(n));
}

double DefaultInitScale(const Matrix& m, Index k, double factor) {
  return factor * m.norm() /
         std::sqrt(static_cast<double>(m.rows()) *
                   static_cast<double>(m.cols()) * static_cast<double>(k));
}

double Objective(const FactorPair& pair, const Matrix& m) {
  CheckPair(pair, m);
  const Matrix residual = pair.x * pair.y.transpose() - m;
  return kernels::L1Norm(residual);
}

FactorPair Subgradient(const FactorPair& pair, const Matrix& m) {
  CheckPair(pair, m);
  Matrix sign;
  kernels::ResidualSign(pair.x * pair.y.transpose(), m, &sign);
  return {sign * pair.y, sign.transpose() * pair.x};
}

std::string StatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kTargetReached:
      return "target_reached";
    case SolveStatus::kMaxIterations:
      return "max_iterations";
    case SolveStatus::kDiverged:
      return "diverged";
  }
  return "unknown";
}

SolveResult Solve(const Matrix& m, Index k, const SolveOptions& options,
                  const Matrix* reference) {
  if (options.max_iters < 1) throw ArgumentError("max_iters must be >= 1");
  if (k < 1 || k > std::min(m.rows(), m.cols())) {
    throw ArgumentError("search rank k=" + std::to_string(k) +
                        " out of range");
  }
  if (reference &&
      (reference->rows() != m.rows() || reference->cols() != m.cols())) {
    throw ArgumentError("reference shape does not match the data matrix");
  }
  StepController steps(options.schedule);

  SolveResult out;
  if (options.initial) {
    out.pair = *options.initial;
    CheckPair(out.pair, m);
    if (out.pair.x.cols() != k) throw ArgumentError("initial rank != k");
  } else {
    if (!(options.init_scale > 0)) {
      throw ArgumentError("init_scale must be positive");
    }
    Rng rng(options.seed);
    out.pair.x = rng.Gaussian(m.rows(), k, options.init_scale);
    out.pair.y = rng.Gaussian(m.cols(), k, options.init_scale);
  }

  const double ref_norm = reference ? reference->norm() : 0.0;
  SolveTrace& trace = out.trace;
  trace.objective.reserve(static_cast<std::size_t>(options.max_iters) + 1);
  Matrix product, sign;
  double f0 = 0.0;
  for (int t = 0;; ++t) {
    product.noalias() = out.pair.x * out.pair.y.transpose();
    const double f = kernels::ResidualSign(product, m, &sign);
    const double step = steps.Next(f);
    trace.objective.push_back(f);
    trace.step.push_back(step);
    double rel = std::numeric_limits<double>::quiet_NaN();
    if (reference) {
      rel = ref_norm > 0 ? (product - *reference).norm() / ref_norm
                         : (product - *reference).norm();
      trace.rel_err.push_back(rel);
    }
    trace.iterations = t;
    if (t == 0) f0 = f;
    if (!std::isfinite(f) || f > options.divergence_factor * f0) {
      out.status = SolveStatus::kDiverged;
      break;
    }
    if (reference && rel <= options.target_rel_err) {
      out.status = SolveStatus::kTargetReached;
      break;
    }
    if (t == options.max_iters) {
      out.status = SolveStatus::kMaxIterations;
      break;
    }
    Matrix gx = sign * out.pair.y;
    Matrix gy = sign.transpose() * out.pair.x;
    double eta = step;
    if (options.normalized) {
      const double g = std::sqrt(gx.squaredNorm() + gy.squaredNorm());
      if (g == 0) break;  // stationary for this selection
      eta /= g;
    }
    out.pair.x -= eta * gx;
    out.pair.y -= eta * gy;
  }
  return out;
}

void WriteTraceCsv(const SolveTrace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out.precision(17);
  out << "iter,objective,rel_err,step\n";
  for (std::size_t t = 0; t < trace.objective.size(); ++t) {
    out << t << ',' << trace.objective[t] << ',';
    if (t < trace.rel_err.size()) out << trace.rel_err[t];
    out << ',' << trace.step[t] << '\n';
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace rpca
