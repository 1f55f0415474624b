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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "rpca/kernels.hpp"
#include "rpca/random.hpp"

namespace rpca {
namespace {

struct Inputs {
  Matrix a, b;
  Mask mask;
};

Inputs MakeInputs(Index size) {
  Rng rng(size);
  Inputs in{rng.Gaussian(size, size), rng.Gaussian(size, size),
            Mask(size, size)};
  for (Index i = 0; i < in.mask.size(); ++i) {
    in.mask.data()[i] = rng.Uniform01() < 0.1;
  }
  return in;
}

template <double (*Fn)(const Matrix&, const Matrix&, Matrix*)>
void BM_ResidualSign(benchmark::State& state) {
  const Inputs in = MakeInputs(state.range(0));
  Matrix sign;
  for (auto _ : state) benchmark::DoNotOptimize(Fn(in.a, in.b, &sign));
  state.SetItemsProcessed(state.iterations() * in.a.size());
}

template <kernels::MaskedL1 (*Fn)(const Matrix&, const Mask&)>
void BM_MaskedL1(benchmark::State& state) {
  const Inputs in = MakeInputs(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(in.a, in.mask));
  state.SetItemsProcessed(state.iterations() * in.a.size());
}

template <void (*Fn)(const Mask&, const Matrix&, double, Matrix*)>
void BM_ProjectBox(benchmark::State& state) {
  const Inputs in = MakeInputs(state.range(0));
  Matrix work = in.a;
  for (auto _ : state) {
    Fn(in.mask, in.b, 0.9, &work);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * in.a.size());
}

template <void (*Fn)(const Matrix&, double, Matrix*)>
void BM_SoftThreshold(benchmark::State& state) {
  const Inputs in = MakeInputs(state.range(0));
  Matrix out;
  for (auto _ : state) {
    Fn(in.a, 0.5, &out);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * in.a.size());
}

BENCHMARK(BM_ResidualSign<kernels::serial::ResidualSign>)
    ->Name("ResidualSign/serial")->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_ResidualSign<kernels::parallel::ResidualSign>)
    ->Name("ResidualSign/parallel")->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_MaskedL1<kernels::serial::MaskedL1Norms>)
    ->Name("MaskedL1/serial")->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_MaskedL1<kernels::parallel::MaskedL1Norms>)
    ->Name("MaskedL1/parallel")->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_ProjectBox<kernels::serial::ProjectBox>)
    ->Name("ProjectBox/serial")->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_ProjectBox<kernels::parallel::ProjectBox>)
    ->Name("ProjectBox/parallel")->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_SoftThreshold<kernels::serial::SoftThreshold>)
    ->Name("SoftThreshold/serial")->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_SoftThreshold<kernels::parallel::SoftThreshold>)
    ->Name("SoftThreshold/parallel")->RangeMultiplier(4)->Range(64, 1024);

}  // namespace
}  // namespace rpca

BENCHMARK_MAIN();
