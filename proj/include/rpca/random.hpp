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

// Seeded random streams. Boost.Random distributions are used instead of the
// <random> ones because their output is specified, so a seed reproduces the
// same draws on every standard library.

#ifndef RPCA_RANDOM_HPP_
#define RPCA_RANDOM_HPP_

#include <cstdint>

#include <boost/random/bernoulli_distribution.hpp>
#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "rpca/types.hpp"

namespace rpca {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double Normal() { return normal_(engine_); }
  double Uniform01() { return uniform_(engine_); }
  bool Bernoulli(double p) {
    return boost::random::bernoulli_distribution<double>(p)(engine_);
  }
  Index UniformIndex(Index lo, Index hi) {
    return boost::random::uniform_int_distribution<Index>(lo, hi)(engine_);
  }

  Matrix Gaussian(Index rows, Index cols, double stddev = 1.0) {
    Matrix a(rows, cols);
    for (Index i = 0; i < rows; ++i) {
      for (Index j = 0; j < cols; ++j) a(i, j) = stddev * Normal();
    }
    return a;
  }

  // Uniformly random +-1 entries.
  Matrix Signs(Index rows, Index cols) {
    Matrix a(rows, cols);
    for (Index i = 0; i < rows; ++i) {
      for (Index j = 0; j < cols; ++j) a(i, j) = Uniform01() < 0.5 ? -1 : 1;
    }
    return a;
  }

 private:
  boost::random::mt19937_64 engine_;
  boost::random::normal_distribution<double> normal_;
  boost::random::uniform_01<double> uniform_;
};

}  // namespace rpca

#endif  // RPCA_RANDOM_HPP_
