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

#ifndef RPCA_TYPES_HPP_
#define RPCA_TYPES_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace rpca {

using Index = Eigen::Index;

// Dense matrices are row-major so that the flat binary files written by the
// instance serializer are a straight copy of the storage.
using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using Mask =
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr int kSchemaVersion = 1;

// Invalid arguments: bad dimensions, out-of-range probabilities, shape
// mismatches between operands.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition on numerical content does not hold, e.g. a
// basis that is not orthonormal.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal numerical invariant failed.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Dims {
  Index m = 0;  // rows
  Index n = 0;  // columns
  Index k = 0;  // search rank of the factorization
  Index r = 0;  // rank of the ground truth

  // Throws ArgumentError unless 1 <= r, k <= min(m, n).
  void Validate() const;
};

// Iterate of the factorized objective: X is m x k, Y is n x k.
struct FactorPair {
  Matrix x;
  Matrix y;
};

// splitmix64 finalizer. Used to derive independent stream seeds from a base
// seed and a tuple of integers.
inline std::uint64_t MixSeed(std::uint64_t state) {
  std::uint64_t z = state + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t MixSeed(std::uint64_t base, std::uint64_t salt) {
  return MixSeed(MixSeed(base) ^ (salt * 0xd6e8feb86659fd93ULL));
}

// max_ij |a_ij|, zero for empty matrices.
template <typename Derived>
double MaxAbs(const Eigen::MatrixBase<Derived>& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

}  // namespace rpca

#endif  // RPCA_TYPES_HPP_
