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

#ifndef RPCA_TESTS_TEST_UTIL_HPP_
#define RPCA_TESTS_TEST_UTIL_HPP_

#include <filesystem>
#include <string>

#include <Eigen/QR>

#include "rpca/random.hpp"
#include "rpca/types.hpp"

namespace rpca::testing {

inline Matrix RandomOrthonormal(Index rows, Index cols, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::HouseholderQR<Matrix> qr(rng.Gaussian(rows, cols));
  return qr.householderQ() * Matrix::Identity(rows, cols);
}

inline Mask RandomMask(Index rows, Index cols, double p, std::uint64_t seed) {
  Rng rng(seed);
  Mask mask(rows, cols);
  for (Index i = 0; i < mask.size(); ++i) mask.data()[i] = rng.Uniform01() < p;
  return mask;
}

// Fresh empty directory under the system temp path.
inline std::string TempDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("rpca_test_" + name + "_" +
                    std::to_string(reinterpret_cast<std::uintptr_t>(&name)));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

}  // namespace rpca::testing

#endif  // RPCA_TESTS_TEST_UTIL_HPP_
