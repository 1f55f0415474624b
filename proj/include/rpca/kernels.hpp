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

// Entrywise kernels on m x n matrices.
//
// Every kernel exists twice: `serial::` is the straightforward reference and
// `parallel::` splits rows across OpenMP threads. Reductions are always formed
// as per-row partial sums followed by an in-order sum over rows, so both
// variants return bit-identical results for any thread count.

#ifndef RPCA_KERNELS_HPP_
#define RPCA_KERNELS_HPP_

#include "rpca/types.hpp"

namespace rpca::kernels {

struct MaskedL1 {
  double masked = 0.0;  // sum over mask of |a_ij|
  double total = 0.0;   // sum of |a_ij|
};

namespace serial {

// sign->(i,j) = sign(product_ij - target_ij) with sign(0) = 0; returns
// ||product - target||_1. `sign` is resized as needed.
double ResidualSign(const Matrix& product, const Matrix& target, Matrix* sign);

double L1Norm(const Matrix& a);

MaskedL1 MaskedL1Norms(const Matrix& a, const Mask& mask);

// Overwrites entries on `mask` with `fixed` and clips the rest to
// [-bound, bound].
void ProjectBox(const Mask& mask, const Matrix& fixed, double bound,
                Matrix* a);

// out = sign(a) * max(|a| - tau, 0).
void SoftThreshold(const Matrix& a, double tau, Matrix* out);

}  // namespace serial

namespace parallel {

double ResidualSign(const Matrix& product, const Matrix& target, Matrix* sign);
double L1Norm(const Matrix& a);
MaskedL1 MaskedL1Norms(const Matrix& a, const Mask& mask);
void ProjectBox(const Mask& mask, const Matrix& fixed, double bound,
                Matrix* a);
void SoftThreshold(const Matrix& a, double tau, Matrix* out);

}  // namespace parallel

// Default entry points used by the solvers.
using parallel::L1Norm;
using parallel::MaskedL1Norms;
using parallel::ProjectBox;
using parallel::ResidualSign;
using parallel::SoftThreshold;

}  // namespace rpca::kernels

#endif  // RPCA_KERNELS_HPP_
