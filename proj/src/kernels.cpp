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

#include "rpca/kernels.hpp"

#include <cmath>
#include <vector>

namespace rpca::kernels {
namespace {

inline double Sign(double v) {
  return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
}

void CheckSameShape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ArgumentError(std::string(what) + ": shape mismatch (" +
                        std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " vs " +
                        std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()) + ")");
  }
}

void CheckMaskShape(const Matrix& a, const Mask& mask, const char* what) {
  if (a.rows() != mask.rows() || a.cols() != mask.cols()) {
    throw ArgumentError(std::string(what) + ": mask shape mismatch");
  }
}

// Row kernels shared by both variants so that the per-row arithmetic is
// identical.
double ResidualSignRow(const double* p, const double* t, double* s,
                       Index cols) {
  double acc = 0.0;
  for (Index j = 0; j < cols; ++j) {
    const double d = p[j] - t[j];
    s[j] = Sign(d);
    acc += std::abs(d);
  }
  return acc;
}

double L1Row(const double* a, Index cols) {
  double acc = 0.0;
  for (Index j = 0; j < cols; ++j) acc += std::abs(a[j]);
  return acc;
}

MaskedL1 MaskedRow(const double* a, const bool* mask, Index cols) {
  MaskedL1 acc;
  for (Index j = 0; j < cols; ++j) {
    const double v = std::abs(a[j]);
    acc.total += v;
    if (mask[j]) acc.masked += v;
  }
  return acc;
}

void BoxRow(const bool* mask, const double* fixed, double bound, double* a,
            Index cols) {
  for (Index j = 0; j < cols; ++j) {
    if (mask[j]) {
      a[j] = fixed[j];
    } else if (a[j] > bound) {
      a[j] = bound;
    } else if (a[j] < -bound) {
      a[j] = -bound;
    }
  }
}

void SoftRow(const double* a, double tau, double* out, Index cols) {
  for (Index j = 0; j < cols; ++j) {
    const double mag = std::abs(a[j]) - tau;
    out[j] = mag > 0.0 ? Sign(a[j]) * mag : 0.0;
  }
}

double SumInOrder(const std::vector<double>& partial) {
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

}  // namespace

namespace serial {

double ResidualSign(const Matrix& product, const Matrix& target,
                    Matrix* sign) {
  CheckSameShape(product, target, "ResidualSign");
  sign->resize(product.rows(), product.cols());
  std::vector<double> partial(product.rows());
  for (Index i = 0; i < product.rows(); ++i) {
    partial[i] = ResidualSignRow(product.row(i).data(), target.row(i).data(),
                                 sign->row(i).data(), product.cols());
  }
  return SumInOrder(partial);
}

double L1Norm(const Matrix& a) {
  std::vector<double> partial(a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
    partial[i] = L1Row(a.row(i).data(), a.cols());
  }
  return SumInOrder(partial);
}

MaskedL1 MaskedL1Norms(const Matrix& a, const Mask& mask) {
  CheckMaskShape(a, mask, "MaskedL1Norms");
  std::vector<MaskedL1> partial(a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
    partial[i] = MaskedRow(a.row(i).data(), mask.row(i).data(), a.cols());
  }
  MaskedL1 out;
  for (const MaskedL1& p : partial) {
    out.masked += p.masked;
    out.total += p.total;
  }
  return out;
}

void ProjectBox(const Mask& mask, const Matrix& fixed, double bound,
                Matrix* a) {
  CheckMaskShape(*a, mask, "ProjectBox");
  CheckSameShape(*a, fixed, "ProjectBox");
  for (Index i = 0; i < a->rows(); ++i) {
    BoxRow(mask.row(i).data(), fixed.row(i).data(), bound, a->row(i).data(),
           a->cols());
  }
}

void SoftThreshold(const Matrix& a, double tau, Matrix* out) {
  out->resize(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    SoftRow(a.row(i).data(), tau, out->row(i).data(), a.cols());
  }
}

}  // namespace serial

namespace parallel {

double ResidualSign(const Matrix& product, const Matrix& target,
                    Matrix* sign) {
  CheckSameShape(product, target, "ResidualSign");
  sign->resize(product.rows(), product.cols());
  const Index rows = product.rows();
  const Index cols = product.cols();
  std::vector<double> partial(rows);
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < rows; ++i) {
    partial[i] = ResidualSignRow(product.row(i).data(), target.row(i).data(),
                                 sign->row(i).data(), cols);
  }
  return SumInOrder(partial);
}

double L1Norm(const Matrix& a) {
  const Index rows = a.rows();
  std::vector<double> partial(rows);
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < rows; ++i) {
    partial[i] = L1Row(a.row(i).data(), a.cols());
  }
  return SumInOrder(partial);
}

MaskedL1 MaskedL1Norms(const Matrix& a, const Mask& mask) {
  CheckMaskShape(a, mask, "MaskedL1Norms");
  const Index rows = a.rows();
  std::vector<MaskedL1> partial(rows);
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < rows; ++i) {
    partial[i] = MaskedRow(a.row(i).data(), mask.row(i).data(), a.cols());
  }
  MaskedL1 out;
  for (const MaskedL1& p : partial) {
    out.masked += p.masked;
    out.total += p.total;
  }
  return out;
}

void ProjectBox(const Mask& mask, const Matrix& fixed, double bound,
                Matrix* a) {
  CheckMaskShape(*a, mask, "ProjectBox");
  CheckSameShape(*a, fixed, "ProjectBox");
  const Index rows = a->rows();
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < rows; ++i) {
    BoxRow(mask.row(i).data(), fixed.row(i).data(), bound, a->row(i).data(),
           a->cols());
  }
}

void SoftThreshold(const Matrix& a, double tau, Matrix* out) {
  out->resize(a.rows(), a.cols());
  const Index rows = a.rows();
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < rows; ++i) {
    SoftRow(a.row(i).data(), tau, out->row(i).data(), a.cols());
  }
}

}  // namespace parallel
}  // namespace rpca::kernels
