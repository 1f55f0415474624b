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

#include "rpca/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "rpca/random.hpp"

namespace rpca {
namespace {

constexpr double kRankTolerance = 1e-10;
constexpr double kOrthonormalTolerance = 1e-10;
constexpr int kMuCapAttempts = 100;

Matrix ThinQ(const Matrix& a, Matrix* r_factor) {
  Eigen::HouseholderQR<Matrix> qr(a);
  const Index cols = a.cols();
  Matrix q = qr.householderQ() * Matrix::Identity(a.rows(), cols);
  *r_factor = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  return q;
}

double OrthonormalDeviation(const Matrix& q) {
  const Matrix gram = q.transpose() * q;
  return MaxAbs(gram - Matrix::Identity(q.cols(), q.cols()));
}

}  // namespace

void Dims::Validate() const {
  const Index lo = std::min(m, n);
  std::ostringstream msg;
  if (m < 1 || n < 1) {
    msg << "dimensions must be positive, got m=" << m << " n=" << n;
  } else if (r < 1 || r > lo) {
    msg << "true rank r=" << r << " must lie in [1, " << lo << "]";
  } else if (k < 1 || k > lo) {
    msg << "search rank k=" << k << " must lie in [1, " << lo << "]";
  } else {
    return;
  }
  throw ArgumentError(msg.str());
}

LowRank GenerateLowRank(Index m, Index n, Index r, double scale,
                        std::uint64_t seed, const FactorOverride& factors) {
  Dims{m, n, r, r}.Validate();
  if (!(scale > 0.0)) throw ArgumentError("scale must be positive");
  const double c = scale / std::sqrt(static_cast<double>(r));
  for (std::uint64_t s = seed;; ++s) {
    Matrix a, b;
    if (factors) {
      a.resize(m, r);
      b.resize(n, r);
      factors(s, &a, &b);
    } else {
      Rng rng(s);
      a = rng.Gaussian(m, r);
      b = rng.Gaussian(n, r);
    }
    Matrix ra, rb;
    const Matrix qa = ThinQ(a, &ra);
    const Matrix qb = ThinQ(b, &rb);
    const Matrix core = c * ra * rb.transpose();
    Eigen::JacobiSVD<Matrix> svd(core,
                                 Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Vector sv = svd.singularValues();
    if (!(sv(r - 1) > kRankTolerance * sv(0))) {
      if (factors) throw ArgumentError("supplied factors are rank deficient");
      continue;
    }
    LowRank out;
    out.l = c * a * b.transpose();
    out.u = qa * svd.matrixU();
    out.v = qb * svd.matrixV();
    out.sigma = sv;
    out.mu = Incoherence(out.u, out.v);
    out.seed_used = s;
    return out;
  }
}

LowRank LowRankFromMatrix(const Matrix& l, Index r) {
  Dims{l.rows(), l.cols(), r, r}.Validate();
  Eigen::BDCSVD<Matrix> svd(l, Eigen::ComputeThinU | Eigen::ComputeThinV);
  LowRank out;
  out.l = l;
  out.u = svd.matrixU().leftCols(r);
  out.v = svd.matrixV().leftCols(r);
  out.sigma = svd.singularValues().head(r);
  if (!(out.sigma(r - 1) > kRankTolerance * out.sigma(0))) {
    throw ArgumentError("matrix has rank below " + std::to_string(r));
  }
  out.mu = Incoherence(out.u, out.v);
  return out;
}

double Incoherence(const Matrix& u, const Matrix& v) {
  if (u.cols() != v.cols() || u.cols() < 1) {
    throw ArgumentError("U and V must have the same positive column count");
  }
  const double du = OrthonormalDeviation(u);
  const double dv = OrthonormalDeviation(v);
  if (du > kOrthonormalTolerance || dv > kOrthonormalTolerance) {
    std::ostringstream msg;
    msg << "bases are not orthonormal: max |U^T U - I| = " << du
        << ", max |V^T V - I| = " << dv;
    throw PreconditionError(msg.str());
  }
  const double r = static_cast<double>(u.cols());
  const double row_u = u.rowwise().squaredNorm().maxCoeff();
  const double row_v = v.rowwise().squaredNorm().maxCoeff();
  return std::max(static_cast<double>(u.rows()) / r * row_u,
                  static_cast<double>(v.rows()) / r * row_v);
}

std::string MagnitudeModel::Name() const {
  return kind == Kind::kUniform ? "uniform" : "rademacher";
}

MagnitudeModel MagnitudeModel::Parse(const std::string& name,
                                     double amplitude) {
  MagnitudeModel out;
  if (name == "uniform") {
    out.kind = Kind::kUniform;
  } else if (name == "rademacher") {
    out.kind = Kind::kRademacher;
  } else {
    throw ArgumentError("unknown magnitude model '" + name + "'");
  }
  out.amplitude = amplitude;
  return out;
}

SparsePart GenerateSparse(Index m, Index n, double p,
                          const MagnitudeModel& magnitude,
                          std::uint64_t seed) {
  if (m < 1 || n < 1) throw ArgumentError("dimensions must be positive");
  if (!(p > 0.0 && p < 1.0)) {
    throw ArgumentError("corruption probability must lie in (0, 1)");
  }
  if (!(magnitude.amplitude > 0.0)) {
    throw ArgumentError("magnitude amplitude must be positive");
  }
  Rng rng(seed);
  SparsePart out{Matrix::Zero(m, n), Mask::Constant(m, n, false)};
  const double a = magnitude.amplitude;
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (!rng.Bernoulli(p)) continue;
      out.omega(i, j) = true;
      double value = 0.0;
      if (magnitude.kind == MagnitudeModel::Kind::kRademacher) {
        value = rng.Uniform01() < 0.5 ? -a : a;
      } else {
        while (value == 0.0) value = a * (2.0 * rng.Uniform01() - 1.0);
      }
      out.s(i, j) = value;
    }
  }
  return out;
}

Matrix Assemble(const Matrix& l, const Matrix& s) {
  if (l.rows() != s.rows() || l.cols() != s.cols()) {
    throw ArgumentError("Assemble: shape mismatch");
  }
  return l + s;
}

Instance GenerateInstance(const InstanceConfig& config) {
  config.dims.Validate();
  const Index m = config.dims.m;
  const Index n = config.dims.n;
  const Index r = config.dims.r;
  if (!(config.p > 0.0 && config.p < 1.0)) {
    throw ArgumentError("corruption probability must lie in (0, 1)");
  }
  if (!(config.magnitude_scale > 0.0)) {
    throw ArgumentError("magnitude_scale must be positive");
  }

  LowRank low = GenerateLowRank(m, n, r, config.scale, config.seed);
  if (config.mu_cap) {
    int attempts = 1;
    while (low.mu > *config.mu_cap) {
      if (attempts++ >= kMuCapAttempts) {
        std::ostringstream msg;
        msg << "no low-rank draw with mu <= " << *config.mu_cap << " in "
            << kMuCapAttempts << " attempts";
        throw ArgumentError(msg.str());
      }
      low = GenerateLowRank(m, n, r, config.scale, low.seed_used + 1);
    }
  }

  Instance inst;
  inst.dims = config.dims;
  inst.p = config.p;
  inst.seed = config.seed;
  inst.scale = config.scale;
  inst.magnitude.kind = config.magnitude_kind;
  inst.magnitude.amplitude =
      config.magnitude_scale * low.l.cwiseAbs().mean();
  SparsePart sparse = GenerateSparse(m, n, config.p, inst.magnitude,
                                     MixSeed(config.seed, 0x5ba45e));
  inst.l = std::move(low.l);
  inst.u = std::move(low.u);
  inst.sigma = std::move(low.sigma);
  inst.v = std::move(low.v);
  inst.mu = low.mu;
  inst.s = std::move(sparse.s);
  inst.omega = std::move(sparse.omega);
  inst.m = Assemble(inst.l, inst.s);
  return inst;
}

}  // namespace rpca
