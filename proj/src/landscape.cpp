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

#include "rpca/landscape.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "rpca/certificate.hpp"
#include "rpca/kernels.hpp"
#include "rpca/random.hpp"
#include "rpca/subgrad.hpp"

namespace rpca {
namespace {

constexpr double kRankTolerance = 1e-10;
constexpr double kImprovement = 1e-12;
constexpr double kDenominatorGuard = 1e-9;
constexpr std::array<double, 3> kAscentSteps{1e-3, 1e-2, 1e-1};

inline double Sign(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

// P_T without the orthonormality check; callers validate once.
Matrix Tangent(const Matrix& w, const Matrix& u, const Matrix& v) {
  const Matrix utw = u.transpose() * w;
  const Matrix wv = w * v;
  return u * utw + (wv - u * (utw * v)) * v.transpose();
}

Matrix SignOf(const Matrix& a) {
  return a.unaryExpr([](double x) { return Sign(x); });
}

Matrix MaskAsMatrix(const Mask& omega) { return omega.cast<double>(); }

struct Candidate {
  Matrix w;
  double value = 0.0;
  int restart = -1;
};

// Rescales w to unit l1 norm; returns false for w = 0.
bool NormalizeL1(Matrix* w) {
  const double norm = kernels::L1Norm(*w);
  if (!(norm > 0) || !std::isfinite(norm)) return false;
  *w /= norm;
  return true;
}

Matrix StartingPoint(const Matrix& u, const Matrix& v, const Mask& omega,
                     int restart, Rng* rng) {
  const Index m = omega.rows(), n = omega.cols();
  Matrix w;
  if (restart % 2 == 0) {
    Matrix g = rng->Signs(m, n).cwiseProduct(MaskAsMatrix(omega));
    w = Tangent(g, u, v);
    if (NormalizeL1(&w)) return w;
  }
  do {
    w = Tangent(rng->Gaussian(m, n), u, v);
  } while (!NormalizeL1(&w));
  return w;
}

// Projected ascent of the ratio from a unit-l1 point of T.
double Ascend(const Matrix& u, const Matrix& v, const Mask& omega,
              const Matrix& mask, int iters, Matrix* w) {
  double current = RestrictedRatio(*w, omega);
  for (int it = 0; it < iters; ++it) {
    const Matrix sign = SignOf(*w);
    Matrix dir = Tangent(mask.cwiseProduct(sign) - current * sign, u, v);
    if (!NormalizeL1(&dir)) break;
    double best = current;
    Matrix best_w;
    for (double step : kAscentSteps) {
      Matrix trial = *w + step * dir;
      if (!NormalizeL1(&trial)) continue;
      const double value = RestrictedRatio(trial, omega);
      if (value > best) {
        best = value;
        best_w = std::move(trial);
      }
    }
    if (best_w.size() == 0) break;
    *w = std::move(best_w);
    current = best;
  }
  return current;
}

struct SegmentSums {
  double masked = 0.0;
  double total = 0.0;
};

SegmentSums Segment(const double* w, const bool* mask, Index len,
                    Index stride) {
  SegmentSums s;
  for (Index t = 0; t < len; ++t) {
    const double a = std::abs(w[t * stride]);
    s.total += a;
    if (mask[t * stride]) s.masked += a;
  }
  return s;
}

// Coordinate ascent along e_i V_a^T (rows) and U_b e_j^T (columns), both of
// which span T.
double Polish(const Matrix& u, const Matrix& v, const Mask& omega, int sweeps,
              Matrix* w) {
  const Index m = w->rows(), n = w->cols(), r = u.cols();
  // Column-contiguous copies of the generators.
  const Eigen::MatrixXd vcols = v;
  const Eigen::MatrixXd ucols = u;

  kernels::MaskedL1 sums = kernels::MaskedL1Norms(*w, omega);
  double num = sums.masked, den = sums.total;
  double current = den > 0 ? num / den : 0.0;

  auto try_move = [&](double* base, const bool* mask, const double* d,
                      Index len, Index stride) {
    const SegmentSums before = Segment(base, mask, len, stride);
    const double n0 = num - before.masked;
    const double d0 = den - before.total;
    const auto [step, value] =
        BestBreakpointStep(base, mask, d, len, stride, n0, d0);
    if (!(value > current * (1 + kImprovement)) || step == 0) return false;
    for (Index t = 0; t < len; ++t) base[t * stride] += step * d[t];
    const SegmentSums after = Segment(base, mask, len, stride);
    num = n0 + after.masked;
    den = d0 + after.total;
    if (!(den > 0.5 * (d0 + before.total))) {
      // Large cancellation; restart the bookkeeping from scratch.
      NormalizeL1(w);
      sums = kernels::MaskedL1Norms(*w, omega);
      num = sums.masked;
      den = sums.total;
    }
    current = den > 0 ? num / den : 0.0;
    return true;
  };

  for (int sweep = 0; sweep < sweeps; ++sweep) {
    bool improved = false;
    for (Index i = 0; i < m; ++i) {
      for (Index a = 0; a < r; ++a) {
        improved |= try_move(w->row(i).data(), omega.row(i).data(),
                             vcols.col(a).data(), n, 1);
      }
    }
    for (Index j = 0; j < n; ++j) {
      for (Index b = 0; b < r; ++b) {
        improved |= try_move(w->data() + j, omega.data() + j,
                             ucols.col(b).data(), m, n);
      }
    }
    NormalizeL1(w);
    sums = kernels::MaskedL1Norms(*w, omega);
    num = sums.masked;
    den = sums.total;
    current = den > 0 ? num / den : 0.0;
    if (!improved) break;
  }
  return current;
}

Index DetectRank(const Vector& singular_values) {
  if (singular_values.size() == 0 || singular_values(0) <= 0) return 0;
  const double cut = kRankTolerance * singular_values(0);
  Index rank = 0;
  while (rank < singular_values.size() && singular_values(rank) > cut) ++rank;
  return rank;
}

// Right singular vectors of a, padded to a full k x k orthogonal matrix;
// the trailing columns span the kernel.
Matrix RightBasis(const Matrix& a, Index* rank) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  *rank = DetectRank(svd.singularValues());
  return svd.matrixV();
}

double CheckedTolerance(const FactorPair& star) {
  return 1e-10 * std::max({1.0, star.x.norm(), star.y.norm()});
}

}  // namespace

double RestrictedRatio(const Matrix& w, const Mask& omega) {
  const kernels::MaskedL1 s = kernels::MaskedL1Norms(w, omega);
  return s.total > 0 ? s.masked / s.total : 0.0;
}

std::pair<double, double> BestBreakpointStep(const double* w, const bool* mask,
                                             const double* d, Index len,
                                             Index stride, double n0,
                                             double d0) {
  // Each |w_t + s d_t| is linear on either side of -w_t / d_t. Start left of
  // every breakpoint and flip terms one at a time.
  double num_a = n0, num_b = 0.0, den_a = d0, den_b = 0.0;
  std::vector<std::pair<double, Index>> points;
  points.reserve(static_cast<std::size_t>(len));
  double seg_total = 0.0, seg_masked = 0.0;
  for (Index t = 0; t < len; ++t) {
    const double wt = w[t * stride];
    const bool in = mask[t * stride];
    seg_total += std::abs(wt);
    if (in) seg_masked += std::abs(wt);
    if (d[t] == 0) {
      den_a += std::abs(wt);
      if (in) num_a += std::abs(wt);
      continue;
    }
    const double sg = Sign(d[t]);
    den_a -= sg * wt;
    den_b -= std::abs(d[t]);
    if (in) {
      num_a -= sg * wt;
      num_b -= std::abs(d[t]);
    }
    points.emplace_back(-wt / d[t], t);
  }
  const double total = d0 + seg_total;
  const double current = total > 0 ? (n0 + seg_masked) / total : 0.0;
  std::sort(points.begin(), points.end());

  double best_s = 0.0, best_value = current;
  const double guard = kDenominatorGuard * total;
  for (const auto& [s, t] : points) {
    const double den = den_a + den_b * s;
    if (den > guard) {
      const double value = (num_a + num_b * s) / den;
      if (value > best_value) {
        best_value = value;
        best_s = s;
      }
    }
    const double wt = w[t * stride];
    const double sg = Sign(d[t]);
    den_a += 2 * sg * wt;
    den_b += 2 * std::abs(d[t]);
    if (mask[t * stride]) {
      num_a += 2 * sg * wt;
      num_b += 2 * std::abs(d[t]);
    }
  }
  return {best_s, best_value};
}

RatioEstimate RestrictedRatioAscent(const Matrix& u, const Matrix& v,
                                    const Mask& omega,
                                    const RatioOptions& options) {
  if (options.restarts < 1) throw ArgumentError("restarts must be >= 1");
  if (options.iters < 0) throw ArgumentError("iters must be >= 0");
  const Index m = omega.rows(), n = omega.cols();
  CheckTangentBases(u, v, m, n);
  const Matrix mask = MaskAsMatrix(omega);

  std::vector<Candidate> candidates(static_cast<std::size_t>(options.restarts));
#pragma omp parallel for schedule(dynamic)
  for (int rs = 0; rs < options.restarts; ++rs) {
    Rng rng(MixSeed(options.seed, static_cast<std::uint64_t>(rs)));
    Candidate& c = candidates[static_cast<std::size_t>(rs)];
    c.w = StartingPoint(u, v, omega, rs, &rng);
    c.value = Ascend(u, v, omega, mask, options.iters, &c.w);
    c.restart = rs;
  }
  if (options.warm_start) {
    Candidate c;
    c.w = Tangent(*options.warm_start, u, v);
    if (NormalizeL1(&c.w)) {
      c.value = Ascend(u, v, omega, mask, options.iters, &c.w);
      c.restart = -1;
      candidates.insert(candidates.begin(), std::move(c));
    }
  }

  if (options.polish) {
    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return candidates[a].value > candidates[b].value;
                     });
    const std::size_t top =
        options.polish_top > 0
            ? std::min(order.size(),
                       static_cast<std::size_t>(options.polish_top))
            : order.size();
#pragma omp parallel for schedule(dynamic)
    for (std::size_t q = 0; q < top; ++q) {
      Candidate& c = candidates[order[q]];
      const double polished =
          Polish(u, v, omega, options.polish_sweeps, &c.w);
      c.value = std::max(c.value, polished);
    }
  }

  // Reproject onto T, renormalize and rescore so that the reported value is
  // attained by the returned witness.
  RatioEstimate out;
  out.restarts_used = options.restarts;
  out.value = -1.0;
  for (Candidate& c : candidates) {
    Matrix w = Tangent(c.w, u, v);
    if (!NormalizeL1(&w)) continue;
    const double value = RestrictedRatio(w, omega);
    if (value > out.value) {
      out.value = value;
      out.witness = std::move(w);
      out.best_restart = c.restart;
    }
  }
  if (out.value < 0) {
    out.value = 0.0;
    out.witness = Matrix::Zero(m, n);
  }
  return out;
}

DiameterReport DiameterCheck(const Matrix& u, const Matrix& v, double mu,
                             int samples, std::uint64_t seed,
                             bool include_basis_images) {
  if (samples < 1) throw ArgumentError("samples must be >= 1");
  const Index m = u.rows(), n = v.rows(), r = u.cols();
  CheckTangentBases(u, v, m, n);
  DiameterReport rep;
  rep.samples = samples;
  const double inf_bound = mu * r / static_cast<double>(m) +
                           mu * r / static_cast<double>(n);
  rep.inf_bound = inf_bound;
  rep.fro_bound = std::sqrt(inf_bound);

  std::vector<double> fro(static_cast<std::size_t>(samples));
  std::vector<double> inf(static_cast<std::size_t>(samples));
#pragma omp parallel for schedule(static)
  for (int q = 0; q < samples; ++q) {
    Rng rng(MixSeed(seed, static_cast<std::uint64_t>(q)));
    const Matrix h = rng.Gaussian(m, r);
    const Matrix k = rng.Gaussian(n, r);
    Matrix w = h * v.transpose() + u * k.transpose();
    NormalizeL1(&w);
    fro[static_cast<std::size_t>(q)] = w.norm();
    inf[static_cast<std::size_t>(q)] = MaxAbs(w);
  }
  for (int q = 0; q < samples; ++q) {
    const double f = fro[static_cast<std::size_t>(q)];
    const double i = inf[static_cast<std::size_t>(q)];
    rep.max_fro_ratio = std::max(rep.max_fro_ratio, f / rep.fro_bound);
    rep.max_inf_ratio = std::max(rep.max_inf_ratio, i / rep.inf_bound);
    if (f > rep.fro_bound) ++rep.fro_violations;
    if (i > rep.inf_bound) ++rep.inf_violations;
  }

  if (include_basis_images) {
    // P_T(E_ij) = u_i e_j^T + e_i v_j^T - u_i v_j^T with u_i = U U_i^T.
    const Matrix pu = u * u.transpose();
    const Matrix pv = v * v.transpose();
    for (Index i = 0; i < m; ++i) {
      for (Index j = 0; j < n; ++j) {
        double l1 = 0.0, linf = 0.0, fro2 = 0.0;
        for (Index a = 0; a < m; ++a) {
          const double ua = pu(a, i);
          for (Index b = 0; b < n; ++b) {
            double e = -ua * pv(b, j);
            if (b == j) e += ua;
            if (a == i) e += pv(b, j);
            const double ae = std::abs(e);
            l1 += ae;
            fro2 += e * e;
            linf = std::max(linf, ae);
          }
        }
        if (l1 == 0) continue;
        const double fr = std::sqrt(fro2) / l1 / rep.fro_bound;
        const double ir = linf / l1 / rep.inf_bound;
        if (fr > rep.basis_max_fro_ratio) {
          rep.basis_max_fro_ratio = fr;
          rep.basis_argmax = {i, j};
        }
        rep.basis_max_inf_ratio = std::max(rep.basis_max_inf_ratio, ir);
      }
    }
  }
  return rep;
}

FactorPair TrueFactorization(const Matrix& u, const Vector& sigma,
                             const Matrix& v, Index k, std::uint64_t seed,
                             bool balanced) {
  const Index r = u.cols();
  if (v.cols() != r || sigma.size() != r) {
    throw ArgumentError("U, sigma and V disagree on the rank");
  }
  if (k < r) throw ArgumentError("search rank k must be >= r");
  const Vector root = sigma.cwiseSqrt();
  Matrix x = Matrix::Zero(u.rows(), k);
  Matrix y = Matrix::Zero(v.rows(), k);
  x.leftCols(r) = u * root.asDiagonal();
  y.leftCols(r) = v * root.asDiagonal();
  if (balanced) return {x, y};

  Rng rng(seed);
  Eigen::HouseholderQR<Matrix> q1(rng.Gaussian(k, k));
  Eigen::HouseholderQR<Matrix> q2(rng.Gaussian(k, k));
  Vector diag(k);
  for (Index t = 0; t < k; ++t) diag(t) = 0.5 + 1.5 * rng.Uniform01();
  const Matrix a = q1.householderQ();
  const Matrix b = q2.householderQ();
  const Matrix g = a * diag.asDiagonal() * b;
  const Matrix g_inv_t = a * diag.cwiseInverse().asDiagonal() * b;
  return {x * g, y * g_inv_t};
}

SaddleDirection ComputeSaddleDirection(
    const FactorPair& star, const Matrix& s,
    std::optional<std::pair<Index, Index>> pivot) {
  const Index m = star.x.rows(), n = star.y.rows(), k = star.x.cols();
  if (star.y.cols() != k || s.rows() != m || s.cols() != n) {
    throw ArgumentError("factor and corruption shapes disagree");
  }
  Index rank_x = 0, rank_y = 0;
  const Matrix ux = RightBasis(star.x, &rank_x);
  const Matrix uy = RightBasis(star.y, &rank_y);
  if (rank_x != rank_y) {
    throw PreconditionError("factors have different ranks");
  }
  const Index r = rank_x;
  if (r < 1 || k <= r) {
    throw PreconditionError("search rank must exceed the factor rank");
  }

  std::pair<Index, Index> ij{-1, -1};
  if (pivot) {
    ij = *pivot;
    if (ij.first < 0 || ij.first >= m || ij.second < 0 || ij.second >= n) {
      throw ArgumentError("pivot out of range");
    }
    if (s(ij.first, ij.second) == 0) {
      throw ArgumentError("pivot must be a corrupted entry");
    }
  } else {
    for (Index i = 0; i < m && ij.first < 0; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (s(i, j) != 0) {
          ij = {i, j};
          break;
        }
      }
    }
    if (ij.first < 0) throw PreconditionError("corruption matrix is zero");
  }

  const Index q = k - r;
  const Matrix rot = uy.transpose() * ux;
  const Matrix r22 = rot.bottomRightCorner(q, q);
  Eigen::JacobiSVD<Matrix> svd(r22, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double top = svd.singularValues()(0);
  if (!(top > 1e-12)) {
    throw NumericError("kernel overlap block is numerically zero");
  }
  const Vector w = svd.matrixV().col(0);
  const Vector r22w = r22 * w;
  const Vector z = r22w / r22w.squaredNorm();
  const double alpha = 1.0 / (std::sqrt(2.0) * z.norm());
  const double beta = 1.0 / std::sqrt(2.0);
  const double sg = s(ij.first, ij.second) > 0 ? 1.0 : -1.0;

  Matrix h_red = Matrix::Zero(m, k);
  Matrix k_red = Matrix::Zero(n, k);
  h_red.row(ij.first).tail(q) = alpha * sg * z.transpose();
  k_red.row(ij.second).tail(q) = beta * w.transpose();

  SaddleDirection out;
  out.h = h_red * uy.transpose();
  out.k = k_red * ux.transpose();
  out.gamma = alpha * beta;
  out.t0 = std::sqrt(std::abs(s(ij.first, ij.second)) / out.gamma);
  out.pivot = ij;
  out.rank = r;

  const double unit = out.h.squaredNorm() + out.k.squaredNorm();
  const double linear =
      MaxAbs(out.h * star.y.transpose() + star.x * out.k.transpose());
  Matrix expected = Matrix::Zero(m, n);
  expected(ij.first, ij.second) = out.gamma * sg;
  const double quadratic = MaxAbs(out.h * out.k.transpose() - expected);
  if (std::abs(unit - 1.0) > 1e-12 || linear > CheckedTolerance(star) ||
      quadratic > 1e-10) {
    std::ostringstream msg;
    msg << "descent direction failed its checks: |norm^2 - 1| = "
        << std::abs(unit - 1.0) << ", first-order term " << linear
        << ", second-order mismatch " << quadratic;
    throw NumericError(msg.str());
  }
  return out;
}

double GammaFromKernels(const FactorPair& star) {
  const Index k = star.x.cols();
  auto kernel = [k](const Matrix& a, Index* rank) {
    Eigen::ColPivHouseholderQR<Matrix> qr(a.rows() > 0 ? a.transpose()
                                                       : Matrix(k, 0));
    qr.setThreshold(kRankTolerance);
    *rank = qr.rank();
    const Matrix q = qr.householderQ();
    return Matrix(q.rightCols(k - *rank));
  };
  Index rx = 0, ry = 0;
  const Matrix nx = kernel(star.x, &rx);
  const Matrix ny = kernel(star.y, &ry);
  if (rx != ry || rx >= k) {
    throw PreconditionError("factors must share a rank below k");
  }
  Eigen::JacobiSVD<Matrix> svd(ny.transpose() * nx);
  return 0.5 * svd.singularValues()(0);
}

void ProjectNormal(const FactorPair& star, Matrix* h, Matrix* k) {
  // Minimizes ||H - X A||^2 + ||K + Y A^T||^2 over A, i.e. solves
  // X^T X A + A Y^T Y = X^T H - K^T Y.
  const Matrix gx = star.x.transpose() * star.x;
  const Matrix gy = star.y.transpose() * star.y;
  Eigen::SelfAdjointEigenSolver<Matrix> ex(gx);
  Eigen::SelfAdjointEigenSolver<Matrix> ey(gy);
  const Matrix rhs = star.x.transpose() * *h - k->transpose() * star.y;
  Matrix c = ex.eigenvectors().transpose() * rhs * ey.eigenvectors();
  for (Index a = 0; a < c.rows(); ++a) {
    for (Index b = 0; b < c.cols(); ++b) {
      const double denom = ex.eigenvalues()(a) + ey.eigenvalues()(b);
      c(a, b) = denom > 0 ? c(a, b) / denom : 0.0;
    }
  }
  const Matrix sol = ex.eigenvectors() * c * ey.eigenvectors().transpose();
  *h -= star.x * sol;
  *k += star.y * sol.transpose();
}

double DirectionalGrowth(const FactorPair& star, const Matrix& m,
                         const Matrix& h, const Matrix& k, double t) {
  const double f0 = Objective(star, m);
  const FactorPair moved{star.x + t * h, star.y + t * k};
  return (Objective(moved, m) - f0) / t;
}

SharpnessReport SharpnessProbe(const FactorPair& star, const Matrix& m,
                               const SharpnessOptions& options) {
  if (!(options.eps_hat > 0 && options.eps_hat < 1)) {
    throw ArgumentError("eps_hat must lie in (0, 1)");
  }
  if (options.directions < 1) throw ArgumentError("directions must be >= 1");
  if (options.t_grid.empty()) throw ArgumentError("t_grid is empty");
  for (double t : options.t_grid) {
    if (!(t > 0)) throw ArgumentError("t_grid values must be positive");
  }
  Eigen::JacobiSVD<Matrix> sx(star.x);
  Eigen::JacobiSVD<Matrix> sy(star.y);
  const Index k = star.x.cols();
  if (DetectRank(sx.singularValues()) != k ||
      DetectRank(sy.singularValues()) != k) {
    throw ArgumentError("sharpness probe needs k = r (full-rank factors)");
  }

  SharpnessReport rep;
  rep.eps_hat = options.eps_hat;
  rep.sigma_min =
      std::min(sx.singularValues()(k - 1), sy.singularValues()(k - 1));
  rep.floor = options.eps_hat / 8.0 * rep.sigma_min;
  rep.t_grid = options.t_grid;
  rep.directions = options.directions;
  const std::size_t nt = options.t_grid.size();
  const auto smallest = static_cast<std::size_t>(
      std::min_element(options.t_grid.begin(), options.t_grid.end()) -
      options.t_grid.begin());

  std::vector<double> ratios(static_cast<std::size_t>(options.directions) *
                             nt);
#pragma omp parallel for schedule(dynamic)
  for (int d = 0; d < options.directions; ++d) {
    Rng rng(MixSeed(options.seed, static_cast<std::uint64_t>(d)));
    Matrix h = rng.Gaussian(star.x.rows(), k);
    Matrix kk = rng.Gaussian(star.y.rows(), k);
    ProjectNormal(star, &h, &kk);
    const double norm = std::sqrt(h.squaredNorm() + kk.squaredNorm());
    h /= norm;
    kk /= norm;
    for (std::size_t q = 0; q < nt; ++q) {
      ratios[static_cast<std::size_t>(d) * nt + q] =
          DirectionalGrowth(star, m, h, kk, options.t_grid[q]);
    }
  }
  rep.min_ratio.assign(nt, std::numeric_limits<double>::infinity());
  for (int d = 0; d < options.directions; ++d) {
    for (std::size_t q = 0; q < nt; ++q) {
      const double value = ratios[static_cast<std::size_t>(d) * nt + q];
      rep.min_ratio[q] = std::min(rep.min_ratio[q], value);
      if (q == smallest && value < rep.floor) ++rep.violations_at_smallest_t;
    }
  }
  return rep;
}

OverfitReport OverfitDemo(const Matrix& l, Index k, Index column) {
  const Index m = l.rows(), n = l.cols();
  if (column < 0 || column >= n) throw ArgumentError("column out of range");
  if (k < 1 || k > std::min(m, n)) throw ArgumentError("k out of range");
  if (l.col(column).cwiseAbs().maxCoeff() == 0) {
    throw ArgumentError("selected column of L is zero");
  }
  OverfitReport rep;
  rep.column = column;
  rep.s = Matrix::Zero(m, n);
  rep.s.col(column) = -l.col(column);
  rep.omega = Mask::Constant(m, n, false);
  for (Index i = 0; i < m; ++i) rep.omega(i, column) = l(i, column) != 0;
  rep.m = l + rep.s;
  rep.sparse_l1 = kernels::L1Norm(rep.s);

  Eigen::BDCSVD<Matrix> svd(rep.m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector root = svd.singularValues().head(k).cwiseSqrt();
  rep.witness.x = svd.matrixU().leftCols(k) * root.asDiagonal();
  rep.witness.y = svd.matrixV().leftCols(k) * root.asDiagonal();
  rep.witness_objective = Objective(rep.witness, rep.m);
  return rep;
}

}  // namespace rpca
