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

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace rpca {
namespace {

double OrthoDeviation(const Matrix& q) {
  return MaxAbs(q.transpose() * q -
                Matrix::Identity(q.cols(), q.cols()));
}

bool BitEqual(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data(), b.data(), sizeof(double) * a.size()) == 0;
}

TEST(GenerateLowRank, SatisfiesInstanceInvariants) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const LowRank lr = GenerateLowRank(40, 30, 4, 2.0, seed);
    ASSERT_EQ(lr.sigma.size(), 4);
    EXPECT_LE(OrthoDeviation(lr.u), 1e-12);
    EXPECT_LE(OrthoDeviation(lr.v), 1e-12);
    for (Index i = 0; i < 4; ++i) EXPECT_GT(lr.sigma(i), 0.0);
    for (Index i = 1; i < 4; ++i) EXPECT_LE(lr.sigma(i), lr.sigma(i - 1));
    const Matrix rebuilt = lr.u * lr.sigma.asDiagonal() * lr.v.transpose();
    EXPECT_LE(MaxAbs(rebuilt - lr.l), 1e-12 * MaxAbs(lr.l));
    EXPECT_GE(lr.mu, 1.0 - 1e-12);
    EXPECT_LE(lr.mu, 40.0 / 4.0 + 1e-12);
  }
}

TEST(GenerateLowRank, EntriesHaveVarianceScaleSquared) {
  const LowRank lr = GenerateLowRank(200, 200, 8, 3.0, 11);
  const double var = lr.l.squaredNorm() / lr.l.size();
  EXPECT_NEAR(var / 9.0, 1.0, 0.15);
}

TEST(GenerateLowRank, FullRankSquareCaseHasMuAtLeastOne) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_GE(GenerateLowRank(3, 3, 3, 1.0, seed).mu, 1.0 - 1e-12);
  }
}

TEST(GenerateLowRank, OverrideHookWithSingleRowGivesMuTwo) {
  const auto unit = [](std::uint64_t, Matrix* a, Matrix* b) {
    *a << 1.0, 0.0;
    *b << 1.0, 0.0;
  };
  const LowRank lr = GenerateLowRank(2, 2, 1, 1.0, 0, unit);
  EXPECT_DOUBLE_EQ(lr.mu, 2.0);
}

TEST(GenerateLowRank, RankDeficientOverrideIsRejected) {
  const auto flat = [](std::uint64_t, Matrix* a, Matrix* b) {
    a->setOnes();
    b->setOnes();
  };
  EXPECT_THROW(GenerateLowRank(4, 4, 2, 1.0, 0, flat), ArgumentError);
}

TEST(GenerateLowRank, DimensionViolationIsAnArgumentError) {
  EXPECT_THROW(GenerateLowRank(3, 5, 4, 1.0, 0), ArgumentError);
  EXPECT_THROW(GenerateLowRank(3, 5, 0, 1.0, 0), ArgumentError);
  EXPECT_THROW(GenerateLowRank(3, 5, 2, 0.0, 0), ArgumentError);
}

// Measured maximum over seeds 0..99 is 3.18.
TEST(GenerateLowRank, MuRegressionBoundAtHundredByHundred) {
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    worst = std::max(worst, GenerateLowRank(100, 100, 10, 1.0, seed).mu);
  }
  RecordProperty("max_mu", std::to_string(worst));
  EXPECT_LE(worst, 3.5);
}

TEST(Incoherence, CoordinateBasisGivesMOverR) {
  const Matrix u = Matrix::Identity(12, 3);
  const Matrix v = Matrix::Identity(12, 3);
  EXPECT_DOUBLE_EQ(Incoherence(u, v), 4.0);
}

TEST(Incoherence, FlatVectorsGiveOne) {
  const Matrix u = Matrix::Constant(9, 1, 1.0 / 3.0);
  const Matrix v = Matrix::Constant(16, 1, 0.25);
  EXPECT_NEAR(Incoherence(u, v), 1.0, 1e-15);
}

TEST(Incoherence, RandomOrthonormalBasesStayInRange) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const double mu =
        Incoherence(testing::RandomOrthonormal(100, 5, 2 * seed),
                    testing::RandomOrthonormal(100, 5, 2 * seed + 1));
    EXPECT_GE(mu, 1.0);
    EXPECT_LE(mu, 10.0);
  }
}

TEST(Incoherence, NonOrthonormalInputReportsDeviation) {
  Matrix u = Matrix::Identity(5, 2);
  u(0, 0) = 1.5;
  try {
    Incoherence(u, Matrix::Identity(5, 2));
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("1.25"), std::string::npos)
        << e.what();
  }
}

TEST(Incoherence, InvariantToScalingOfL) {
  const LowRank lr = GenerateLowRank(30, 20, 3, 1.0, 5);
  for (double c : {-2.5, 1e-3, 7.0}) {
    const LowRank scaled = LowRankFromMatrix(c * lr.l, 3);
    EXPECT_NEAR(scaled.mu, lr.mu, 1e-10);
  }
}

TEST(GenerateSparse, TinyProbabilityGivesEmptySupport) {
  const SparsePart sp = GenerateSparse(10, 10, 1e-9, MagnitudeModel{}, 3);
  EXPECT_EQ(sp.omega.count(), 0);
  EXPECT_EQ(MaxAbs(sp.s), 0.0);
}

TEST(GenerateSparse, SupportSizeWithinFiveSigma) {
  const double sd = std::sqrt(1e4 * 0.1 * 0.9);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SparsePart sp = GenerateSparse(100, 100, 0.1, MagnitudeModel{}, seed);
    EXPECT_LE(std::abs(static_cast<double>(sp.omega.count()) - 1000.0),
              5 * sd);
  }
}

TEST(GenerateSparse, RademacherValuesArePlusMinusC) {
  const MagnitudeModel mag{MagnitudeModel::Kind::kRademacher, 2.5};
  const SparsePart sp = GenerateSparse(30, 30, 0.3, mag, 9);
  bool saw_pos = false, saw_neg = false;
  for (Index i = 0; i < sp.s.size(); ++i) {
    if (!sp.omega.data()[i]) continue;
    const double x = sp.s.data()[i];
    EXPECT_TRUE(x == 2.5 || x == -2.5) << x;
    saw_pos |= x > 0;
    saw_neg |= x < 0;
  }
  EXPECT_TRUE(saw_pos && saw_neg);
}

TEST(GenerateSparse, SupportMatchesNonzerosAndUniformBound) {
  const MagnitudeModel mag{MagnitudeModel::Kind::kUniform, 4.0};
  const SparsePart sp = GenerateSparse(50, 40, 0.2, mag, 1);
  for (Index i = 0; i < sp.s.size(); ++i) {
    const double x = sp.s.data()[i];
    if (sp.omega.data()[i]) {
      EXPECT_NE(x, 0.0);
      EXPECT_LE(std::abs(x), 4.0);
    } else {
      EXPECT_EQ(x, 0.0);
    }
  }
}

TEST(GenerateSparse, ProbabilityOutsideOpenIntervalIsRejected) {
  for (double p : {0.0, 1.0, -0.1, 1.5}) {
    EXPECT_THROW(GenerateSparse(5, 5, p, MagnitudeModel{}, 0), ArgumentError);
  }
}

TEST(MagnitudeModel, ParsesKnownNames) {
  EXPECT_EQ(MagnitudeModel::Parse("uniform", 1).kind,
            MagnitudeModel::Kind::kUniform);
  EXPECT_EQ(MagnitudeModel::Parse("rademacher", 1).Name(), "rademacher");
  EXPECT_THROW(MagnitudeModel::Parse("cauchy", 1), ArgumentError);
}

TEST(Assemble, TrivialCases) {
  Rng rng(4);
  const Matrix l = rng.Gaussian(4, 6);
  const Matrix s = rng.Gaussian(4, 6);
  const Matrix zero = Matrix::Zero(4, 6);
  EXPECT_TRUE(BitEqual(Assemble(l, zero), l));
  EXPECT_TRUE(BitEqual(Assemble(zero, s), s));
  EXPECT_EQ(MaxAbs(Assemble(l, -l)), 0.0);
  EXPECT_THROW(Assemble(l, Matrix::Zero(6, 4)), ArgumentError);
}

InstanceConfig SmallConfig(std::uint64_t seed) {
  InstanceConfig c;
  c.dims = Dims{30, 25, 3, 3};
  c.p = 0.1;
  c.seed = seed;
  return c;
}

TEST(GenerateInstance, SatisfiesInvariants) {
  const Instance inst = GenerateInstance(SmallConfig(2));
  EXPECT_TRUE(BitEqual(inst.m, inst.l + inst.s));
  for (Index i = 0; i < inst.s.size(); ++i) {
    EXPECT_EQ(inst.omega.data()[i], inst.s.data()[i] != 0.0);
  }
  const double mean_abs = inst.l.cwiseAbs().mean();
  EXPECT_NEAR(inst.magnitude.amplitude, 10.0 * mean_abs, 1e-12 * mean_abs);
  EXPECT_DOUBLE_EQ(inst.mu, Incoherence(inst.u, inst.v));
}

TEST(GenerateInstance, SameSeedIsBitIdentical) {
  const Instance a = GenerateInstance(SmallConfig(8));
  const Instance b = GenerateInstance(SmallConfig(8));
  EXPECT_TRUE(BitEqual(a.l, b.l));
  EXPECT_TRUE(BitEqual(a.s, b.s));
  EXPECT_TRUE(BitEqual(a.m, b.m));
  EXPECT_TRUE(a.omega == b.omega);
  const Instance c = GenerateInstance(SmallConfig(9));
  EXPECT_FALSE(BitEqual(a.m, c.m));
}

TEST(GenerateInstance, MuCapRejectsCoherentDraws) {
  InstanceConfig c = SmallConfig(0);
  c.mu_cap = 1.0;  // unattainable for Gaussian factors
  EXPECT_THROW(GenerateInstance(c), ArgumentError);
  const double natural = GenerateInstance(SmallConfig(0)).mu;
  c.mu_cap = natural + 1.0;
  EXPECT_LE(GenerateInstance(c).mu, natural + 1.0);
}

TEST(InstanceIo, RoundTripIsBitExact) {
  const std::string dir = testing::TempDir("model_io");
  const Instance a = GenerateInstance(SmallConfig(4));
  SaveInstance(a, dir);
  for (const char* f : {"meta.json", "L.bin", "S.bin", "M.bin", "omega.bin"}) {
    EXPECT_TRUE(std::filesystem::exists(dir + "/" + f)) << f;
  }
  EXPECT_EQ(std::filesystem::file_size(dir + "/omega.bin"), 30u * 25u);
  EXPECT_EQ(std::filesystem::file_size(dir + "/L.bin"), 30u * 25u * 8u);
  const Instance b = LoadInstance(dir);
  EXPECT_TRUE(BitEqual(a.l, b.l));
  EXPECT_TRUE(BitEqual(a.s, b.s));
  EXPECT_TRUE(BitEqual(a.m, b.m));
  EXPECT_TRUE(BitEqual(a.u, b.u));
  EXPECT_TRUE(BitEqual(a.v, b.v));
  EXPECT_TRUE(a.omega == b.omega);
  EXPECT_EQ(a.mu, b.mu);
  EXPECT_EQ(a.p, b.p);
  EXPECT_EQ(a.seed, b.seed);
  EXPECT_EQ(a.magnitude.amplitude, b.magnitude.amplitude);
  std::filesystem::remove_all(dir);
}

TEST(InstanceIo, MissingOrTruncatedFilesAreIoErrors) {
  EXPECT_THROW(LoadInstance("/nonexistent/rpca/instance"), IoError);
  const std::string dir = testing::TempDir("model_trunc");
  SaveInstance(GenerateInstance(SmallConfig(1)), dir);
  std::filesystem::resize_file(dir + "/S.bin", 16);
  EXPECT_THROW(LoadInstance(dir), IoError);
  std::ofstream(dir + "/meta.json") << "{not json";
  EXPECT_THROW(LoadInstance(dir), IoError);
  std::filesystem::remove_all(dir);
}

TEST(MatrixBin, WrongSizeIsAnIoError) {
  const std::string dir = testing::TempDir("model_bin");
  const Matrix a = Matrix::Constant(3, 4, 1.25);
  WriteMatrixBin(a, dir + "/a.bin");
  EXPECT_TRUE(BitEqual(ReadMatrixBin(dir + "/a.bin", 3, 4), a));
  EXPECT_THROW(ReadMatrixBin(dir + "/a.bin", 4, 4), IoError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace rpca
