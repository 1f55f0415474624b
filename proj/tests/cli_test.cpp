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

#include "rpca/cli.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "rpca/model.hpp"
#include "test_util.hpp"

namespace rpca {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct CliRun {
  int code;
  std::string out, err;
};

CliRun Cli(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"rpca"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code =
      RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

json Summary(const fs::path& dir) {
  return json::parse(Slurp(dir / "summary.json"));
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = testing::TempDir(
        ::testing::UnitTest::GetInstance()->current_test_info()->name());
  }
  void TearDown() override { fs::remove_all(root_); }

  // Small regime instance written by the gen command.
  std::string Gen(const std::string& name, std::initializer_list<std::string>
                                               extra = {}) {
    const std::string dir = (fs::path(root_) / name).string();
    std::vector<std::string> args{"gen",
                                  "--out",
                                  dir,
                                  "--seed",
                                  "7",
                                  "--set",
                                  "model.m=40",
                                  "--set",
                                  "model.n=36",
                                  "--set",
                                  "model.r=2",
                                  "--set",
                                  "model.k=2",
                                  "--set",
                                  "model.p=0.05"};
    args.insert(args.end(), extra.begin(), extra.end());
    std::vector<const char*> argv{"rpca"};
    for (const auto& s : args) argv.push_back(s.c_str());
    std::ostringstream out, err;
    EXPECT_EQ(RunCli(static_cast<int>(argv.size()), argv.data(), out, err),
              kExitOk)
        << err.str();
    return dir;
  }

  std::string Path(const std::string& name) const {
    return (fs::path(root_) / name).string();
  }

  std::string root_;
};

TEST_F(CliTest, GenWritesSchemaAndSummary) {
  const CliRun r = Cli({"gen", "--out", Path("inst"), "--seed", "7", "--set",
                     "model.m=100", "--set", "model.n=100", "--set",
                     "model.r=10", "--set", "model.p=0.1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, Path("inst") + "/summary.json\n");
  for (const char* f : {"meta.json", "L.bin", "S.bin", "M.bin", "omega.bin"}) {
    EXPECT_TRUE(fs::exists(fs::path(Path("inst")) / f)) << f;
  }
  const json meta = json::parse(Slurp(fs::path(Path("inst")) / "meta.json"));
  EXPECT_EQ(meta["schema_version"], kSchemaVersion);
  EXPECT_EQ(meta["m"], 100);
  EXPECT_EQ(meta["r"], 10);
  EXPECT_EQ(meta["seed"], 7);
  EXPECT_EQ(meta["magnitude"]["model"], "uniform");
  const json summary = Summary(Path("inst"));
  EXPECT_EQ(summary["schema_version"], kSchemaVersion);
  EXPECT_EQ(summary["command"], "gen");
  EXPECT_EQ(summary["config"]["model"]["p"], "0.1");
  EXPECT_EQ(summary["config"]["solve"]["patience"], "10");
  EXPECT_TRUE(summary["timing"].contains("wall_seconds"));
}

TEST_F(CliTest, GenRoundTripMatchesLibrary) {
  const std::string dir = Gen("inst");
  InstanceConfig c;
  c.dims = Dims{40, 36, 2, 2};
  c.p = 0.05;
  c.seed = 7;
  const Instance expect = GenerateInstance(c);
  const Instance got = LoadInstance(dir);
  EXPECT_EQ(std::memcmp(expect.m.data(), got.m.data(),
                        sizeof(double) * expect.m.size()),
            0);
  EXPECT_TRUE(expect.omega == got.omega);
  EXPECT_EQ(expect.mu, got.mu);
}

TEST_F(CliTest, ConfigErrorsExitWithTwo) {
  EXPECT_EQ(Cli({"gen", "--out", Path("a"), "--set", "model.p=1.5"}).code,
            kExitConfig);
  EXPECT_EQ(Cli({"gen", "--out", Path("a"), "--set", "model.bogus=1"}).code,
            kExitConfig);
  EXPECT_EQ(Cli({"gen", "--out", Path("a"), "--set", "model.m"}).code,
            kExitConfig);
  EXPECT_EQ(Cli({"gen", "--out", Path("a"), "--set", "model.m=ten"}).code,
            kExitConfig);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitConfig);
  EXPECT_EQ(Cli({}).code, kExitConfig);
  EXPECT_EQ(Cli({"solve", "--out", Path("a")}).code, kExitConfig);
  std::ofstream(Path("bad.ini")) << "[model]\nunknown_key = 3\n";
  EXPECT_EQ(Cli({"gen", "--out", Path("a"), "--config", Path("bad.ini")}).code,
            kExitConfig);
}

TEST_F(CliTest, IoErrorsExitWithFour) {
  const CliRun r = Cli({"solve", "--instance", Path("missing"), "--out",
                     Path("s")});
  EXPECT_EQ(r.code, kExitIo);
  EXPECT_NE(r.err.find("I/O"), std::string::npos);
  EXPECT_EQ(Cli({"gen", "--out", Path("a"), "--config", Path("none.ini")}).code,
            kExitIo);
}

TEST_F(CliTest, ConfigFileAndOverridesCompose) {
  std::ofstream(Path("c.ini")) << "[model]\nm = 20\nn = 18\nr = 2\nk = 2\n"
                                  "p = 0.05\n[run]\nseed = 3\n";
  ASSERT_EQ(Cli({"gen", "--out", Path("g"), "--config", Path("c.ini"), "--set",
                 "model.n=22"})
                .code,
            kExitOk);
  const Instance inst = LoadInstance(Path("g"));
  EXPECT_EQ(inst.dims.m, 20);
  EXPECT_EQ(inst.dims.n, 22);
  EXPECT_EQ(inst.seed, 3u);
  ASSERT_EQ(Cli({"gen", "--out", Path("h"), "--config", Path("c.ini"), "--seed",
                 "9"})
                .code,
            kExitOk);
  EXPECT_EQ(LoadInstance(Path("h")).seed, 9u);
}

TEST_F(CliTest, SolveBothSolvers) {
  const std::string inst = Gen("inst");
  CliRun r = Cli({"solve", "--instance", inst, "--out", Path("sg"), "--set",
               "solve.target_rel_err=1e-6"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  json s = Summary(Path("sg"));
  EXPECT_EQ(s["result"]["status"], "target_reached");
  EXPECT_LE(s["result"]["rel_err"].get<double>(), 1e-6);
  const std::string trace = Slurp(fs::path(Path("sg")) / "trace.csv");
  EXPECT_EQ(trace.rfind("iter,objective,rel_err,step\n", 0), 0u);
  EXPECT_TRUE(fs::exists(fs::path(Path("sg")) / "X.bin"));

  r = Cli({"solve", "--instance", inst, "--out", Path("ialm"), "--solver",
           "ialm"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  s = Summary(Path("ialm"));
  EXPECT_EQ(s["result"]["solver"], "ialm");
  EXPECT_TRUE(s["result"]["converged"].get<bool>());
  EXPECT_TRUE(fs::exists(fs::path(Path("ialm")) / "trace.csv"));
}

TEST_F(CliTest, DivergenceExitsWithThree) {
  const std::string inst = Gen("inst");
  const CliRun r = Cli({"solve", "--instance", inst, "--out", Path("d"), "--set",
                     "solve.schedule=constant", "--set", "solve.step=100",
                     "--set", "solve.init_factor=1"});
  EXPECT_EQ(r.code, kExitNumeric);
  EXPECT_EQ(Summary(Path("d"))["result"]["status"], "diverged");
}

TEST_F(CliTest, CertifyRegimeAndCleanInstances) {
  const std::string inst = Gen("inst");
  ASSERT_EQ(Cli({"certify", "--instance", inst, "--out", Path("c")}).code,
            kExitOk);
  json s = Summary(Path("c"));
  EXPECT_EQ(s["result"]["verdict"], "feasible");
  EXPECT_GE(s["result"]["best_eps"].get<double>(), 0.1);
  EXPECT_TRUE(s["result"]["critical"].get<bool>());
  EXPECT_EQ(s["result"]["runs"].size(), 4u);
  EXPECT_TRUE(fs::exists(fs::path(Path("c")) / "lambda.bin"));

  const std::string clean = Gen("clean", {"--set", "model.p=1e-12"});
  ASSERT_EQ(LoadInstance(clean).SupportSize(), 0);
  ASSERT_EQ(Cli({"certify", "--instance", clean, "--out", Path("cc")}).code,
            kExitOk);
  s = Summary(Path("cc"));
  EXPECT_EQ(s["result"]["best_eps"], 0.5);
  EXPECT_EQ(s["result"]["runs"][0]["iterations"], 1);
}

TEST_F(CliTest, CertifyDenseCorruptionIsReportedHonestly) {
  const std::string inst = Gen("dense", {"--set", "model.p=0.5"});
  ASSERT_EQ(Cli({"certify", "--instance", inst, "--out", Path("c"), "--set",
                 "certify.max_iter=2000"})
                .code,
            kExitOk);
  const json s = Summary(Path("c"));
  EXPECT_EQ(s["result"]["verdict"], "not_found_within_budget");
  EXPECT_EQ(s["result"]["best_eps"], 0.0);
  EXPECT_FALSE(s["result"].contains("critical"));
}

TEST_F(CliTest, LandscapeProbes) {
  const std::string inst = Gen("inst");
  ASSERT_EQ(Cli({"landscape", "--instance", inst, "--out", Path("ratio"),
                 "--probe", "ratio", "--set", "landscape.restarts=20",
                 "--set", "landscape.dump_witness=true"})
                .code,
            kExitOk);
  json s = Summary(Path("ratio"));
  EXPECT_LT(s["result"]["value"].get<double>(), 0.5);
  EXPECT_TRUE(fs::exists(fs::path(Path("ratio")) / "witness.bin"));

  ASSERT_EQ(Cli({"landscape", "--instance", inst, "--out", Path("diam"),
                 "--probe", "diameter", "--set", "landscape.samples=500"})
                .code,
            kExitOk);
  s = Summary(Path("diam"));
  EXPECT_EQ(s["result"]["fro_violations"], 0);
  EXPECT_EQ(s["result"]["inf_violations"], 0);

  ASSERT_EQ(Cli({"landscape", "--instance", inst, "--out", Path("saddle"),
                 "--probe", "saddle", "--set", "landscape.k=5"})
                .code,
            kExitOk);
  s = Summary(Path("saddle"));
  EXPECT_NEAR(s["result"]["gamma"].get<double>(), 0.5, 1e-10);
  EXPECT_LE(s["result"]["max_rel_dev"].get<double>(), 1e-10);

  ASSERT_EQ(Cli({"landscape", "--instance", inst, "--out", Path("sharp"),
                 "--probe", "sharpness", "--set", "landscape.directions=20"})
                .code,
            kExitOk);
  s = Summary(Path("sharp"));
  EXPECT_EQ(s["result"]["violations_at_smallest_t"], 0);
  EXPECT_GT(s["result"]["eps_hat"].get<double>(), 0.0);

  ASSERT_EQ(Cli({"landscape", "--instance", inst, "--out", Path("over"),
                 "--probe", "overfit", "--set", "landscape.overfit_iters=3000"})
                .code,
            kExitOk);
  s = Summary(Path("over"));
  EXPECT_LE(s["result"]["solver_fraction"].get<double>(), 0.01);

  EXPECT_EQ(Cli({"landscape", "--instance", inst, "--out", Path("x"),
                 "--probe", "sharpness", "--set", "landscape.k=3"})
                .code,
            kExitConfig);
  EXPECT_EQ(Cli({"landscape", "--instance", inst, "--out", Path("x"),
                 "--probe", "tea"})
                .code,
            kExitConfig);
}

TEST_F(CliTest, PhaseWritesGridFiles) {
  const CliRun r = Cli({"phase", "--out", Path("ph"), "--solver", "ialm",
                     "--set", "phase.m=30", "--set", "phase.n=24", "--set",
                     "phase.k=6", "--set", "phase.ranks=1,4", "--set",
                     "phase.ps=0.05,0.4", "--set", "phase.trials=2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json s = Summary(Path("ph"));
  EXPECT_EQ(s["result"]["solver"], "ialm");
  EXPECT_EQ(s["result"]["success_rate"].size(), 2u);
  const std::string csv = Slurp(fs::path(Path("ph")) / "phase.csv");
  EXPECT_EQ(csv.rfind("rank,p,success_rate,successes,trials\n", 0), 0u);
  EXPECT_EQ(Slurp(fs::path(Path("ph")) / "phase.pgm").rfind("P5\n32 32\n", 0),
            0u);
}

TEST_F(CliTest, RerunsAreByteIdenticalApartFromTiming) {
  const std::string inst = Gen("inst");
  auto run = [&](const std::string& out) {
    EXPECT_EQ(Cli({"solve", "--instance", inst, "--out", Path(out), "--set",
                   "solve.max_iters=200"})
                  .code,
              kExitOk);
    EXPECT_EQ(Cli({"certify", "--instance", inst, "--out", Path(out + "c")})
                  .code,
              kExitOk);
  };
  run("a");
  run("b");
  for (const char* f : {"trace.csv", "X.bin", "Y.bin"}) {
    EXPECT_EQ(Slurp(fs::path(Path("a")) / f), Slurp(fs::path(Path("b")) / f))
        << f;
  }
  EXPECT_EQ(Slurp(fs::path(Path("ac")) / "lambda.bin"),
            Slurp(fs::path(Path("bc")) / "lambda.bin"));
  for (const char* d : {"a", "ac"}) {
    json x = Summary(Path(d));
    json y = Summary(Path(std::string("b") + (d + 1)));
    x.erase("timing");
    y.erase("timing");
    EXPECT_EQ(x.dump(), y.dump()) << d;
  }
}

}  // namespace
}  // namespace rpca
