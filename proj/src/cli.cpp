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

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <boost/algorithm/string.hpp>
#include <boost/lexical_cast.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <json.hpp>

#include "rpca/baselines.hpp"
#include "rpca/certificate.hpp"
#include "rpca/experiments.hpp"
#include "rpca/kernels.hpp"
#include "rpca/landscape.hpp"
#include "rpca/model.hpp"
#include "rpca/subgrad.hpp"

namespace rpca {
namespace {

namespace fs = std::filesystem;
namespace pt = boost::property_tree;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

// "a,b,c" with the default number formatting of the config file.
template <typename T>
std::string JoinList(const std::vector<T>& values) {
  std::ostringstream s;
  s.precision(17);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s << ',';
    s << values[i];
  }
  return s.str();
}

struct Shared {
  std::string config_path;
  std::vector<std::string> sets;
  std::string out = "out";
  std::string instance;
  long long seed = -1;
};

void WriteJson(const json& doc, const fs::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << doc.dump(2) << "\n";
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

json ConfigJson(const Config& cfg) {
  json out = json::object();
  for (const auto& [section, body] : cfg.tree()) {
    json sec = json::object();
    for (const auto& [key, value] : body) sec[key] = value.data();
    out[section] = sec;
  }
  return out;
}

fs::path PrepareOut(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir + "': " + ec.message());
  return fs::path(dir);
}

void WriteSummary(const fs::path& dir, const std::string& command,
                  const Config& cfg, json result, double seconds,
                  json timing = json::object()) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["config"] = ConfigJson(cfg);
  doc["result"] = std::move(result);
  timing["wall_seconds"] = seconds;
  doc["timing"] = std::move(timing);
  WriteJson(doc, dir / "summary.json");
}

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t RunSeed(const Config& cfg) {
  const long long seed = cfg.GetInt("run.seed");
  if (seed < 0) throw ArgumentError("run.seed must be nonnegative");
  return static_cast<std::uint64_t>(seed);
}

Instance RequireInstance(const Shared& shared) {
  if (shared.instance.empty()) {
    throw ArgumentError("--instance is required for this command");
  }
  return LoadInstance(shared.instance);
}

StepSchedule ScheduleFromConfig(const Config& cfg, Index m, Index n) {
  const std::string name = cfg.GetString("solve.schedule");
  double step = cfg.GetDouble("solve.step");
  if (step <= 0) step = DefaultInitialStep(m, n);
  StepSchedule schedule;
  if (name == "adaptive_halving") {
    schedule = AdaptiveHalvingStep{
        step, static_cast<int>(cfg.GetInt("solve.patience")),
        cfg.GetDouble("solve.factor")};
  } else if (name == "geometric") {
    schedule = GeometricStep{step, cfg.GetDouble("solve.decay")};
  } else if (name == "constant") {
    schedule = ConstantStep{step};
  } else {
    throw ArgumentError("unknown schedule '" + name + "'");
  }
  ValidateSchedule(schedule);
  return schedule;
}

json CertificateJson(const Certificate& c) {
  return {{"eps", c.eps},
          {"tol", c.tol},
          {"iterations", c.iterations},
          {"residual_subspace", c.residual_subspace},
          {"residual_box", c.residual_box},
          {"residual_sign", c.residual_sign},
          {"feasible", c.feasible},
          {"verdict", c.feasible ? "feasible" : "not_found_within_budget"}};
}

EpsSweep SweepFromConfig(const Config& cfg, const Instance& inst) {
  CertificateOptions opt;
  opt.tol = cfg.GetDouble("certify.tol");
  opt.max_iter = static_cast<int>(cfg.GetInt("certify.max_iter"));
  opt.dykstra = cfg.GetBool("certify.dykstra");
  std::vector<double> eps = cfg.GetDoubles("certify.eps_sweep");
  if (eps.empty()) throw ArgumentError("certify.eps_sweep is empty");
  return SweepEps(inst.u, inst.v, inst.s, inst.omega, eps, opt);
}

// ---------------------------------------------------------------------------

int CmdGen(const Config& cfg, const Shared& shared) {
  const auto start = Clock::now();
  InstanceConfig ic;
  ic.dims = {cfg.GetInt("model.m"), cfg.GetInt("model.n"),
             cfg.GetInt("model.k"), cfg.GetInt("model.r")};
  ic.p = cfg.GetDouble("model.p");
  ic.scale = cfg.GetDouble("model.scale");
  ic.seed = RunSeed(cfg);
  ic.magnitude_scale = cfg.GetDouble("model.magnitude_scale");
  ic.magnitude_kind =
      MagnitudeModel::Parse(cfg.GetString("model.magnitude"), 1.0).kind;
  const double cap = cfg.GetDouble("model.mu_cap");
  if (cap > 0) ic.mu_cap = cap;
  const Instance inst = GenerateInstance(ic);

  const fs::path dir = PrepareOut(shared.out);
  SaveInstance(inst, shared.out);
  json result = {{"instance_dir", shared.out},
                 {"mu", inst.mu},
                 {"support_size", inst.SupportSize()},
                 {"sigma_max", inst.sigma(0)},
                 {"sigma_min", inst.sigma(inst.sigma.size() - 1)},
                 {"magnitude_amplitude", inst.magnitude.amplitude}};
  WriteSummary(dir, "gen", cfg, result, Seconds(start));
  return kExitOk;
}

int CmdSolve(const Config& cfg, const Shared& shared) {
  const auto start = Clock::now();
  const Instance inst = RequireInstance(shared);
  const Solver solver = ParseSolver(cfg.GetString("solve.solver"));
  const fs::path dir = PrepareOut(shared.out);
  json result;
  int code = kExitOk;
  const Index m = inst.dims.m, n = inst.dims.n;
  if (solver == Solver::kSubgrad) {
    Index k = cfg.GetInt("solve.k");
    if (k <= 0) k = inst.dims.k;
    SolveOptions opt;
    opt.schedule = ScheduleFromConfig(cfg, m, n);
    opt.init_scale =
        DefaultInitScale(inst.m, k, cfg.GetDouble("solve.init_factor"));
    opt.max_iters = static_cast<int>(cfg.GetInt("solve.max_iters"));
    opt.target_rel_err = cfg.GetDouble("solve.target_rel_err");
    opt.normalized = cfg.GetBool("solve.normalized");
    opt.seed = RunSeed(cfg);
    const SolveResult res = Solve(inst.m, k, opt, &inst.l);
    WriteTraceCsv(res.trace, (dir / "trace.csv").string());
    WriteMatrixBin(res.pair.x, (dir / "X.bin").string());
    WriteMatrixBin(res.pair.y, (dir / "Y.bin").string());
    result = {{"solver", "subgrad"},
              {"k", k},
              {"schedule", ScheduleName(opt.schedule)},
              {"init_scale", opt.init_scale},
              {"status", StatusName(res.status)},
              {"iterations", res.trace.iterations},
              {"objective", res.trace.objective.back()},
              {"rel_err", res.trace.rel_err.back()},
              {"sparse_l1", kernels::L1Norm(inst.s)}};
    if (res.status == SolveStatus::kDiverged) code = kExitNumeric;
  } else {
    PcpOptions opt;
    opt.lambda = cfg.GetDouble("solve.ialm_lambda");
    opt.tol = cfg.GetDouble("solve.ialm_tol");
    opt.max_iter = static_cast<int>(cfg.GetInt("solve.ialm_max_iter"));
    const PcpResult res = SolvePcpIalm(inst.m, opt, &inst.l);
    SolveTrace trace;
    trace.objective = res.objective_history;
    trace.rel_err = res.rel_err_history;
    trace.step = res.threshold_history;
    trace.iterations = res.iterations;
    WriteTraceCsv(trace, (dir / "trace.csv").string());
    WriteMatrixBin(res.l_hat, (dir / "L_hat.bin").string());
    WriteMatrixBin(res.s_hat, (dir / "S_hat.bin").string());
    const double rel = (res.l_hat - inst.l).norm() / inst.l.norm();
    result = {{"solver", "ialm"},
              {"lambda", opt.lambda > 0 ? opt.lambda : DefaultPcpLambda(m, n)},
              {"iterations", res.iterations},
              {"converged", res.converged},
              {"primal_residual", res.primal_residual},
              {"rel_err", rel}};
    if (!std::isfinite(rel)) code = kExitNumeric;
  }
  WriteSummary(dir, "solve", cfg, result, Seconds(start));
  return code;
}

int CmdCertify(const Config& cfg, const Shared& shared) {
  const auto start = Clock::now();
  const Instance inst = RequireInstance(shared);
  const fs::path dir = PrepareOut(shared.out);
  const EpsSweep sweep = SweepFromConfig(cfg, inst);
  json runs = json::array();
  json times = json::array();
  const Certificate* best = nullptr;
  for (const Certificate& c : sweep.runs) {
    runs.push_back(CertificateJson(c));
    times.push_back(c.wall_seconds);
    if (c.feasible && (!best || c.eps > best->eps)) best = &c;
  }
  json result = {{"runs", runs},
                 {"best_eps", sweep.best_eps},
                 {"verdict", best ? "feasible" : "not_found_within_budget"}};
  if (best) {
    FactorPair star{inst.u * inst.sigma.asDiagonal(), inst.v};
    const double tol = cfg.GetDouble("certify.criticality_tol");
    result["critical"] = VerifyCriticality(star, *best, tol, &inst.l);
    WriteMatrixBin(best->lambda, (dir / "lambda.bin").string());
  }
  WriteSummary(dir, "certify", cfg, result, Seconds(start),
               {{"per_eps_seconds", times}});
  return kExitOk;
}

int CmdPhase(const Config& cfg, const Shared& shared) {
  const auto start = Clock::now();
  PhaseConfig pc;
  pc.m = cfg.GetInt("phase.m");
  pc.n = cfg.GetInt("phase.n");
  pc.k = cfg.GetInt("phase.k");
  for (double r : cfg.GetDoubles("phase.ranks")) {
    pc.ranks.push_back(static_cast<Index>(std::llround(r)));
  }
  pc.ps = cfg.GetDoubles("phase.ps");
  pc.trials = static_cast<int>(cfg.GetInt("phase.trials"));
  pc.threshold = cfg.GetDouble("phase.threshold");
  pc.solver = ParseSolver(cfg.GetString("phase.solver"));
  pc.seed = RunSeed(cfg);
  pc.max_iters = static_cast<int>(cfg.GetInt("phase.max_iters"));
  pc.step = cfg.GetDouble("phase.step");
  pc.init_factor = cfg.GetDouble("phase.init_factor");
  pc.workers = static_cast<int>(cfg.GetInt("phase.workers"));
  ValidatePhaseConfig(pc);
  const PhaseGrid grid = RunPhaseGrid(pc);

  const fs::path dir = PrepareOut(shared.out);
  WritePhaseCsv(grid, (dir / "phase.csv").string());
  WritePhasePgm(grid, (dir / "phase.pgm").string());
  json result = {{"solver", SolverName(pc.solver)},
                 {"ranks", grid.ranks},
                 {"ps", grid.ps},
                 {"trials", grid.trials},
                 {"threshold", grid.threshold},
                 {"success_rate", grid.success_rate}};
  WriteSummary(dir, "phase", cfg, result, Seconds(start));
  return kExitOk;
}

int CmdLandscape(const Config& cfg, const Shared& shared) {
  const auto start = Clock::now();
  const Instance inst = RequireInstance(shared);
  const fs::path dir = PrepareOut(shared.out);
  const std::string probe = cfg.GetString("landscape.probe");
  const std::uint64_t seed = RunSeed(cfg);
  Index k = cfg.GetInt("landscape.k");
  if (k <= 0) k = inst.dims.k;
  json result = {{"probe", probe}};

  if (probe == "ratio") {
    RatioOptions opt;
    opt.restarts = static_cast<int>(cfg.GetInt("landscape.restarts"));
    opt.iters = static_cast<int>(cfg.GetInt("landscape.iters"));
    opt.polish = cfg.GetBool("landscape.polish");
    opt.polish_top = static_cast<int>(cfg.GetInt("landscape.polish_top"));
    opt.seed = seed;
    const RatioEstimate est =
        RestrictedRatioAscent(inst.u, inst.v, inst.omega, opt);
    result["value"] = est.value;
    result["restarts_used"] = est.restarts_used;
    result["below_half"] = est.value < 0.5;
    if (cfg.GetBool("landscape.dump_witness")) {
      WriteMatrixBin(est.witness, (dir / "witness.bin").string());
    }
  } else if (probe == "diameter") {
    const DiameterReport rep = DiameterCheck(
        inst.u, inst.v, inst.mu,
        static_cast<int>(cfg.GetInt("landscape.samples")), seed);
    result.update({{"samples", rep.samples},
                   {"mu", inst.mu},
                   {"fro_bound", rep.fro_bound},
                   {"inf_bound", rep.inf_bound},
                   {"max_fro_ratio", rep.max_fro_ratio},
                   {"max_inf_ratio", rep.max_inf_ratio},
                   {"fro_violations", rep.fro_violations},
                   {"inf_violations", rep.inf_violations},
                   {"basis_max_fro_ratio", rep.basis_max_fro_ratio},
                   {"basis_max_inf_ratio", rep.basis_max_inf_ratio}});
  } else if (probe == "saddle") {
    if (k <= inst.dims.r) {
      throw ArgumentError("saddle probe needs landscape.k > r");
    }
    const FactorPair star =
        TrueFactorization(inst.u, inst.sigma, inst.v, k, seed);
    std::optional<std::pair<Index, Index>> pivot;
    const long long pr = cfg.GetInt("landscape.pivot_row");
    const long long pc = cfg.GetInt("landscape.pivot_col");
    if (pr >= 0 && pc >= 0) pivot = std::make_pair(pr, pc);
    const SaddleDirection dirn = ComputeSaddleDirection(star, inst.s, pivot);
    const double f0 = Objective(star, inst.m);
    json grid = json::array();
    double worst = 0.0;
    for (int q = 1; q <= 10; ++q) {
      const double t = dirn.t0 * q / 10.0;
      const double f = Objective({star.x + t * dirn.h, star.y + t * dirn.k},
                                 inst.m);
      const double rel = std::abs(f - (f0 - dirn.gamma * t * t)) / f0;
      worst = std::max(worst, rel);
      grid.push_back({{"t", t}, {"objective", f}, {"rel_dev", rel}});
    }
    result.update({{"k", k},
                   {"r", inst.dims.r},
                   {"gamma", dirn.gamma},
                   {"gamma_from_kernels", GammaFromKernels(star)},
                   {"t0", dirn.t0},
                   {"pivot", {dirn.pivot.first, dirn.pivot.second}},
                   {"objective_at_star", f0},
                   {"max_rel_dev", worst},
                   {"grid", grid}});
  } else if (probe == "sharpness") {
    if (k != inst.dims.r) {
      throw ArgumentError("sharpness probe needs landscape.k = r");
    }
    double eps_hat = cfg.GetDouble("landscape.eps_hat");
    if (eps_hat <= 0) {
      eps_hat = SweepFromConfig(cfg, inst).best_eps;
      if (eps_hat <= 0) {
        throw NumericError("no feasible certificate in the eps sweep");
      }
    }
    SharpnessOptions opt;
    opt.eps_hat = eps_hat;
    opt.directions = static_cast<int>(cfg.GetInt("landscape.directions"));
    opt.t_grid = cfg.GetDoubles("landscape.t_grid");
    opt.seed = seed;
    const FactorPair star =
        TrueFactorization(inst.u, inst.sigma, inst.v, k, seed, true);
    const SharpnessReport rep = SharpnessProbe(star, inst.m, opt);
    result.update({{"eps_hat", rep.eps_hat},
                   {"sigma_min", rep.sigma_min},
                   {"floor", rep.floor},
                   {"t_grid", rep.t_grid},
                   {"min_ratio", rep.min_ratio},
                   {"directions", rep.directions},
                   {"violations_at_smallest_t",
                    rep.violations_at_smallest_t}});
  } else if (probe == "overfit") {
    const OverfitReport rep =
        OverfitDemo(inst.l, k, cfg.GetInt("landscape.column"));
    SolveOptions opt;
    opt.schedule = ScheduleFromConfig(cfg, inst.dims.m, inst.dims.n);
    opt.init_scale =
        DefaultInitScale(rep.m, k, cfg.GetDouble("solve.init_factor"));
    opt.max_iters = static_cast<int>(cfg.GetInt("landscape.overfit_iters"));
    opt.seed = seed;
    const SolveResult res = Solve(rep.m, k, opt);
    result.update({{"column", rep.column},
                   {"sparse_l1", rep.sparse_l1},
                   {"witness_objective", rep.witness_objective},
                   {"solver_objective", res.trace.objective.back()},
                   {"solver_fraction",
                    res.trace.objective.back() / rep.sparse_l1}});
  } else {
    throw ArgumentError("unknown probe '" + probe + "'");
  }
  WriteSummary(dir, "landscape", cfg, result, Seconds(start));
  return kExitOk;
}

}  // namespace

// ---------------------------------------------------------------------------

Config Config::Defaults() {
  Config c;
  auto& t = c.tree_;
  t.put("run.seed", "0");

  t.put("model.m", "100");
  t.put("model.n", "100");
  t.put("model.r", "10");
  t.put("model.k", "10");
  t.put("model.p", "0.1");
  t.put("model.scale", "1");
  t.put("model.magnitude", "uniform");
  t.put("model.magnitude_scale", "10");
  t.put("model.mu_cap", "0");

  t.put("solve.solver", "subgrad");
  t.put("solve.k", "0");
  t.put("solve.schedule", "adaptive_halving");
  t.put("solve.step", "0");
  t.put("solve.patience", "10");
  t.put("solve.factor", "0.5");
  t.put("solve.decay", "0.999");
  t.put("solve.init_factor", "0.001");
  t.put("solve.max_iters", "20000");
  t.put("solve.target_rel_err", "1e-6");
  t.put("solve.normalized", "false");
  t.put("solve.ialm_lambda", "0");
  t.put("solve.ialm_tol", "1e-7");
  t.put("solve.ialm_max_iter", "500");

  t.put("certify.eps_sweep", "0.5,0.25,0.1,0.05");
  t.put("certify.tol", "1e-8");
  t.put("certify.max_iter", "20000");
  t.put("certify.dykstra", "false");
  t.put("certify.criticality_tol", "1e-6");

  t.put("phase.m", "100");
  t.put("phase.n", "80");
  t.put("phase.k", "20");
  t.put("phase.ranks", JoinList(DefaultPhaseRanks()));
  t.put("phase.ps", JoinList(DefaultPhasePs()));
  t.put("phase.trials", "20");
  t.put("phase.threshold", "1e-3");
  t.put("phase.solver", "subgrad");
  t.put("phase.max_iters", "4000");
  t.put("phase.step", "0");
  t.put("phase.init_factor", "0.001");
  t.put("phase.workers", "0");

  t.put("landscape.probe", "ratio");
  t.put("landscape.k", "0");
  t.put("landscape.restarts", "200");
  t.put("landscape.iters", "100");
  t.put("landscape.polish", "true");
  t.put("landscape.polish_top", "8");
  t.put("landscape.dump_witness", "false");
  t.put("landscape.samples", "10000");
  t.put("landscape.directions", "200");
  t.put("landscape.t_grid", "1e-4");
  t.put("landscape.eps_hat", "0");
  t.put("landscape.pivot_row", "-1");
  t.put("landscape.pivot_col", "-1");
  t.put("landscape.column", "0");
  t.put("landscape.overfit_iters", "20000");
  return c;
}

void Config::MergeFile(const std::string& path) {
  if (!fs::exists(path)) throw IoError("config file '" + path + "' not found");
  pt::ptree file;
  try {
    pt::read_ini(path, file);
  } catch (const pt::ini_parser_error& e) {
    throw ArgumentError(std::string("malformed config: ") + e.what());
  }
  for (const auto& [section, body] : file) {
    if (body.empty()) {
      throw ArgumentError("config key '" + section + "' outside a section");
    }
    for (const auto& [key, value] : body) {
      Set(section + "." + key, value.data());
    }
  }
}

void Config::Set(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) {
    throw ArgumentError("override '" + assignment +
                        "' is not of the form section.key=value");
  }
  Set(boost::algorithm::trim_copy(assignment.substr(0, eq)),
      boost::algorithm::trim_copy(assignment.substr(eq + 1)));
}

void Config::Set(const std::string& key, const std::string& value) {
  if (!tree_.get_child_optional(key) || key.find('.') == std::string::npos) {
    throw ArgumentError("unknown config key '" + key + "'");
  }
  tree_.put(key, value);
}

std::string Config::GetString(const std::string& key) const {
  const auto v = tree_.get_optional<std::string>(key);
  if (!v) throw ArgumentError("unknown config key '" + key + "'");
  return *v;
}

double Config::GetDouble(const std::string& key) const {
  const std::string s = GetString(key);
  try {
    return boost::lexical_cast<double>(s);
  } catch (const boost::bad_lexical_cast&) {
    throw ArgumentError("config key '" + key + "': '" + s +
                        "' is not a number");
  }
}

long long Config::GetInt(const std::string& key) const {
  const std::string s = GetString(key);
  try {
    return boost::lexical_cast<long long>(s);
  } catch (const boost::bad_lexical_cast&) {
    throw ArgumentError("config key '" + key + "': '" + s +
                        "' is not an integer");
  }
}

bool Config::GetBool(const std::string& key) const {
  const std::string s = boost::algorithm::to_lower_copy(GetString(key));
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ArgumentError("config key '" + key + "': '" + s +
                      "' is not a boolean");
}

std::vector<double> Config::GetDoubles(const std::string& key) const {
  const std::string s = GetString(key);
  std::vector<std::string> parts;
  boost::algorithm::split(parts, s, boost::algorithm::is_any_of(","));
  std::vector<double> out;
  for (std::string part : parts) {
    boost::algorithm::trim(part);
    if (part.empty()) continue;
    try {
      out.push_back(boost::lexical_cast<double>(part));
    } catch (const boost::bad_lexical_cast&) {
      throw ArgumentError("config key '" + key + "': '" + part +
                          "' is not a number");
    }
  }
  return out;
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Factorized l1 robust PCA: solvers and landscape probes",
               "rpca"};
  app.require_subcommand(1, 1);
  Shared shared;
  std::string solver, probe;

  auto add_common = [&](CLI::App* sub, bool needs_instance) {
    sub->add_option("--config", shared.config_path, "INI configuration file");
    sub->add_option("--seed", shared.seed, "base seed (overrides run.seed)");
    sub->add_option("--out", shared.out, "output directory");
    sub->add_option("--set", shared.sets,
                    "override a setting, section.key=value");
    if (needs_instance) {
      sub->add_option("--instance", shared.instance,
                      "instance directory written by `gen`");
    }
  };
  CLI::App* gen = app.add_subcommand("gen", "generate a synthetic instance");
  add_common(gen, false);
  CLI::App* solve = app.add_subcommand("solve", "recover L from an instance");
  add_common(solve, true);
  solve->add_option("--solver", solver, "subgrad or ialm");
  CLI::App* certify =
      app.add_subcommand("certify", "search for a dual certificate");
  add_common(certify, true);
  CLI::App* phase = app.add_subcommand("phase", "success-rate grid");
  add_common(phase, false);
  phase->add_option("--solver", solver, "subgrad or ialm");
  CLI::App* landscape =
      app.add_subcommand("landscape", "probe the objective landscape");
  add_common(landscape, true);
  landscape->add_option("--probe", probe,
                        "ratio, diameter, saddle, sharpness or overfit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    Config cfg = Config::Defaults();
    if (!shared.config_path.empty()) cfg.MergeFile(shared.config_path);
    for (const std::string& s : shared.sets) cfg.Set(s);
    if (shared.seed >= 0) cfg.Set("run.seed", std::to_string(shared.seed));
    if (!solver.empty()) {
      cfg.Set(phase->parsed() ? "phase.solver" : "solve.solver", solver);
    }
    if (!probe.empty()) cfg.Set("landscape.probe", probe);

    int code = kExitOk;
    if (gen->parsed()) code = CmdGen(cfg, shared);
    if (solve->parsed()) code = CmdSolve(cfg, shared);
    if (certify->parsed()) code = CmdCertify(cfg, shared);
    if (phase->parsed()) code = CmdPhase(cfg, shared);
    if (landscape->parsed()) code = CmdLandscape(cfg, shared);
    if (code == kExitOk) {
      out << (fs::path(shared.out) / "summary.json").string() << "\n";
    }
    return code;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ArgumentError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const PreconditionError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace rpca
