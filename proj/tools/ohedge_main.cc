// Copyright 2026 The ohedge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success or all checks passed,
// 1 a check failed or a run errored, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ohedge/error.h"
#include "ohedge/harness.h"
#include "ohedge/presets.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Flags shared by simulate and verify. Values are kept as text and applied
// after the config file so that flags override file settings.
struct ConfigFlags {
  std::string config_path;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;

  void Register(CLI::App* app) {
    app->add_option("--config", config_path, "key=value config file");
    Add(app, "--m", "m", "rows (x-player actions)");
    Add(app, "--n", "n", "columns (y-player actions)");
    Add(app, "--T", "T", "horizon");
    Add(app, "--delta", "delta", "adversarial payoff gap in (0, 1]");
    Add(app, "--instance", "instance",
        "adversarial | file | matching_pennies | random");
    Add(app, "--path", "path", "matrix file for instance=file");
    Add(app, "--seed", "seed", "seed for instance=random");
    Add(app, "--preset", "presets", "comma-separated preset names or 'all'");
    Add(app, "--algo", "algorithm", "hedge | averaged");
    Add(app, "--out", "out", "output directory for CSV files");
    Add(app, "--cadence", "cadence", "emit metrics every k rounds");
    Add(app, "--jobs", "jobs", "presets run concurrently");
  }

  void Add(CLI::App* app, const std::string& flag, const std::string& key,
           const std::string& help) {
    options[key] = app->add_option(flag, values[key], help);
  }

  ohedge::ExperimentConfig Build() const {
    ohedge::ExperimentConfig cfg;
    if (!config_path.empty()) ohedge::ApplyConfigFile(config_path, cfg);
    for (const auto& [key, opt] : options) {
      if (opt->count() > 0) ohedge::SetConfigValue(cfg, key, values.at(key));
    }
    cfg.Validate();
    return cfg;
  }
};

bool IsUsageError(ohedge::ErrorCode code) {
  switch (code) {
    case ohedge::ErrorCode::kConfigError:
    case ohedge::ErrorCode::kInvalidArgs:
    case ohedge::ErrorCode::kInvalidGamma:
    case ohedge::ErrorCode::kInvalidDelta:
    case ohedge::ErrorCode::kTooFewActions:
    case ohedge::ErrorCode::kDegenerateGame:
    case ohedge::ErrorCode::kMissingHorizon:
      return true;
    default:
      return false;
  }
}

int RunRates(const std::string& preset_name, int m, int n,
             std::optional<int> horizon) {
  const auto preset = ohedge::ParsePreset(preset_name);
  if (!preset) {
    std::cerr << "unknown preset '" << preset_name << "'\n";
    return kExitUsage;
  }
  const ohedge::RateParams r = ohedge::PresetRates(*preset, m, n);
  using ohedge::FormatNumber;
  std::cout << "preset," << ohedge::PresetName(*preset) << '\n'
            << "target," << ohedge::TargetName(ohedge::PresetTarget(*preset))
            << '\n'
            << "eta," << FormatNumber(r.eta) << '\n'
            << "eta_prime," << FormatNumber(r.eta_prime) << '\n'
            << "c," << FormatNumber(r.c) << '\n'
            << "c_prime," << FormatNumber(r.c_prime) << '\n'
            << "theoretical_upper,"
            << FormatNumber(ohedge::TheoreticalUpper(*preset, m, n)) << '\n';
  if (horizon) {
    std::cout << "theoretical_dynamic_upper,"
              << FormatNumber(ohedge::TheoreticalDynamicUpper(*preset, m, n,
                                                               *horizon))
              << '\n';
  }
  if (const auto li = ohedge::LastIterateConstant(*preset, m, n)) {
    std::cout << "last_iterate," << FormatNumber(li->primary) << '\n';
    if (li->alternate) {
      std::cout << "last_iterate_alt," << FormatNumber(*li->alternate) << '\n';
    }
  }
  return kExitOk;
}

int RunSimulate(const ConfigFlags& flags) {
  const ohedge::ExperimentConfig cfg = flags.Build();
  const ohedge::ExperimentResult result = ohedge::RunExperiment(cfg);
  ohedge::WriteSummaryCsv(std::cout, result, cfg.algorithm);
  return kExitOk;
}

int RunSweep(int m, int n, const std::string& grid_text, int points,
             const std::string& out_dir) {
  ohedge::ExperimentConfig scratch;
  std::vector<double> grid = ohedge::UniformGammaGrid(points);
  if (!grid_text.empty()) {
    ohedge::SetConfigValue(scratch, "gamma_grid", grid_text);
    grid = scratch.gamma_grid;
  }
  const ohedge::SweepResult sweep = ohedge::SweepGamma(m, n, grid);
  ohedge::WriteSweepCsv(std::cout, sweep);
  std::cout << '\n';
  ohedge::WriteSweepOptimumCsv(std::cout, sweep);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream rows(std::filesystem::path(out_dir) / "sweep_gamma.csv");
    ohedge::WriteSweepCsv(rows, sweep);
    std::ofstream best(std::filesystem::path(out_dir) / "sweep_max_fg.csv");
    ohedge::WriteSweepOptimumCsv(best, sweep);
    if (!rows || !best) {
      std::cerr << "cannot write to " << out_dir << '\n';
      return kExitFail;
    }
  }
  return kExitOk;
}

int RunVerify(const ConfigFlags& flags) {
  const ohedge::ExperimentConfig cfg = flags.Build();
  const ohedge::VerifyReport report = ohedge::VerifyBounds(cfg);
  ohedge::WriteVerifyText(std::cout, report);
  return report.all_pass() ? kExitOk : kExitFail;
}

int RunMatrixCheck(const std::string& path) {
  try {
    const ohedge::PayoffMatrix a = ohedge::ReadMatrixFile(path);
    std::cout << "OK " << a.rows() << 'x' << a.cols() << '\n';
    return kExitOk;
  } catch (const ohedge::Error& e) {
    std::cout << "INVALID " << ohedge::ErrorCodeName(e.code()) << ": "
              << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimistic Hedge dynamics in zero-sum matrix games"};
  app.require_subcommand(1);

  auto* rates = app.add_subcommand("rates", "learning rates and bounds of a preset");
  std::string preset_name;
  int rates_m = 2;
  int rates_n = 2;
  int rates_t = 0;
  rates->add_option("preset", preset_name, "e.g. A-Social")->required();
  rates->add_option("--m", rates_m, "rows")->check(CLI::PositiveNumber);
  rates->add_option("--n", rates_n, "columns")->check(CLI::PositiveNumber);
  auto* rates_t_opt = rates->add_option("--T", rates_t, "horizon for dynamic bounds")
                          ->check(CLI::PositiveNumber);

  auto* simulate = app.add_subcommand("simulate", "run the preset experiment");
  ConfigFlags sim_flags;
  sim_flags.Register(simulate);

  auto* sweep = app.add_subcommand("sweep-gamma", "f/g tradeoff over gamma");
  int sweep_m = 100;
  int sweep_n = 100;
  int sweep_points = 19;
  std::string sweep_grid;
  std::string sweep_out;
  sweep->add_option("--m", sweep_m, "rows");
  sweep->add_option("--n", sweep_n, "columns");
  sweep->add_option("--gamma-grid", sweep_grid, "comma-separated values in (0, 1)");
  sweep->add_option("--points", sweep_points, "uniform grid size")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--out", sweep_out, "output directory");

  auto* verify = app.add_subcommand("verify", "check regret bounds");
  ConfigFlags verify_flags;
  verify_flags.Register(verify);

  auto* check = app.add_subcommand("matrix-check", "validate a matrix file");
  std::string matrix_path;
  check->add_option("file", matrix_path, "matrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (rates->parsed()) {
      std::optional<int> horizon;
      if (rates_t_opt->count() > 0) horizon = rates_t;
      return RunRates(preset_name, rates_m, rates_n, horizon);
    }
    if (simulate->parsed()) return RunSimulate(sim_flags);
    if (sweep->parsed()) {
      return RunSweep(sweep_m, sweep_n, sweep_grid, sweep_points, sweep_out);
    }
    if (verify->parsed()) return RunVerify(verify_flags);
    if (check->parsed()) return RunMatrixCheck(matrix_path);
  } catch (const ohedge::Error& e) {
    std::cerr << "error [" << ohedge::ErrorCodeName(e.code()) << "] "
              << e.what() << '\n';
    return IsUsageError(e.code()) ? kExitUsage : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
