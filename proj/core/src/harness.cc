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

#include "ohedge/harness.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "ohedge/error.h"

namespace ohedge {
namespace {

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

[[noreturn]] void BadField(const std::string& key, const std::string& why) {
  Fail(ErrorCode::kConfigError, key + ": " + why);
}

template <typename T>
T ParseNumber(const std::string& key, const std::string& text) {
  const std::string s = Trim(text);
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    BadField(key, "cannot parse '" + text + "'");
  }
  return v;
}

// Runs body(i) for i in [0, count) on up to jobs threads. The first exception
// thrown by any task is rethrown once all threads have joined.
void ParallelFor(int count, int jobs, const std::function<void(int)>& body) {
  jobs = std::clamp(jobs, 1, std::max(count, 1));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::ofstream OpenOutput(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorCode::kIoError, "cannot open " + path.string());
  return out;
}

void EnsureDir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) Fail(ErrorCode::kIoError, "cannot create " + dir + ": " + ec.message());
}

void WriteFile(const std::string& dir, const std::string& name,
               const std::function<void(std::ostream&)>& writer) {
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream out = OpenOutput(path);
  writer(out);
  out.flush();
  if (!out) Fail(ErrorCode::kIoError, "write failed: " + path.string());
}

const char* StatusName(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "PASS";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kSkip: return "SKIP";
  }
  return "?";
}

}  // namespace

std::string FormatNumber(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string InstanceKindName(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kAdversarial: return "adversarial";
    case InstanceKind::kFile: return "file";
    case InstanceKind::kMatchingPennies: return "matching_pennies";
    case InstanceKind::kRandom: return "random";
  }
  return "?";
}

void ExperimentConfig::Validate() const {
  if (horizon < 1) BadField("T", "must be >= 1");
  if (cadence < 1) BadField("cadence", "must be >= 1");
  if (jobs < 1) BadField("jobs", "must be >= 1");
  if (presets.empty()) BadField("presets", "must not be empty");
  switch (instance) {
    case InstanceKind::kAdversarial:
      if (!(delta > 0.0 && delta <= 1.0)) BadField("delta", "must lie in (0, 1]");
      if (m < 2) BadField("m", "adversarial instance needs m >= 2");
      if (n < 2) BadField("n", "adversarial instance needs n >= 2");
      break;
    case InstanceKind::kRandom:
      if (m < 1) BadField("m", "must be >= 1");
      if (n < 1) BadField("n", "must be >= 1");
      break;
    case InstanceKind::kFile:
      if (matrix_path.empty()) BadField("path", "file instance needs a path");
      break;
    case InstanceKind::kMatchingPennies:
      break;
  }
  for (double g : gamma_grid) {
    if (!(g > 0.0 && g < 1.0)) BadField("gamma_grid", "entries must lie in (0, 1)");
  }
}

void SetConfigValue(ExperimentConfig& cfg, const std::string& raw_key,
                    const std::string& value) {
  const std::string key = Trim(raw_key);
  if (key == "m") {
    cfg.m = ParseNumber<int>(key, value);
  } else if (key == "n") {
    cfg.n = ParseNumber<int>(key, value);
  } else if (key == "T" || key == "horizon") {
    cfg.horizon = ParseNumber<int>(key, value);
  } else if (key == "delta") {
    cfg.delta = ParseNumber<double>(key, value);
  } else if (key == "path") {
    cfg.matrix_path = Trim(value);
  } else if (key == "seed") {
    cfg.seed = ParseNumber<std::uint64_t>(key, value);
  } else if (key == "cadence") {
    cfg.cadence = ParseNumber<int>(key, value);
  } else if (key == "jobs") {
    cfg.jobs = ParseNumber<int>(key, value);
  } else if (key == "out") {
    cfg.out_dir = Trim(value);
  } else if (key == "instance") {
    const std::string v = Trim(value);
    if (v == "adversarial") {
      cfg.instance = InstanceKind::kAdversarial;
    } else if (v == "file") {
      cfg.instance = InstanceKind::kFile;
    } else if (v == "matching_pennies") {
      cfg.instance = InstanceKind::kMatchingPennies;
    } else if (v == "random") {
      cfg.instance = InstanceKind::kRandom;
    } else {
      BadField(key, "unknown instance '" + v + "'");
    }
  } else if (key == "algorithm" || key == "algo") {
    const auto algo = ParseAlgorithm(Trim(value));
    if (!algo) BadField(key, "unknown algorithm '" + Trim(value) + "'");
    cfg.algorithm = *algo;
  } else if (key == "presets" || key == "preset") {
    cfg.presets.clear();
    for (const std::string& name : SplitList(value)) {
      if (name == "all") {
        cfg.presets.assign(kAllPresets.begin(), kAllPresets.end());
        continue;
      }
      const auto p = ParsePreset(name);
      if (!p) BadField(key, "unknown preset '" + name + "'");
      cfg.presets.push_back(*p);
    }
  } else if (key == "gamma_grid") {
    cfg.gamma_grid.clear();
    for (const std::string& g : SplitList(value)) {
      cfg.gamma_grid.push_back(ParseNumber<double>(key, g));
    }
  } else {
    BadField(key, "unknown key");
  }
}

void ApplyConfig(std::istream& in, ExperimentConfig& cfg) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      Fail(ErrorCode::kConfigError,
           "line " + std::to_string(line_no) + ": expected key = value");
    }
    SetConfigValue(cfg, line.substr(0, eq), line.substr(eq + 1));
  }
}

void ApplyConfigFile(const std::string& path, ExperimentConfig& cfg) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIoError, "cannot open config " + path);
  ApplyConfig(in, cfg);
}

PayoffMatrix BuildInstance(const ExperimentConfig& cfg) {
  switch (cfg.instance) {
    case InstanceKind::kAdversarial:
      return AdversarialMatrix(cfg.m, cfg.n, cfg.delta);
    case InstanceKind::kFile:
      return ReadMatrixFile(cfg.matrix_path);
    case InstanceKind::kMatchingPennies:
      return MatchingPennies();
    case InstanceKind::kRandom:
      return RandomMatrix(cfg.m, cfg.n, cfg.seed);
  }
  Fail(ErrorCode::kConfigError, "instance: unknown kind");
}

double TargetRegret(Target target, const RegretSnapshot& s, bool dynamic) {
  const double x = dynamic ? s.dreg_x : s.reg_x;
  const double y = dynamic ? s.dreg_y : s.reg_y;
  switch (target) {
    case Target::kSocial: return x + y;
    case Target::kXIndividual: return x;
    case Target::kMaxIndividual: return std::max(x, y);
  }
  return x;
}

PresetRun RunPreset(const PayoffMatrix& a, Preset preset, Algorithm algorithm,
                    int horizon, int cadence, const OptimizeOptions& opts) {
  const int m = a.rows();
  const int n = a.cols();
  PresetRun run;
  run.preset = preset;
  run.rates = PresetRates(preset, m, n, opts);
  auto x = MakeLearner(algorithm, m, run.rates.eta);
  auto y = MakeLearner(algorithm, n, run.rates.eta_prime);
  RegretMeter meter(m, n);
  PlayMatch(a, *x, *y, horizon, [&](const RoundView& r) {
    meter.Record(r);
    if (r.t % cadence == 0 || r.t == horizon) {
      run.samples.push_back(meter.Snapshot());
    }
  });
  run.final = meter.Snapshot();
  const bool dynamic = algorithm == Algorithm::kAveraged;
  run.target_regret = TargetRegret(PresetTarget(preset), run.final, dynamic);
  run.upper = dynamic ? TheoreticalDynamicUpper(preset, m, n, horizon, opts)
                      : TheoreticalUpper(preset, m, n, opts);
  return run;
}

void WriteMetricsCsv(std::ostream& out, const PresetRun& run) {
  out << "t,reg_x,reg_y,social,max_ind,dreg_x,dreg_y,nash_gap\n";
  for (const RegretSnapshot& s : run.samples) {
    out << s.t << ',' << FormatNumber(s.reg_x) << ',' << FormatNumber(s.reg_y)
        << ',' << FormatNumber(s.social) << ','
        << FormatNumber(s.max_individual) << ',' << FormatNumber(s.dreg_x)
        << ',' << FormatNumber(s.dreg_y) << ',' << FormatNumber(s.nash_gap)
        << '\n';
  }
}

void WriteSummaryCsv(std::ostream& out, const ExperimentResult& result,
                     Algorithm algorithm) {
  out << "preset,target,algorithm,m,n,T,eta,eta_prime,c,c_prime,reg_x,reg_y,"
         "social,max_ind,dreg_x,dreg_y,nash_gap,avg_nash_gap,target_regret,"
         "theoretical_upper\n";
  for (const PresetRun& run : result.runs) {
    const RegretSnapshot& s = run.final;
    out << PresetName(run.preset) << ',' << TargetName(PresetTarget(run.preset))
        << ',' << AlgorithmName(algorithm) << ',' << result.m << ','
        << result.n << ',' << s.t << ',' << FormatNumber(run.rates.eta) << ','
        << FormatNumber(run.rates.eta_prime) << ','
        << FormatNumber(run.rates.c) << ',' << FormatNumber(run.rates.c_prime)
        << ',' << FormatNumber(s.reg_x) << ',' << FormatNumber(s.reg_y) << ','
        << FormatNumber(s.social) << ',' << FormatNumber(s.max_individual)
        << ',' << FormatNumber(s.dreg_x) << ',' << FormatNumber(s.dreg_y)
        << ',' << FormatNumber(s.nash_gap) << ','
        << FormatNumber(s.average_nash_gap) << ','
        << FormatNumber(run.target_regret) << ',' << FormatNumber(run.upper)
        << '\n';
  }
}

ExperimentResult RunExperiment(const ExperimentConfig& cfg) {
  cfg.Validate();
  const PayoffMatrix a = BuildInstance(cfg);
  ExperimentResult result;
  result.m = a.rows();
  result.n = a.cols();
  const int count = static_cast<int>(cfg.presets.size());
  result.runs.resize(count);
  ParallelFor(count, cfg.jobs, [&](int i) {
    result.runs[i] = RunPreset(a, cfg.presets[i], cfg.algorithm, cfg.horizon,
                               cfg.cadence);
  });
  if (!cfg.out_dir.empty()) {
    EnsureDir(cfg.out_dir);
    for (const PresetRun& run : result.runs) {
      WriteFile(cfg.out_dir, "metrics_" + PresetName(run.preset) + ".csv",
                [&](std::ostream& out) { WriteMetricsCsv(out, run); });
    }
    WriteFile(cfg.out_dir, "summary.csv", [&](std::ostream& out) {
      WriteSummaryCsv(out, result, cfg.algorithm);
    });
  }
  return result;
}

std::vector<double> UniformGammaGrid(int points) {
  if (points < 1) Fail(ErrorCode::kInvalidArgs, "grid needs >= 1 point");
  std::vector<double> grid;
  for (int k = 1; k <= points; ++k) {
    grid.push_back(static_cast<double>(k) / (points + 1));
  }
  return grid;
}

SweepResult SweepGamma(int m, int n, const std::vector<double>& grid,
                       const OptimizeOptions& opts) {
  for (double g : grid) {
    if (!(g > 0.0 && g < 1.0)) {
      Fail(ErrorCode::kInvalidGamma,
           "gamma must lie in (0, 1), got " + FormatNumber(g));
    }
  }
  if (m < 2 || n < 2) {
    Fail(ErrorCode::kDegenerateGame, "sweep needs m, n >= 2");
  }
  const BoundInputs in = BoundInputs::FromActions(m, n);
  SweepResult sweep;
  for (double gamma : grid) {
    const OptimizeResult r = Minimize(Objective::JGamma(gamma), in, opts);
    SweepRow row;
    row.gamma = gamma;
    row.f_star = r.f_value;
    row.g_star = r.g_value;
    row.j_star = r.objective_value;
    row.max_fg_star = std::max(r.f_value.AsDouble(), r.g_value.AsDouble());
    row.rates = r.rates;
    sweep.rows.push_back(row);
  }
  sweep.max_fg = Minimize(Objective::MaxFg(), in, opts);
  return sweep;
}

void WriteSweepCsv(std::ostream& out, const SweepResult& sweep) {
  out << "gamma,f_star,g_star,J_star,max_fg_star,eta,eta_prime,c,c_prime\n";
  for (const SweepRow& r : sweep.rows) {
    out << FormatNumber(r.gamma) << ',' << FormatNumber(r.f_star.AsDouble())
        << ',' << FormatNumber(r.g_star.AsDouble()) << ','
        << FormatNumber(r.j_star) << ',' << FormatNumber(r.max_fg_star) << ','
        << FormatNumber(r.rates.eta) << ',' << FormatNumber(r.rates.eta_prime)
        << ',' << FormatNumber(r.rates.c) << ','
        << FormatNumber(r.rates.c_prime) << '\n';
  }
}

void WriteSweepOptimumCsv(std::ostream& out, const SweepResult& sweep) {
  const OptimizeResult& r = sweep.max_fg;
  out << "max_fg,f,g,eta,eta_prime,c,c_prime,converged\n";
  out << FormatNumber(r.objective_value) << ','
      << FormatNumber(r.f_value.AsDouble()) << ','
      << FormatNumber(r.g_value.AsDouble()) << ','
      << FormatNumber(r.rates.eta) << ',' << FormatNumber(r.rates.eta_prime)
      << ',' << FormatNumber(r.rates.c) << ',' << FormatNumber(r.rates.c_prime)
      << ',' << (r.converged ? "true" : "false") << '\n';
}

bool VerifyReport::all_pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const BoundCheck& c) {
    return c.status == CheckStatus::kFail;
  });
}

namespace {

BoundCheck AtMost(Preset preset, std::string name, double measured,
                  double bound, std::string detail) {
  return BoundCheck{preset, std::move(name), measured, bound,
                    measured <= bound ? CheckStatus::kPass : CheckStatus::kFail,
                    std::move(detail)};
}

BoundCheck Skipped(Preset preset, std::string name, std::string detail) {
  return BoundCheck{preset, std::move(name), 0.0, 0.0, CheckStatus::kSkip,
                    std::move(detail)};
}

// Regret of one player on the adversarial instance whose gap maximizes the
// lower bound for that player's rate.
BoundCheck LowerBoundCheck(Preset preset, const RateParams& rates, bool x_side,
                           int m, int n, Algorithm algorithm, int horizon) {
  const std::string name = x_side ? "lower_x" : "lower_y";
  const int own = x_side ? m : n;
  const double rate = x_side ? rates.eta : rates.eta_prime;
  if (rate <= 0.0) return Skipped(preset, name, "player has zero rate");
  if (m < 2 || n < 2) return Skipped(preset, name, "needs m, n >= 2");
  const bool dynamic = algorithm == Algorithm::kAveraged;
  const LowerBoundValue lb = dynamic ? LowerBoundDynamic(own, rate, horizon)
                                     : LowerBoundExternal(own, rate, horizon);
  const PayoffMatrix a = AdversarialMatrix(m, n, lb.delta_star);
  auto x = MakeLearner(algorithm, m, rates.eta);
  auto y = MakeLearner(algorithm, n, rates.eta_prime);
  RegretMeter meter(m, n);
  PlayMatch(a, *x, *y, horizon, [&](const RoundView& r) { meter.Record(r); });
  const RegretSnapshot s = meter.Snapshot();
  const double measured = x_side ? (dynamic ? s.dreg_x : s.reg_x)
                                 : (dynamic ? s.dreg_y : s.reg_y);
  BoundCheck check{preset, name, measured, lb.value, CheckStatus::kPass,
                   "delta=" + FormatNumber(lb.delta_star)};
  if (measured < lb.value - kLowerBoundSlack) check.status = CheckStatus::kFail;
  return check;
}

}  // namespace

VerifyReport VerifyBounds(const ExperimentConfig& cfg,
                          const OptimizeOptions& opts) {
  cfg.Validate();
  const PayoffMatrix a = BuildInstance(cfg);
  const int m = a.rows();
  const int n = a.cols();
  const int count = static_cast<int>(cfg.presets.size());
  std::vector<std::vector<BoundCheck>> per_preset(count);
  std::vector<PresetRun> runs(count);

  ParallelFor(count, cfg.jobs, [&](int i) {
    const Preset preset = cfg.presets[i];
    std::vector<BoundCheck>& out = per_preset[i];
    runs[i] = RunPreset(a, preset, cfg.algorithm, cfg.horizon, cfg.cadence,
                        opts);
    const PresetRun& run = runs[i];
    out.push_back(AtMost(preset, "upper", run.target_regret, run.upper,
                         TargetName(PresetTarget(preset))));

    out.push_back(LowerBoundCheck(preset, run.rates, true, m, n,
                                  cfg.algorithm, cfg.horizon));
    out.push_back(LowerBoundCheck(preset, run.rates, false, m, n,
                                  cfg.algorithm, cfg.horizon));

    const auto constant = LastIterateConstant(preset, m, n, opts);
    if (!constant) {
      out.push_back(Skipped(preset, "last_iterate", "no last-iterate bound"));
      return;
    }
    const PresetRun averaged =
        cfg.algorithm == Algorithm::kAveraged
            ? run
            : RunPreset(a, preset, Algorithm::kAveraged, cfg.horizon,
                        cfg.cadence, opts);
    double worst = 0.0;
    for (const RegretSnapshot& s : averaged.samples) {
      worst = std::max(worst, s.t * s.nash_gap);
    }
    out.push_back(
        AtMost(preset, "last_iterate", worst, constant->primary, "max t*gap"));
    if (constant->alternate) {
      out.push_back(AtMost(preset, "last_iterate_alt", worst,
                           *constant->alternate, "max t*gap"));
    }
  });

  VerifyReport report;
  for (auto& checks : per_preset) {
    report.checks.insert(report.checks.end(), checks.begin(), checks.end());
  }
  if (!cfg.out_dir.empty()) {
    EnsureDir(cfg.out_dir);
    for (const PresetRun& run : runs) {
      WriteFile(cfg.out_dir, "metrics_" + PresetName(run.preset) + ".csv",
                [&](std::ostream& out) { WriteMetricsCsv(out, run); });
    }
    WriteFile(cfg.out_dir, "verify.csv",
              [&](std::ostream& out) { WriteVerifyCsv(out, report); });
  }
  return report;
}

void WriteVerifyText(std::ostream& out, const VerifyReport& report) {
  for (const BoundCheck& c : report.checks) {
    out << StatusName(c.status) << ' ' << PresetName(c.preset) << ' '
        << c.check;
    if (c.status != CheckStatus::kSkip) {
      const char* op = c.check.rfind("lower", 0) == 0 ? " >= " : " <= ";
      out << ' ' << FormatNumber(c.measured) << op << FormatNumber(c.bound);
    }
    if (!c.detail.empty()) out << " (" << c.detail << ')';
    out << '\n';
  }
}

void WriteVerifyCsv(std::ostream& out, const VerifyReport& report) {
  out << "preset,check,measured,bound,result,detail\n";
  for (const BoundCheck& c : report.checks) {
    out << PresetName(c.preset) << ',' << c.check << ','
        << FormatNumber(c.measured) << ',' << FormatNumber(c.bound) << ','
        << StatusName(c.status) << ',' << c.detail << '\n';
  }
}

}  // namespace ohedge
