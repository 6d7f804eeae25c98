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

// Experiment plumbing: configuration, preset runs with CSV output, the
// gamma tradeoff sweep and the bound-verification report.

#ifndef OHEDGE_HARNESS_H_
#define OHEDGE_HARNESS_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ohedge/analysis.h"
#include "ohedge/game.h"
#include "ohedge/learners.h"
#include "ohedge/optimizer.h"
#include "ohedge/presets.h"
#include "ohedge/rates.h"

namespace ohedge {

enum class InstanceKind { kAdversarial, kFile, kMatchingPennies, kRandom };

std::string InstanceKindName(InstanceKind kind);

struct ExperimentConfig {
  int m = 2;
  int n = 10000;
  int horizon = 2000;
  InstanceKind instance = InstanceKind::kAdversarial;
  double delta = 1.0;             // adversarial only
  std::string matrix_path;        // file only
  std::uint64_t seed = 0;         // random only
  std::vector<Preset> presets{kAllPresets.begin(), kAllPresets.end()};
  Algorithm algorithm = Algorithm::kHedge;
  std::string out_dir;            // empty: no files written
  int cadence = 1;                // emit a metrics row every k rounds
  int jobs = 1;                   // presets run concurrently
  std::vector<double> gamma_grid;  // sweep-gamma only

  // Throws kConfigError naming the offending field.
  void Validate() const;
};

// Sets one field from its textual form. Keys: m, n, T, instance, delta,
// path, seed, presets (comma list or "all"), algorithm, out, cadence, jobs,
// gamma_grid. Throws kConfigError.
void SetConfigValue(ExperimentConfig& cfg, const std::string& key,
                    const std::string& value);

// Flat "key = value" text, '#' starts a comment. Later keys win.
void ApplyConfig(std::istream& in, ExperimentConfig& cfg);
void ApplyConfigFile(const std::string& path, ExperimentConfig& cfg);

// The payoff matrix described by the config. For file and matching-pennies
// instances the action counts come from the matrix, not from cfg.m/cfg.n.
PayoffMatrix BuildInstance(const ExperimentConfig& cfg);

// Outcome of one preset's match.
struct PresetRun {
  Preset preset = Preset::kUSocial;
  RateParams rates;
  std::vector<RegretSnapshot> samples;  // at the configured cadence
  RegretSnapshot final;
  double target_regret = 0.0;  // external, or dynamic under averaged play
  double upper = 0.0;          // matching theoretical bound
};

// Target regret of a snapshot: social / reg_x / max_ind, or the dynamic
// counterparts when dynamic is set.
double TargetRegret(Target target, const RegretSnapshot& s, bool dynamic);

// Plays one preset on a. Samples every cadence rounds and at round T.
PresetRun RunPreset(const PayoffMatrix& a, Preset preset, Algorithm algorithm,
                    int horizon, int cadence,
                    const OptimizeOptions& opts = {});

struct ExperimentResult {
  int m = 0;
  int n = 0;
  std::vector<PresetRun> runs;  // in cfg.presets order
};

// Runs every configured preset. When cfg.out_dir is set, writes
// metrics_<preset>.csv per preset and summary.csv; output does not depend on
// cfg.jobs.
ExperimentResult RunExperiment(const ExperimentConfig& cfg);

void WriteMetricsCsv(std::ostream& out, const PresetRun& run);
void WriteSummaryCsv(std::ostream& out, const ExperimentResult& result,
                     Algorithm algorithm);

struct SweepRow {
  double gamma = 0.0;
  BoundValue f_star = BoundValue::Infinite();
  BoundValue g_star = BoundValue::Infinite();
  double j_star = 0.0;
  double max_fg_star = 0.0;  // max{f, g} at the J_gamma minimizer
  RateParams rates;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  OptimizeResult max_fg;  // global minimizer of max{f, g}
};

// Throws kInvalidGamma for any gamma outside (0, 1), kDegenerateGame for
// m or n < 2.
SweepResult SweepGamma(int m, int n, const std::vector<double>& grid,
                       const OptimizeOptions& opts = {});

// Evenly spaced interior grid k / (points + 1), k = 1..points.
std::vector<double> UniformGammaGrid(int points);

void WriteSweepCsv(std::ostream& out, const SweepResult& sweep);
void WriteSweepOptimumCsv(std::ostream& out, const SweepResult& sweep);

enum class CheckStatus { kPass, kFail, kSkip };

struct BoundCheck {
  Preset preset = Preset::kUSocial;
  std::string check;   // "upper", "lower_x", "lower_y", "last_iterate", ...
  double measured = 0.0;
  double bound = 0.0;
  CheckStatus status = CheckStatus::kSkip;
  std::string detail;
};

struct VerifyReport {
  std::vector<BoundCheck> checks;
  bool all_pass() const;
};

// Lower-bound checks allow this much slack below the bound.
inline constexpr double kLowerBoundSlack = 1e-9;

// Per preset: (i) target regret on the configured instance against the
// theoretical bound, (ii) each learning player's regret on the adversarial
// instance at the bound-maximizing gap against the lower bound, (iii) under
// averaged play, t times the Nash gap of the played pair against the
// last-iterate constant at every sampled t. Writes verify.csv and the metrics
// of the upper-bound runs when cfg.out_dir is set.
VerifyReport VerifyBounds(const ExperimentConfig& cfg,
                          const OptimizeOptions& opts = {});

void WriteVerifyText(std::ostream& out, const VerifyReport& report);
void WriteVerifyCsv(std::ostream& out, const VerifyReport& report);

// Decimal text with 15 significant digits; "inf" for infinity.
std::string FormatNumber(double v);

}  // namespace ohedge

#endif  // OHEDGE_HARNESS_H_
