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

// The eight learning-rate presets and the regret upper bounds they carry.
// "U-" presets may not depend on (m, n); "A-" presets know both action
// counts.

#ifndef OHEDGE_PRESETS_H_
#define OHEDGE_PRESETS_H_

#include <array>
#include <optional>
#include <string>

#include "ohedge/optimizer.h"
#include "ohedge/rates.h"

namespace ohedge {

enum class Preset {
  kUSocial,
  kUXOnly,
  kUMaxIndCl,
  kUMaxIndNum,
  kASocial,
  kAXOnly,
  kAMaxIndCl,
  kAMaxIndNum,
};

inline constexpr std::array<Preset, 8> kAllPresets = {
    Preset::kUSocial,   Preset::kUXOnly,  Preset::kUMaxIndCl,
    Preset::kUMaxIndNum, Preset::kASocial, Preset::kAXOnly,
    Preset::kAMaxIndCl, Preset::kAMaxIndNum};

// The regret a preset is tuned for.
enum class Target { kSocial, kXIndividual, kMaxIndividual };

std::string PresetName(Preset preset);  // e.g. "A-MaxInd-Num"
std::optional<Preset> ParsePreset(const std::string& name);
Target PresetTarget(Preset preset);
std::string TargetName(Target target);
bool IsCardinalityAware(Preset preset);

// Throws kDegenerateGame when a cardinality-aware preset is asked for m or
// n < 2. X-only presets return eta' = 0 with c = c' = 1.
RateParams PresetRates(Preset preset, int m, int n,
                       const OptimizeOptions& opts = {});

// Closed-form bound on the preset's target regret (external regret, any T).
double TheoreticalUpper(Preset preset, int m, int n,
                        const OptimizeOptions& opts = {});

// Bound on the preset's target dynamic regret under averaged play, which is
// the corresponding external constant times (log T + 1). Throws
// kMissingHorizon without a horizon.
double TheoreticalDynamicUpper(Preset preset, int m, int n,
                               std::optional<long> horizon,
                               const OptimizeOptions& opts = {});

// Upper bounds on t * NashGap(x_t, y_t) for averaged play. The unaware
// social preset uses 2 log(mn); the aware social preset has two published
// constants, with (log n + 1/2) and with (log n + 4) inside the square roots.
// Max-individual presets use Omega(lambda). X-only presets have none: the
// uniform y-player never approaches equilibrium.
struct LastIterateConstants {
  double primary = 0.0;
  std::optional<double> alternate;  // the (+ 4) reading, aware social only
};
std::optional<LastIterateConstants> LastIterateConstant(
    Preset preset, int m, int n, const OptimizeOptions& opts = {});

}  // namespace ohedge

#endif  // OHEDGE_PRESETS_H_
