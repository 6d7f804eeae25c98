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

#include "ohedge/presets.h"

#include <cmath>

#include "ohedge/error.h"

namespace ohedge {
namespace {

const double kSqrt3 = std::sqrt(3.0);

void RequireAware(Preset preset, int m, int n) {
  if (m < 2 || n < 2) {
    Fail(ErrorCode::kDegenerateGame,
         PresetName(preset) + " needs m, n >= 2 (log m, log n > 0)");
  }
}

void RequireActions(int m, int n) {
  if (m < 1 || n < 1) Fail(ErrorCode::kInvalidArgs, "m, n must be >= 1");
}

// 2 sqrt(M N') + 2 sqrt(M' N)
double AwareSocialConstant(const BoundInputs& b) {
  return 2.0 * std::sqrt(b.log_m * b.log_n_half) +
         2.0 * std::sqrt(b.log_m_half * b.log_n);
}

}  // namespace

std::string PresetName(Preset preset) {
  switch (preset) {
    case Preset::kUSocial: return "U-Social";
    case Preset::kUXOnly: return "U-X-only";
    case Preset::kUMaxIndCl: return "U-MaxInd-Cl";
    case Preset::kUMaxIndNum: return "U-MaxInd-Num";
    case Preset::kASocial: return "A-Social";
    case Preset::kAXOnly: return "A-X-only";
    case Preset::kAMaxIndCl: return "A-MaxInd-Cl";
    case Preset::kAMaxIndNum: return "A-MaxInd-Num";
  }
  return "?";
}

std::optional<Preset> ParsePreset(const std::string& name) {
  for (Preset p : kAllPresets) {
    if (PresetName(p) == name) return p;
  }
  return std::nullopt;
}

Target PresetTarget(Preset preset) {
  switch (preset) {
    case Preset::kUSocial:
    case Preset::kASocial:
      return Target::kSocial;
    case Preset::kUXOnly:
    case Preset::kAXOnly:
      return Target::kXIndividual;
    default:
      return Target::kMaxIndividual;
  }
}

std::string TargetName(Target target) {
  switch (target) {
    case Target::kSocial: return "social";
    case Target::kXIndividual: return "reg_x";
    case Target::kMaxIndividual: return "max_ind";
  }
  return "?";
}

bool IsCardinalityAware(Preset preset) {
  switch (preset) {
    case Preset::kASocial:
    case Preset::kAXOnly:
    case Preset::kAMaxIndCl:
    case Preset::kAMaxIndNum:
      return true;
    default:
      return false;
  }
}

RateParams PresetRates(Preset preset, int m, int n,
                       const OptimizeOptions& opts) {
  RequireActions(m, n);
  if (IsCardinalityAware(preset)) RequireAware(preset, m, n);
  const BoundInputs b = BoundInputs::FromActions(m, n);
  switch (preset) {
    case Preset::kUSocial:
      return RateParams{0.5, 0.5, 0.5, 0.5};
    case Preset::kUXOnly:
      return RateParams{1.0, 0.0, 1.0, 1.0};
    case Preset::kUMaxIndCl: {
      const double eta = 1.0 / (2.0 * kSqrt3);
      return RateParams{eta, eta, 0.5, 0.5};
    }
    case Preset::kUMaxIndNum:
      return MinimizeUnawareCoefficients(opts).rates;
    case Preset::kASocial: {
      const double c = std::sqrt(b.log_m_half * b.log_n_half) / b.d;
      return RateParams{std::sqrt(b.log_m * b.log_m_half) / b.d,
                        std::sqrt(b.log_n * b.log_n_half) / b.d, c, c};
    }
    case Preset::kAXOnly:
      return RateParams{std::sqrt(b.log_m / b.log_n_half), 0.0, 1.0, 1.0};
    case Preset::kAMaxIndCl: {
      const double c = std::sqrt(b.log_m_half * b.log_n_half) / b.d;
      return RateParams{std::sqrt(b.log_m * b.log_m_half) / (2.0 * b.d),
                        std::sqrt(b.log_n * b.log_n_half) / (2.0 * b.d), c, c};
    }
    case Preset::kAMaxIndNum:
      return Minimize(Objective::MaxFg(), b, opts).rates;
  }
  Fail(ErrorCode::kInvalidArgs, "unknown preset");
}

double TheoreticalUpper(Preset preset, int m, int n,
                        const OptimizeOptions& opts) {
  RequireActions(m, n);
  if (IsCardinalityAware(preset)) RequireAware(preset, m, n);
  const BoundInputs b = BoundInputs::FromActions(m, n);
  const double log_mn = b.log_m + b.log_n;
  switch (preset) {
    case Preset::kUSocial:
      return 2.0 * log_mn + 1.0;
    case Preset::kUXOnly:
      return b.log_m + 0.5;
    case Preset::kUMaxIndCl:
    case Preset::kUMaxIndNum:
      return 3.0 * kSqrt3 * log_mn + 1.0 / kSqrt3;
    case Preset::kASocial:
      return AwareSocialConstant(b);
    case Preset::kAXOnly:
      return 1.5 * std::sqrt(b.log_m * b.log_n_half);
    case Preset::kAMaxIndCl:
      return 10.0 / 3.0 * AwareSocialConstant(b);
    case Preset::kAMaxIndNum:
      // max{f, g} at the optimizer's rates; feasible and interior, so it is
      // a valid bound on both individual regrets.
      return Minimize(Objective::MaxFg(), b, opts).objective_value;
  }
  Fail(ErrorCode::kInvalidArgs, "unknown preset");
}

double TheoreticalDynamicUpper(Preset preset, int m, int n,
                               std::optional<long> horizon,
                               const OptimizeOptions& opts) {
  if (!horizon) {
    Fail(ErrorCode::kMissingHorizon, "dynamic regret bounds need T");
  }
  if (*horizon < 1) Fail(ErrorCode::kInvalidArgs, "T must be >= 1");
  const double harmonic = std::log(static_cast<double>(*horizon)) + 1.0;
  switch (PresetTarget(preset)) {
    case Target::kSocial:
    case Target::kXIndividual:
      return TheoreticalUpper(preset, m, n, opts) * harmonic;
    case Target::kMaxIndividual: {
      const RateParams r = PresetRates(preset, m, n, opts);
      return BoundOmega(r, BoundInputs::FromActions(m, n)).total * harmonic;
    }
  }
  Fail(ErrorCode::kInvalidArgs, "unknown preset");
}

std::optional<LastIterateConstants> LastIterateConstant(
    Preset preset, int m, int n, const OptimizeOptions& opts) {
  RequireActions(m, n);
  const BoundInputs b = BoundInputs::FromActions(m, n);
  switch (preset) {
    case Preset::kUSocial:
      return LastIterateConstants{2.0 * (b.log_m + b.log_n), std::nullopt};
    case Preset::kASocial: {
      RequireAware(preset, m, n);
      const double plus_four = 2.0 * std::sqrt(b.log_m * (b.log_n + 4.0)) +
                               2.0 * std::sqrt(b.log_n * (b.log_m + 4.0));
      return LastIterateConstants{AwareSocialConstant(b), plus_four};
    }
    case Preset::kUXOnly:
    case Preset::kAXOnly:
      return std::nullopt;
    default: {
      const RateParams r = PresetRates(preset, m, n, opts);
      return LastIterateConstants{BoundOmega(r, b).total, std::nullopt};
    }
  }
}

}  // namespace ohedge
