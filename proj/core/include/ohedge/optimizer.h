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

// Numerical minimization of the regret-bound functions. With
// p = log a, p' = log a', q = log s, q' = log s', both f and g are sums of
// exponentials of affine functions, hence convex, and are minimized by
// projected gradient descent with Armijo backtracking.

#ifndef OHEDGE_OPTIMIZER_H_
#define OHEDGE_OPTIMIZER_H_

#include <array>

#include "ohedge/rates.h"

namespace ohedge {

using LogPoint = std::array<double, 4>;  // (p, p', q, q')

struct OptimizeOptions {
  int max_iters = 200000;
  double grad_tol = 1e-10;
  double initial_step = 1.0;
  double shrink = 0.5;
  double sufficient_decrease = 1e-4;
  // Log-sum-exp smoothing of max objectives, raised geometrically from
  // rho_initial to rho_final over rho_stages continuation stages.
  double rho_initial = 10.0;
  double rho_final = 1e4;
  int rho_stages = 3;
  // Log coordinates are confined to [-log_clamp, log_clamp].
  double log_clamp = 12.0;
};

enum class ObjectiveKind { kJGamma, kMaxFg, kSocialOmega };

struct Objective {
  ObjectiveKind kind = ObjectiveKind::kSocialOmega;
  double gamma = 0.5;  // kJGamma only

  static Objective JGamma(double gamma) { return {ObjectiveKind::kJGamma, gamma}; }
  static Objective MaxFg() { return {ObjectiveKind::kMaxFg, 0.0}; }
  static Objective SocialOmega() { return {ObjectiveKind::kSocialOmega, 0.0}; }
};

struct OptimizeResult {
  TransformedParams point;
  RateParams rates;
  BoundValue f_value = BoundValue::Infinite();
  BoundValue g_value = BoundValue::Infinite();
  double objective_value = 0.0;
  int iterations = 0;
  bool converged = false;
  // Some log coordinate ended on the clamp.
  bool at_boundary = false;
};

struct LogFg {
  double f = 0.0;
  double g = 0.0;
  LogPoint grad_f{};
  LogPoint grad_g{};
};

// f and g as explicit sums of exponentials in log coordinates, with exact
// gradients.
LogFg EvalLogFg(const LogPoint& z, const BoundInputs& in);

// kJGamma: gamma f + (1 - gamma) g, gamma in [0, 1] (kInvalidGamma
// otherwise). kMaxFg: max{f, g}. kSocialOmega: Omega, which increases in s
// and s', so it is minimized over (p, p') with s = s' = 0 exactly.
// Requires M, N > 0 (kDegenerateGame). Non-convergence is reported through
// OptimizeResult::converged rather than thrown.
OptimizeResult Minimize(const Objective& objective, const BoundInputs& in,
                        const OptimizeOptions& opts = {});

struct CoefficientResult {
  TransformedParams point;
  RateParams rates;
  double kappa = 0.0;
  int iterations = 0;
  bool converged = false;
};

// The four coefficients of M and N in f and g.
struct UnawareCoefficients {
  double m_in_f = 0.0;
  double n_in_f = 0.0;
  double m_in_g = 0.0;
  double n_in_g = 0.0;

  double Max() const;
};

UnawareCoefficients EvalUnawareCoefficients(const TransformedParams& point);

// Minimizes the largest of the four coefficients over a, a', s, s' > 0. The
// result does not depend on (m, n).
CoefficientResult MinimizeUnawareCoefficients(const OptimizeOptions& opts = {});

// Worst discrepancy between the analytic gradients of f, g and central
// differences with step h, over all eight partials, measured as
// |analytic - numeric| / max(1, |analytic|).
double GradientCheck(const LogPoint& z, const BoundInputs& in, double h);

}  // namespace ohedge

#endif  // OHEDGE_OPTIMIZER_H_
