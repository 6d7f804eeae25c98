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

// Regret and equilibrium metrics, plus closed-form facts about optimistic
// Hedge on the adversarial instance (trajectory and regret lower bounds).

#ifndef OHEDGE_ANALYSIS_H_
#define OHEDGE_ANALYSIS_H_

#include <vector>

#include "ohedge/game.h"
#include "ohedge/numeric.h"

namespace ohedge {

// Running metrics after t rounds.
struct RegretSnapshot {
  int t = 0;
  double reg_x = 0.0;
  double reg_y = 0.0;
  double social = 0.0;
  double max_individual = 0.0;
  double dreg_x = 0.0;
  double dreg_y = 0.0;
  // Nash gap of the pair played at round t: max_i g_t(i) - min_j l_t(j).
  double nash_gap = 0.0;
  // Nash gap of the time-averaged pair up to round t.
  double average_nash_gap = 0.0;
};

// Single-pass regret bookkeeping. Fixed comparators are pure actions, so the
// meter keeps per-action cumulative gains and losses and never stores the
// history.
class RegretMeter {
 public:
  RegretMeter(int m, int n);

  void Record(const RoundView& round);
  RegretSnapshot Snapshot() const;
  int rounds() const { return t_; }

 private:
  int t_ = 0;
  CompensatedVector cum_gain_;
  CompensatedVector cum_loss_;
  CompensatedSum payoff_x_;  // sum_t <x_t, g_t>
  CompensatedSum payoff_y_;  // sum_t <y_t, l_t>
  CompensatedSum dreg_x_;
  CompensatedSum dreg_y_;
  double last_gap_ = 0.0;
};

struct RegretReport {
  double reg_x = 0.0;
  double reg_y = 0.0;
  double social = 0.0;
  double max_individual = 0.0;
  double dreg_x = 0.0;
  double dreg_y = 0.0;
  std::vector<RegretSnapshot> per_round;  // filled on request
};

// Dimensions come from the trace; an empty trace gives an all-zero report.
RegretReport MakeRegretReport(const MatchTrace& trace,
                              bool keep_per_round = false);

// max_i (A y)(i) - min_j (A^T x)(j); (x, y) is an eps-approximate Nash
// equilibrium for every eps at or above this value.
double NashGap(const PayoffMatrix& a, const Strategy& x, const Strategy& y);

// x_t(1) for optimistic Hedge with rate eta on AdversarialMatrix(m, ., delta):
// 1/m at t = 1 and 1 / (1 + (m - 1) exp(-eta * delta * t)) for t >= 2. The
// same formula with (n, eta') gives y_t(1). Throws kInvalidArgs.
double OracleFirstAction(int m, double eta, double delta, int t);

enum class RateBranch { kLargeRate, kSmallRate };

struct LowerBoundValue {
  double delta_star = 1.0;  // payoff gap of the instance that attains it
  double value = 0.0;
  RateBranch branch = RateBranch::kLargeRate;
};

// External-regret lower bound for optimistic Hedge with rate eta over T
// rounds, with the maximizing gap delta* = min{1, log((m-1)(T+1)) /
// (eta (T+1))}.
LowerBoundValue LowerBoundExternal(int m, double eta, long horizon);

// Dynamic-regret lower bound for averaged optimistic Hedge, with
// kappa = sqrt(T+1) + 1 and delta = min{1, log((m-1) kappa) / (eta kappa)}.
LowerBoundValue LowerBoundDynamic(int m, double eta, long horizon);

}  // namespace ohedge

#endif  // OHEDGE_ANALYSIS_H_
