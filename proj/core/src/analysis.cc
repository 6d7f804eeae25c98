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

#include "ohedge/analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ohedge/error.h"

namespace ohedge {

RegretMeter::RegretMeter(int m, int n) : cum_gain_(m), cum_loss_(n) {}

void RegretMeter::Record(const RoundView& round) {
  if (round.gain.size() != cum_gain_.size() ||
      round.loss.size() != cum_loss_.size()) {
    Fail(ErrorCode::kDimensionMismatch, "round does not match meter size");
  }
  ++t_;
  const double px = Dot(round.x, round.gain);
  const double py = Dot(round.y, round.loss);
  cum_gain_.Add(round.gain);
  cum_loss_.Add(round.loss);
  payoff_x_.Add(px);
  payoff_y_.Add(py);
  const double best_gain = *std::max_element(round.gain.begin(), round.gain.end());
  const double best_loss = *std::min_element(round.loss.begin(), round.loss.end());
  dreg_x_.Add(best_gain - px);
  dreg_y_.Add(py - best_loss);
  last_gap_ = best_gain - best_loss;
}

RegretSnapshot RegretMeter::Snapshot() const {
  RegretSnapshot s;
  s.t = t_;
  if (t_ == 0) return s;
  double max_gain = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cum_gain_.size(); ++i) {
    max_gain = std::max(max_gain, cum_gain_[i]);
  }
  double min_loss = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < cum_loss_.size(); ++j) {
    min_loss = std::min(min_loss, cum_loss_[j]);
  }
  s.reg_x = max_gain - payoff_x_.value();
  s.reg_y = payoff_y_.value() - min_loss;
  s.social = s.reg_x + s.reg_y;
  s.max_individual = std::max(s.reg_x, s.reg_y);
  s.dreg_x = dreg_x_.value();
  s.dreg_y = dreg_y_.value();
  s.nash_gap = last_gap_;
  s.average_nash_gap = (max_gain - min_loss) / t_;
  return s;
}

RegretReport MakeRegretReport(const MatchTrace& trace, bool keep_per_round) {
  RegretReport report;
  if (trace.num_rounds() == 0) return report;
  RegretMeter meter(trace.round(1).x.size(), trace.round(1).y.size());
  for (const TraceRound& r : trace.rounds()) {
    meter.Record(RoundView{r.t, r.x.probs(), r.y.probs(), r.gain, r.loss});
    if (keep_per_round) report.per_round.push_back(meter.Snapshot());
  }
  const RegretSnapshot s = meter.Snapshot();
  report.reg_x = s.reg_x;
  report.reg_y = s.reg_y;
  report.social = s.social;
  report.max_individual = s.max_individual;
  report.dreg_x = s.dreg_x;
  report.dreg_y = s.dreg_y;
  return report;
}

double NashGap(const PayoffMatrix& a, const Strategy& x, const Strategy& y) {
  const Gradients grads = ComputeGradients(a, x, y);
  return *std::max_element(grads.gain.begin(), grads.gain.end()) -
         *std::min_element(grads.loss.begin(), grads.loss.end());
}

double OracleFirstAction(int m, double eta, double delta, int t) {
  if (m < 2 || !(eta >= 0.0) || !(delta > 0.0 && delta <= 1.0) || t < 1) {
    Fail(ErrorCode::kInvalidArgs,
         "need m >= 2, eta >= 0, delta in (0, 1], t >= 1");
  }
  if (t == 1) return 1.0 / m;
  const double alpha = (m - 1) * std::exp(-eta * delta * t);
  return 1.0 / (1.0 + alpha);
}

namespace {

void CheckLowerBoundArgs(int m, double eta, long horizon) {
  if (m < 2 || !(eta > 0.0) || !std::isfinite(eta) || horizon < 1) {
    Fail(ErrorCode::kInvalidArgs, "need m >= 2, eta > 0, T >= 1");
  }
}

// Shared shape of both bounds: with effective horizon k and scale factor,
//   large rate (eta >= log((m-1)k)/k): scale log m / eta - (log((m-1)k)+1)/(eta k)
//   small rate:                       scale (log m - eta - (m-1)e^{-eta k}) / eta
LowerBoundValue TwoBranchBound(int m, double eta, double k, double scale) {
  const double log_mk = std::log((m - 1) * k);
  const double threshold = log_mk / k;
  LowerBoundValue out;
  out.delta_star = std::min(1.0, log_mk / (eta * k));
  const double log_m = std::log(static_cast<double>(m));
  if (eta >= threshold) {
    out.branch = RateBranch::kLargeRate;
    out.value = scale * log_m / eta - (log_mk + 1.0) / (eta * k);
  } else {
    out.branch = RateBranch::kSmallRate;
    out.value = scale * (log_m - eta - (m - 1) * std::exp(-eta * k)) / eta;
  }
  return out;
}

}  // namespace

LowerBoundValue LowerBoundExternal(int m, double eta, long horizon) {
  CheckLowerBoundArgs(m, eta, horizon);
  return TwoBranchBound(m, eta, static_cast<double>(horizon) + 1.0, 1.0);
}

LowerBoundValue LowerBoundDynamic(int m, double eta, long horizon) {
  CheckLowerBoundArgs(m, eta, horizon);
  const double t1 = static_cast<double>(horizon) + 1.0;
  const double kappa = std::sqrt(t1) + 1.0;
  return TwoBranchBound(m, eta, kappa, std::log(t1) / 2.0);
}

}  // namespace ohedge
