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

#ifndef OHEDGE_LEARNERS_H_
#define OHEDGE_LEARNERS_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ohedge/game.h"
#include "ohedge/numeric.h"

namespace ohedge {

// A full-information online learner over d actions that maximizes the
// observed utility. Each round the caller asks for Next() and then reports
// the utility vector of that round through Observe().
class Learner {
 public:
  virtual ~Learner() = default;

  virtual int dim() const = 0;
  // 1-based index of the round whose strategy Next() returns.
  virtual int round() const = 0;
  // Strategy for the current round; calling it twice in a round returns the
  // same point.
  virtual Strategy Next() = 0;
  virtual void Observe(std::span<const double> utility) = 0;
};

// Optimistic Hedge with a fixed rate:
//   x_t(i) ∝ exp(rate * (sum_{s<t} u_s(i) + u_{t-1}(i))),  u_0 = 0.
// The weights are never stored; cumulative and last utilities are, and the
// exponent is max-shifted before exponentiation. rate == 0 plays uniform.
class OptimisticHedge final : public Learner {
 public:
  OptimisticHedge(int dim, double rate);

  int dim() const override { return static_cast<int>(last_.size()); }
  int round() const override { return round_; }
  double rate() const { return rate_; }
  std::span<const double> cumulative() const { return cum_; }
  std::span<const double> last() const { return last_; }

  Strategy Next() override;
  // Throws kDimensionMismatch or kUtilityOutOfRange (|u(i)| > 1).
  void Observe(std::span<const double> utility) override;

 private:
  double rate_;
  std::vector<double> cum_;
  std::vector<double> last_;
  int round_ = 1;
};

// Plays the running average of an inner optimistic-Hedge learner's outputs.
// Observe() takes the utility of the averaged play and reconstructs the
// utility the inner iterate would have seen,
//   u_hat_t = t * u_t - sum_{s<t} u_hat_s,
// which is then fed to the inner learner. Both running sums are compensated.
class AveragedHedge final : public Learner {
 public:
  // Reconstructed utilities may leave [-1, 1] by rounding; values within
  // this slack are clipped, anything further is an error.
  static constexpr double kReconstructionSlack = 1e-9;

  AveragedHedge(int dim, double rate);

  int dim() const override { return inner_.dim(); }
  int round() const override { return inner_.round(); }
  const OptimisticHedge& inner() const { return inner_; }

  Strategy Next() override;
  void Observe(std::span<const double> averaged_utility) override;

  // Inner iterate of the current round (after Next()) or of the last
  // observed round.
  const std::optional<Strategy>& last_inner() const { return inner_iterate_; }
  // Reconstructed utility fed to the inner learner on the last Observe().
  std::span<const double> last_reconstructed() const { return reconstructed_; }

 private:
  OptimisticHedge inner_;
  CompensatedVector hat_sum_;
  CompensatedVector iterate_sum_;
  std::optional<Strategy> inner_iterate_;
  std::optional<Strategy> current_;
  std::vector<double> reconstructed_;
};

// Plays the uniform distribution every round and ignores its utilities.
class UniformLearner final : public Learner {
 public:
  explicit UniformLearner(int dim);

  int dim() const override { return dim_; }
  int round() const override { return round_; }
  Strategy Next() override { return Strategy::Uniform(dim_); }
  void Observe(std::span<const double> utility) override;

 private:
  int dim_;
  int round_ = 1;
};

enum class Algorithm { kHedge, kAveraged };

std::string AlgorithmName(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(const std::string& name);

// A zero rate yields a UniformLearner for either algorithm (the averaged
// iterates of a uniform learner are uniform).
std::unique_ptr<Learner> MakeLearner(Algorithm algorithm, int dim, double rate);

}  // namespace ohedge

#endif  // OHEDGE_LEARNERS_H_
