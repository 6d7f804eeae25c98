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

#include "ohedge/learners.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ohedge/error.h"

namespace ohedge {
namespace {

void CheckUtility(std::span<const double> utility, int dim) {
  if (static_cast<int>(utility.size()) != dim) {
    Fail(ErrorCode::kDimensionMismatch,
         "utility has " + std::to_string(utility.size()) +
             " entries, learner has " + std::to_string(dim) + " actions");
  }
  for (double u : utility) {
    if (!(std::abs(u) <= 1.0)) {
      Fail(ErrorCode::kUtilityOutOfRange,
           "utility " + std::to_string(u) + " outside [-1, 1]");
    }
  }
}

}  // namespace

OptimisticHedge::OptimisticHedge(int dim, double rate)
    : rate_(rate), cum_(dim, 0.0), last_(dim, 0.0) {
  if (dim < 1) Fail(ErrorCode::kDimensionMismatch, "learner needs >= 1 action");
  if (!(rate >= 0.0) || !std::isfinite(rate)) {
    Fail(ErrorCode::kInvalidArgs, "learning rate must be finite and >= 0");
  }
}

Strategy OptimisticHedge::Next() {
  const int d = dim();
  if (rate_ == 0.0) return Strategy::Uniform(d);

  std::vector<double> z(d);
  double top = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < d; ++i) {
    z[i] = rate_ * (cum_[i] + last_[i]);
    if (!std::isfinite(z[i])) {
      Fail(ErrorCode::kNonFiniteWeight, "non-finite exponent at action " +
                                            std::to_string(i + 1));
    }
    top = std::max(top, z[i]);
  }
  for (double& v : z) v = std::exp(v - top);
  return Strategy::FromWeights(std::move(z));
}

void OptimisticHedge::Observe(std::span<const double> utility) {
  CheckUtility(utility, dim());
  for (std::size_t i = 0; i < cum_.size(); ++i) {
    cum_[i] += utility[i];
    last_[i] = utility[i];
  }
  ++round_;
}

AveragedHedge::AveragedHedge(int dim, double rate)
    : inner_(dim, rate),
      hat_sum_(dim),
      iterate_sum_(dim),
      reconstructed_(dim, 0.0) {}

Strategy AveragedHedge::Next() {
  if (current_) return *current_;
  inner_iterate_ = inner_.Next();
  iterate_sum_.Add(inner_iterate_->probs());
  const double t = inner_.round();
  std::vector<double> avg = iterate_sum_.Values();
  for (double& v : avg) v /= t;
  current_ = Strategy::FromWeights(std::move(avg));
  return *current_;
}

void AveragedHedge::Observe(std::span<const double> averaged_utility) {
  if (static_cast<int>(averaged_utility.size()) != dim()) {
    Fail(ErrorCode::kDimensionMismatch, "utility size does not match learner");
  }
  // The utility belongs to this round's averaged play, so the iterate must
  // have been drawn already.
  if (!current_) Next();
  const double t = inner_.round();
  for (int i = 0; i < dim(); ++i) {
    double u = t * averaged_utility[i] - hat_sum_[i];
    if (std::abs(u) > 1.0) {
      if (std::abs(u) > 1.0 + kReconstructionSlack) {
        Fail(ErrorCode::kUtilityOutOfRange,
             "reconstructed utility " + std::to_string(u) + " outside [-1, 1]");
      }
      u = std::copysign(1.0, u);
    }
    reconstructed_[i] = u;
  }
  inner_.Observe(reconstructed_);
  hat_sum_.Add(reconstructed_);
  current_.reset();
}

UniformLearner::UniformLearner(int dim) : dim_(dim) {
  if (dim < 1) Fail(ErrorCode::kDimensionMismatch, "learner needs >= 1 action");
}

void UniformLearner::Observe(std::span<const double> utility) {
  CheckUtility(utility, dim_);
  ++round_;
}

std::string AlgorithmName(Algorithm algorithm) {
  return algorithm == Algorithm::kHedge ? "hedge" : "averaged";
}

std::optional<Algorithm> ParseAlgorithm(const std::string& name) {
  if (name == "hedge") return Algorithm::kHedge;
  if (name == "averaged") return Algorithm::kAveraged;
  return std::nullopt;
}

std::unique_ptr<Learner> MakeLearner(Algorithm algorithm, int dim,
                                     double rate) {
  if (rate == 0.0) return std::make_unique<UniformLearner>(dim);
  if (algorithm == Algorithm::kAveraged) {
    return std::make_unique<AveragedHedge>(dim, rate);
  }
  return std::make_unique<OptimisticHedge>(dim, rate);
}

}  // namespace ohedge
