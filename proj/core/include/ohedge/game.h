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

// Two-player zero-sum matrix games and the round protocol that drives two
// learners against each other. The x-player (rows) maximizes <x, A y>, the
// y-player (columns) minimizes it.

#ifndef OHEDGE_GAME_H_
#define OHEDGE_GAME_H_

#include <functional>
#include <istream>
#include <span>
#include <string>
#include <vector>

namespace ohedge {

class Learner;

// Dense row-major m x n matrix with entries in [-1, 1].
class PayoffMatrix {
 public:
  // Throws kDimensionMismatch if entries.size() != m * n and
  // kEntryOutOfRange if any |entry| > 1 (or is not finite).
  static PayoffMatrix Create(int m, int n, std::vector<double> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  std::span<const double> entries() const { return entries_; }

  // out = A y (length m).
  void Multiply(std::span<const double> y, std::span<double> out) const;
  // out = A^T x (length n).
  void MultiplyTransposed(std::span<const double> x,
                          std::span<double> out) const;

 private:
  PayoffMatrix(int m, int n, std::vector<double> entries)
      : rows_(m), cols_(n), entries_(std::move(entries)) {}

  int rows_;
  int cols_;
  std::vector<double> entries_;
};

// The lower-bound instance: A(1,1) = 0, A(1,j) = delta for j != 1,
// A(i,1) = -delta for i != 1, zero elsewhere. Action 1 is dominant for both
// players.
PayoffMatrix AdversarialMatrix(int m, int n, double delta);

PayoffMatrix MatchingPennies();

// Entries drawn i.i.d. uniform on [-1, 1] from a 64-bit Mersenne twister.
PayoffMatrix RandomMatrix(int m, int n, unsigned long long seed);

// Text format: the first non-comment line is "m n", followed by m rows of n
// reals. Lines whose first non-blank character is '#' are ignored.
PayoffMatrix ParseMatrix(std::istream& in);
PayoffMatrix ReadMatrixFile(const std::string& path);

// A point on the probability simplex.
class Strategy {
 public:
  static constexpr double kSumTolerance = 1e-12;

  // Throws kInvalidStrategy unless every coordinate is >= 0 and the
  // coordinates sum to 1 within kSumTolerance.
  static Strategy Create(std::vector<double> probs);
  static Strategy Uniform(int d);
  // Normalizes nonnegative weights; used by learners whose output is a
  // simplex point by construction.
  static Strategy FromWeights(std::vector<double> weights);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }

 private:
  friend class MatchTrace;
  explicit Strategy(std::vector<double> probs) : probs_(std::move(probs)) {}

  std::vector<double> probs_;
};

struct Gradients {
  std::vector<double> gain;  // g = A y, observed by the x-player.
  std::vector<double> loss;  // l = A^T x, observed by the y-player.
};

Gradients ComputeGradients(const PayoffMatrix& a, const Strategy& x,
                           const Strategy& y);

// Non-owning view of one round of play.
struct RoundView {
  int t;
  std::span<const double> x;
  std::span<const double> y;
  std::span<const double> gain;
  std::span<const double> loss;
};

struct TraceRound {
  int t;
  Strategy x;
  Strategy y;
  std::vector<double> gain;
  std::vector<double> loss;
};

// Full per-round record of a match.
class MatchTrace {
 public:
  MatchTrace() = default;

  void Append(const RoundView& round);

  int num_rounds() const { return static_cast<int>(rounds_.size()); }
  const std::vector<TraceRound>& rounds() const { return rounds_; }
  const TraceRound& round(int t) const { return rounds_[t - 1]; }

 private:
  std::vector<TraceRound> rounds_;
};

using RoundSink = std::function<void(const RoundView&)>;

// Plays T rounds. Both strategies of a round are drawn before either
// gradient is revealed; the x-learner observes g_t and the y-learner
// observes -l_t (learners maximize their observed utility). Every round is
// passed to the sink in order.
void PlayMatch(const PayoffMatrix& a, Learner& x_learner, Learner& y_learner,
               int num_rounds, const RoundSink& sink);

// Convenience overload that records the full trace.
MatchTrace PlayMatch(const PayoffMatrix& a, Learner& x_learner,
                     Learner& y_learner, int num_rounds);

}  // namespace ohedge

#endif  // OHEDGE_GAME_H_
