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

#include "ohedge/game.h"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "ohedge/error.h"
#include "ohedge/learners.h"
#include "ohedge/numeric.h"

namespace ohedge {

PayoffMatrix PayoffMatrix::Create(int m, int n, std::vector<double> entries) {
  if (m < 1 || n < 1) {
    Fail(ErrorCode::kDimensionMismatch,
         "matrix needs at least one row and one column");
  }
  const std::size_t expected = static_cast<std::size_t>(m) * n;
  if (entries.size() != expected) {
    Fail(ErrorCode::kDimensionMismatch,
         "expected " + std::to_string(expected) + " entries, got " +
             std::to_string(entries.size()));
  }
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (!(std::abs(entries[k]) <= 1.0)) {
      std::ostringstream msg;
      msg << "entry (" << k / n + 1 << "," << k % n + 1 << ") = " << entries[k]
          << " is outside [-1, 1]";
      Fail(ErrorCode::kEntryOutOfRange, msg.str());
    }
  }
  return PayoffMatrix(m, n, std::move(entries));
}

void PayoffMatrix::Multiply(std::span<const double> y,
                            std::span<double> out) const {
  if (static_cast<int>(y.size()) != cols_ ||
      static_cast<int>(out.size()) != rows_) {
    Fail(ErrorCode::kDimensionMismatch, "A y: size mismatch");
  }
  for (int i = 0; i < rows_; ++i) {
    out[i] = Dot(std::span<const double>(entries_).subspan(
                     static_cast<std::size_t>(i) * cols_, cols_),
                 y);
  }
}

void PayoffMatrix::MultiplyTransposed(std::span<const double> x,
                                      std::span<double> out) const {
  if (static_cast<int>(x.size()) != rows_ ||
      static_cast<int>(out.size()) != cols_) {
    Fail(ErrorCode::kDimensionMismatch, "A^T x: size mismatch");
  }
  std::fill(out.begin(), out.end(), 0.0);
  for (int i = 0; i < rows_; ++i) {
    const double xi = x[i];
    const double* row = entries_.data() + static_cast<std::size_t>(i) * cols_;
    for (int j = 0; j < cols_; ++j) out[j] += xi * row[j];
  }
}

PayoffMatrix AdversarialMatrix(int m, int n, double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) {
    Fail(ErrorCode::kInvalidDelta, "delta must lie in (0, 1]");
  }
  if (m < 2 || n < 2) {
    Fail(ErrorCode::kTooFewActions, "both players need at least 2 actions");
  }
  std::vector<double> entries(static_cast<std::size_t>(m) * n, 0.0);
  for (int j = 1; j < n; ++j) entries[j] = delta;
  for (int i = 1; i < m; ++i) entries[static_cast<std::size_t>(i) * n] = -delta;
  return PayoffMatrix::Create(m, n, std::move(entries));
}

PayoffMatrix MatchingPennies() {
  return PayoffMatrix::Create(2, 2, {1.0, -1.0, -1.0, 1.0});
}

PayoffMatrix RandomMatrix(int m, int n, unsigned long long seed) {
  if (m < 1 || n < 1) Fail(ErrorCode::kDimensionMismatch, "empty matrix");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> entries(static_cast<std::size_t>(m) * n);
  for (double& e : entries) e = dist(rng);
  return PayoffMatrix::Create(m, n, std::move(entries));
}

PayoffMatrix ParseMatrix(std::istream& in) {
  std::vector<double> values;
  std::string line;
  int m = -1;
  int n = -1;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (m < 0) {
      if (!(fields >> m >> n) || m < 1 || n < 1) {
        Fail(ErrorCode::kParseError,
             "line " + std::to_string(line_no) + ": expected header \"m n\"");
      }
      std::string extra;
      if (fields >> extra) {
        Fail(ErrorCode::kParseError,
             "line " + std::to_string(line_no) + ": trailing header token");
      }
      continue;
    }
    std::size_t count = 0;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        Fail(ErrorCode::kParseError, "line " + std::to_string(line_no) +
                                         ": bad number '" + token + "'");
      }
      values.push_back(v);
      ++count;
    }
    if (count != static_cast<std::size_t>(n)) {
      Fail(ErrorCode::kDimensionMismatch,
           "line " + std::to_string(line_no) + ": expected " +
               std::to_string(n) + " values, got " + std::to_string(count));
    }
  }
  if (m < 0) Fail(ErrorCode::kParseError, "missing \"m n\" header");
  if (values.size() != static_cast<std::size_t>(m) * n) {
    Fail(ErrorCode::kDimensionMismatch,
         "expected " + std::to_string(m) + " rows, got " +
             std::to_string(values.size() / n));
  }
  return PayoffMatrix::Create(m, n, std::move(values));
}

PayoffMatrix ReadMatrixFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIoError, "cannot open " + path);
  return ParseMatrix(in);
}

Strategy Strategy::Create(std::vector<double> probs) {
  if (probs.empty()) Fail(ErrorCode::kInvalidStrategy, "empty strategy");
  CompensatedSum total;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      Fail(ErrorCode::kInvalidStrategy, "negative or non-finite probability");
    }
    total.Add(p);
  }
  if (std::abs(total.value() - 1.0) > kSumTolerance) {
    Fail(ErrorCode::kInvalidStrategy, "probabilities do not sum to 1");
  }
  return Strategy(std::move(probs));
}

Strategy Strategy::Uniform(int d) {
  if (d < 1) Fail(ErrorCode::kDimensionMismatch, "uniform over zero actions");
  return Strategy(std::vector<double>(d, 1.0 / d));
}

Strategy Strategy::FromWeights(std::vector<double> weights) {
  CompensatedSum total;
  for (double w : weights) total.Add(w);
  const double z = total.value();
  if (!(z > 0.0) || !std::isfinite(z)) {
    Fail(ErrorCode::kNonFiniteWeight, "weights cannot be normalized");
  }
  for (double& w : weights) w /= z;
  return Strategy(std::move(weights));
}

Gradients ComputeGradients(const PayoffMatrix& a, const Strategy& x,
                           const Strategy& y) {
  if (x.size() != a.rows() || y.size() != a.cols()) {
    Fail(ErrorCode::kDimensionMismatch, "strategy sizes do not match matrix");
  }
  Gradients out{std::vector<double>(a.rows()), std::vector<double>(a.cols())};
  a.Multiply(y.probs(), out.gain);
  a.MultiplyTransposed(x.probs(), out.loss);
  return out;
}

void MatchTrace::Append(const RoundView& round) {
  rounds_.push_back(TraceRound{
      round.t, Strategy({round.x.begin(), round.x.end()}),
      Strategy({round.y.begin(), round.y.end()}),
      {round.gain.begin(), round.gain.end()},
      {round.loss.begin(), round.loss.end()}});
}

void PlayMatch(const PayoffMatrix& a, Learner& x_learner, Learner& y_learner,
               int num_rounds, const RoundSink& sink) {
  if (num_rounds < 0) Fail(ErrorCode::kInvalidArgs, "negative horizon");
  if (x_learner.dim() != a.rows() || y_learner.dim() != a.cols()) {
    Fail(ErrorCode::kDimensionMismatch,
         "learner dimensions do not match the matrix");
  }
  std::vector<double> gain(a.rows());
  std::vector<double> loss(a.cols());
  std::vector<double> neg_loss(a.cols());
  for (int t = 1; t <= num_rounds; ++t) {
    const Strategy x = x_learner.Next();
    const Strategy y = y_learner.Next();
    a.Multiply(y.probs(), gain);
    a.MultiplyTransposed(x.probs(), loss);
    if (sink) sink(RoundView{t, x.probs(), y.probs(), gain, loss});
    for (std::size_t j = 0; j < loss.size(); ++j) neg_loss[j] = -loss[j];
    x_learner.Observe(gain);
    y_learner.Observe(neg_loss);
  }
}

MatchTrace PlayMatch(const PayoffMatrix& a, Learner& x_learner,
                     Learner& y_learner, int num_rounds) {
  MatchTrace trace;
  PlayMatch(a, x_learner, y_learner, num_rounds,
            [&trace](const RoundView& round) { trace.Append(round); });
  return trace;
}

}  // namespace ohedge
