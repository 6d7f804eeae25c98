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

#include <algorithm>
#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "ohedge/error.h"
#include "ohedge/learners.h"

namespace ohedge {
namespace {

template <typename Fn>
ErrorCode CodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no ohedge::Error thrown";
  return ErrorCode::kInvalidArgs;
}

TEST(PayoffMatrixTest, RejectsBadShapeAndEntries) {
  EXPECT_EQ(CodeOf([] { PayoffMatrix::Create(2, 2, {0.0, 0.0, 0.0}); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(CodeOf([] { PayoffMatrix::Create(1, 2, {0.5, 1.5}); }),
            ErrorCode::kEntryOutOfRange);
  EXPECT_EQ(CodeOf([] { PayoffMatrix::Create(1, 1, {NAN}); }),
            ErrorCode::kEntryOutOfRange);
}

TEST(PayoffMatrixTest, ProductsMatchNaiveSums) {
  const PayoffMatrix a = RandomMatrix(3, 4, 7);
  const std::vector<double> y = {0.1, 0.2, 0.3, 0.4};
  const std::vector<double> x = {0.5, 0.25, 0.25};
  std::vector<double> g(3), l(4);
  a.Multiply(y, g);
  a.MultiplyTransposed(x, l);
  double xg = 0.0, yl = 0.0;
  for (int i = 0; i < 3; ++i) {
    double ref = 0.0;
    for (int j = 0; j < 4; ++j) ref += a(i, j) * y[j];
    EXPECT_NEAR(g[i], ref, 1e-15);
    xg += x[i] * g[i];
  }
  for (int j = 0; j < 4; ++j) {
    double ref = 0.0;
    for (int i = 0; i < 3; ++i) ref += a(i, j) * x[i];
    EXPECT_NEAR(l[j], ref, 1e-15);
    yl += y[j] * l[j];
  }
  EXPECT_NEAR(xg, yl, 1e-14);
}

TEST(AdversarialMatrixTest, LayoutAndValidation) {
  const PayoffMatrix a = AdversarialMatrix(3, 4, 0.5);
  EXPECT_EQ(a(0, 0), 0.0);
  for (int j = 1; j < 4; ++j) EXPECT_EQ(a(0, j), 0.5);
  for (int i = 1; i < 3; ++i) {
    EXPECT_EQ(a(i, 0), -0.5);
    for (int j = 1; j < 4; ++j) EXPECT_EQ(a(i, j), 0.0);
  }
  EXPECT_EQ(CodeOf([] { AdversarialMatrix(2, 2, 0.0); }),
            ErrorCode::kInvalidDelta);
  EXPECT_EQ(CodeOf([] { AdversarialMatrix(2, 2, 1.5); }),
            ErrorCode::kInvalidDelta);
  EXPECT_EQ(CodeOf([] { AdversarialMatrix(1, 2, 1.0); }),
            ErrorCode::kTooFewActions);
}

TEST(AdversarialMatrixTest, FirstActionsDominateByDelta) {
  // Whatever the opponent plays, action 1 beats every other action by delta.
  const PayoffMatrix a = AdversarialMatrix(3, 5, 0.25);
  const Strategy x = Strategy::Create({0.2, 0.3, 0.5});
  const Strategy y = Strategy::Create({0.1, 0.1, 0.2, 0.3, 0.3});
  const Gradients grads = ComputeGradients(a, x, y);
  for (int i = 1; i < 3; ++i) EXPECT_NEAR(grads.gain[0] - grads.gain[i], 0.25, 1e-15);
  for (int j = 1; j < 5; ++j) EXPECT_NEAR(grads.loss[j] - grads.loss[0], 0.25, 1e-15);
}

TEST(RandomMatrixTest, SeededAndBounded) {
  const PayoffMatrix a = RandomMatrix(5, 6, 42);
  const PayoffMatrix b = RandomMatrix(5, 6, 42);
  const PayoffMatrix c = RandomMatrix(5, 6, 43);
  EXPECT_TRUE(std::equal(a.entries().begin(), a.entries().end(),
                         b.entries().begin()));
  EXPECT_FALSE(std::equal(a.entries().begin(), a.entries().end(),
                          c.entries().begin()));
  for (double e : a.entries()) EXPECT_LE(std::abs(e), 1.0);
}

TEST(ParseMatrixTest, ReadsCommentsAndRows) {
  std::istringstream in("# header comment\n2 3\n0.5 -1 1\n  # mid\n0 0.25 -0.75\n");
  const PayoffMatrix a = ParseMatrix(in);
  EXPECT_EQ(a.rows(), 2);
  EXPECT_EQ(a.cols(), 3);
  EXPECT_EQ(a(0, 1), -1.0);
  EXPECT_EQ(a(1, 2), -0.75);
}

TEST(ParseMatrixTest, RejectsMalformedInput) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    ParseMatrix(in);
  };
  EXPECT_EQ(CodeOf([&] { parse("2 2\n1 0\n0 1.5\n"); }),
            ErrorCode::kEntryOutOfRange);
  EXPECT_EQ(CodeOf([&] { parse("2 2\n1 0\n0\n"); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(CodeOf([&] { parse("2 2\n1 0\n"); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(CodeOf([&] { parse("2 2\n1 x\n0 1\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([&] { parse("two 2\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ReadMatrixFile("/nonexistent/matrix.txt"); }),
            ErrorCode::kIoError);
}

TEST(StrategyTest, Validation) {
  EXPECT_EQ(CodeOf([] { Strategy::Create({0.5, 0.6}); }),
            ErrorCode::kInvalidStrategy);
  EXPECT_EQ(CodeOf([] { Strategy::Create({1.5, -0.5}); }),
            ErrorCode::kInvalidStrategy);
  EXPECT_EQ(CodeOf([] { Strategy::FromWeights({1.0, INFINITY}); }),
            ErrorCode::kNonFiniteWeight);
  const Strategy u = Strategy::Uniform(4);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(u[i], 0.25);
  const Strategy w = Strategy::FromWeights({1.0, 3.0});
  EXPECT_DOUBLE_EQ(w[0], 0.25);
  EXPECT_DOUBLE_EQ(w[1], 0.75);
}

TEST(PlayMatchTest, TraceIsDeterministicAndComplete) {
  const PayoffMatrix a = RandomMatrix(4, 3, 11);
  OptimisticHedge x1(4, 0.3), y1(3, 0.4), x2(4, 0.3), y2(3, 0.4);
  const MatchTrace t1 = PlayMatch(a, x1, y1, 50);
  const MatchTrace t2 = PlayMatch(a, x2, y2, 50);
  ASSERT_EQ(t1.num_rounds(), 50);
  for (int t = 1; t <= 50; ++t) {
    EXPECT_EQ(t1.round(t).t, t);
    for (int i = 0; i < 4; ++i) EXPECT_EQ(t1.round(t).x[i], t2.round(t).x[i]);
    for (int j = 0; j < 3; ++j) EXPECT_EQ(t1.round(t).loss[j], t2.round(t).loss[j]);
  }
}

TEST(PlayMatchTest, GradientsMatchPlayedStrategies) {
  const PayoffMatrix a = RandomMatrix(3, 3, 5);
  OptimisticHedge x(3, 0.5), y(3, 0.5);
  const MatchTrace trace = PlayMatch(a, x, y, 20);
  for (const TraceRound& r : trace.rounds()) {
    const Gradients g = ComputeGradients(a, r.x, r.y);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(r.gain[i], g.gain[i]);
    for (int j = 0; j < 3; ++j) EXPECT_EQ(r.loss[j], g.loss[j]);
  }
}

TEST(PlayMatchTest, UniformOpponentGivesConstantGradient) {
  const PayoffMatrix a = RandomMatrix(3, 5, 9);
  OptimisticHedge x(3, 1.0);
  UniformLearner y(5);
  const MatchTrace trace = PlayMatch(a, x, y, 10);
  for (int t = 2; t <= 10; ++t) {
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(trace.round(t).gain[i], trace.round(1).gain[i]);
    }
  }
}

}  // namespace
}  // namespace ohedge
