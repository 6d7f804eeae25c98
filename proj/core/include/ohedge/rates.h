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

// Learning-rate parameters lambda = (eta, eta', c, c') for a pair of
// optimistic-Hedge players and the regret-bound functions built on them.
//
// With M = log m and N = log n:
//   omega  = M / eta  + eta  / (2c)
//   omega' = N / eta' + eta' / (2c')
//   Omega  = omega + omega'                      (social regret bound)
//   f = omega  + (eta/(2c))   / ((1-c')/(2eta') - eta/(2c))   * Omega
//   g = omega' + (eta'/(2c')) / ((1-c)/(2eta)  - eta'/(2c'))  * Omega
// valid on the feasible region eta*eta' <= min{c'(1-c), c(1-c')}.

#ifndef OHEDGE_RATES_H_
#define OHEDGE_RATES_H_

#include <compare>
#include <optional>

namespace ohedge {

struct RateParams {
  double eta = 0.0;
  double eta_prime = 0.0;
  double c = 1.0;
  double c_prime = 1.0;

  // Throws kInvalidArgs unless eta, eta' >= 0 and c, c' > 0.
  static RateParams Create(double eta, double eta_prime, double c,
                           double c_prime);
};

// Coordinates in which f and g are posynomials:
//   a = eta / c, a' = eta' / c', b = 1/c - 1, s = b / a - a' (and primed).
struct TransformedParams {
  double a = 0.0;
  double a_prime = 0.0;
  double s = 0.0;
  double s_prime = 0.0;

  // Log coordinates (p, p', q, q'); only defined when s, s' > 0.
  bool has_log() const { return s > 0.0 && s_prime > 0.0; }
  double p() const;
  double p_prime() const;
  double q() const;
  double q_prime() const;

  static TransformedParams FromLog(double p, double p_prime, double q,
                                   double q_prime);
};

// Throws kOutOfDomain unless c, c' lie in (0, 1) and eta, eta' > 0.
TransformedParams ToTransformed(const RateParams& rates);
// Inverse map c = 1 / (1 + a(a' + s)), eta = c a (and primed). Throws
// kOutOfDomain unless a, a' > 0 and s, s' >= 0.
RateParams FromTransformed(const TransformedParams& point);

struct BoundInputs {
  double log_m = 0.0;        // M
  double log_n = 0.0;        // N
  double log_m_half = 0.5;   // M' = M + 1/2
  double log_n_half = 0.5;   // N' = N + 1/2
  double d = 0.0;            // sqrt(M'N') + sqrt(MN)

  static BoundInputs FromActions(int m, int n);
  static BoundInputs FromLogs(double log_m, double log_n);
};

// Relative tolerance for deciding that a point sits on a boundary of the
// feasible region.
inline constexpr double kBoundaryTolerance = 1e-12;

// eta*eta' <= c'(1-c) and eta*eta' <= c(1-c'). A product that exceeds a
// right-hand side by no more than kBoundaryTolerance (relative) is treated as
// lying on that boundary and is feasible.
bool IsFeasible(const RateParams& rates);

struct OmegaValues {
  double omega = 0.0;
  double omega_prime = 0.0;
  double total = 0.0;
};

// Throws kZeroRate if eta or eta' is 0.
OmegaValues BoundOmega(const RateParams& rates, const BoundInputs& in);

// A regret bound that may be +infinity on the boundary of the feasible
// region. Infinite values compare greater than every finite one.
class BoundValue {
 public:
  static BoundValue Finite(double v) { return BoundValue(v, false); }
  static BoundValue Infinite() { return BoundValue(0.0, true); }

  bool is_infinite() const { return infinite_; }
  // Only meaningful when finite.
  double value() const { return value_; }
  // value() or +inf as a double, for printing.
  double AsDouble() const;

  std::partial_ordering operator<=>(const BoundValue& other) const;
  bool operator==(const BoundValue& other) const = default;

 private:
  BoundValue(double v, bool infinite) : value_(v), infinite_(infinite) {}

  double value_;
  bool infinite_;
};

struct FgValues {
  BoundValue f = BoundValue::Infinite();
  BoundValue g = BoundValue::Infinite();
};

// Throws kInfeasible outside the feasible region and kZeroRate for a zero
// rate.
FgValues BoundFg(const RateParams& rates, const BoundInputs& in);
// Same bounds in (a, a', s, s') form; s' = 0 makes f infinite, s = 0 makes g
// infinite.
FgValues BoundFgTransformed(const TransformedParams& point,
                            const BoundInputs& in);

}  // namespace ohedge

#endif  // OHEDGE_RATES_H_
