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

#include "ohedge/rates.h"

#include <cmath>
#include <limits>

#include "ohedge/error.h"

namespace ohedge {
namespace {

bool Ties(double lhs, double rhs) {
  return std::abs(lhs - rhs) <=
         kBoundaryTolerance * std::max(std::abs(lhs), std::abs(rhs));
}

void CheckLog(const TransformedParams& tp) {
  if (!tp.has_log()) {
    Fail(ErrorCode::kOutOfDomain, "log coordinates need s, s' > 0");
  }
}

}  // namespace

RateParams RateParams::Create(double eta, double eta_prime, double c,
                              double c_prime) {
  if (!(eta >= 0.0) || !(eta_prime >= 0.0) || !std::isfinite(eta) ||
      !std::isfinite(eta_prime)) {
    Fail(ErrorCode::kInvalidArgs, "learning rates must be finite and >= 0");
  }
  if (!(c > 0.0) || !(c_prime > 0.0) || !std::isfinite(c) ||
      !std::isfinite(c_prime)) {
    Fail(ErrorCode::kInvalidArgs, "c and c' must be finite and > 0");
  }
  return RateParams{eta, eta_prime, c, c_prime};
}

double TransformedParams::p() const {
  CheckLog(*this);
  return std::log(a);
}
double TransformedParams::p_prime() const {
  CheckLog(*this);
  return std::log(a_prime);
}
double TransformedParams::q() const {
  CheckLog(*this);
  return std::log(s);
}
double TransformedParams::q_prime() const {
  CheckLog(*this);
  return std::log(s_prime);
}

TransformedParams TransformedParams::FromLog(double p, double p_prime,
                                             double q, double q_prime) {
  return TransformedParams{std::exp(p), std::exp(p_prime), std::exp(q),
                           std::exp(q_prime)};
}

TransformedParams ToTransformed(const RateParams& rates) {
  if (!(rates.c > 0.0 && rates.c < 1.0) ||
      !(rates.c_prime > 0.0 && rates.c_prime < 1.0)) {
    Fail(ErrorCode::kOutOfDomain, "c and c' must lie in (0, 1)");
  }
  if (!(rates.eta > 0.0) || !(rates.eta_prime > 0.0)) {
    Fail(ErrorCode::kOutOfDomain, "transformed coordinates need eta, eta' > 0");
  }
  const double a = rates.eta / rates.c;
  const double a_prime = rates.eta_prime / rates.c_prime;
  const double b = 1.0 / rates.c - 1.0;
  const double b_prime = 1.0 / rates.c_prime - 1.0;
  return TransformedParams{a, a_prime, b / a - a_prime, b_prime / a_prime - a};
}

RateParams FromTransformed(const TransformedParams& tp) {
  if (!(tp.a > 0.0) || !(tp.a_prime > 0.0) || !(tp.s >= 0.0) ||
      !(tp.s_prime >= 0.0)) {
    Fail(ErrorCode::kOutOfDomain, "need a, a' > 0 and s, s' >= 0");
  }
  const double c = 1.0 / (1.0 + tp.a * (tp.a_prime + tp.s));
  const double c_prime = 1.0 / (1.0 + tp.a_prime * (tp.a + tp.s_prime));
  return RateParams{c * tp.a, c_prime * tp.a_prime, c, c_prime};
}

BoundInputs BoundInputs::FromActions(int m, int n) {
  if (m < 1 || n < 1) Fail(ErrorCode::kInvalidArgs, "m, n must be >= 1");
  return FromLogs(std::log(static_cast<double>(m)),
                  std::log(static_cast<double>(n)));
}

BoundInputs BoundInputs::FromLogs(double log_m, double log_n) {
  if (!(log_m >= 0.0) || !(log_n >= 0.0)) {
    Fail(ErrorCode::kInvalidArgs, "M and N must be >= 0");
  }
  BoundInputs in;
  in.log_m = log_m;
  in.log_n = log_n;
  in.log_m_half = log_m + 0.5;
  in.log_n_half = log_n + 0.5;
  in.d = std::sqrt(in.log_m_half * in.log_n_half) + std::sqrt(log_m * log_n);
  return in;
}

bool IsFeasible(const RateParams& r) {
  const double product = r.eta * r.eta_prime;
  const double rhs_g = r.c_prime * (1.0 - r.c);
  const double rhs_f = r.c * (1.0 - r.c_prime);
  return (product <= rhs_g || Ties(product, rhs_g)) &&
         (product <= rhs_f || Ties(product, rhs_f));
}

OmegaValues BoundOmega(const RateParams& r, const BoundInputs& in) {
  if (r.eta == 0.0 || r.eta_prime == 0.0) {
    Fail(ErrorCode::kZeroRate, "omega needs eta, eta' > 0");
  }
  OmegaValues out;
  out.omega = in.log_m / r.eta + r.eta / (2.0 * r.c);
  out.omega_prime = in.log_n / r.eta_prime + r.eta_prime / (2.0 * r.c_prime);
  out.total = out.omega + out.omega_prime;
  return out;
}

double BoundValue::AsDouble() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

std::partial_ordering BoundValue::operator<=>(const BoundValue& other) const {
  if (infinite_ || other.infinite_) {
    return static_cast<int>(infinite_) <=> static_cast<int>(other.infinite_);
  }
  return value_ <=> other.value_;
}

FgValues BoundFg(const RateParams& r, const BoundInputs& in) {
  const OmegaValues omega = BoundOmega(r, in);
  if (!IsFeasible(r)) {
    Fail(ErrorCode::kInfeasible, "eta*eta' exceeds min{c'(1-c), c(1-c')}");
  }
  const double product = r.eta * r.eta_prime;
  const double x_penalty = r.eta / (2.0 * r.c);
  const double y_penalty = r.eta_prime / (2.0 * r.c_prime);
  FgValues out;
  if (!Ties(product, r.c * (1.0 - r.c_prime))) {
    const double slack = (1.0 - r.c_prime) / (2.0 * r.eta_prime) - x_penalty;
    out.f = BoundValue::Finite(omega.omega + x_penalty / slack * omega.total);
  }
  if (!Ties(product, r.c_prime * (1.0 - r.c))) {
    const double slack = (1.0 - r.c) / (2.0 * r.eta) - y_penalty;
    out.g =
        BoundValue::Finite(omega.omega_prime + y_penalty / slack * omega.total);
  }
  return out;
}

FgValues BoundFgTransformed(const TransformedParams& tp,
                            const BoundInputs& in) {
  if (!(tp.a > 0.0) || !(tp.a_prime > 0.0) || !(tp.s >= 0.0) ||
      !(tp.s_prime >= 0.0)) {
    Fail(ErrorCode::kOutOfDomain, "need a, a' > 0 and s, s' >= 0");
  }
  const double m = in.log_m;
  const double n = in.log_n;
  const double a = tp.a;
  const double ap = tp.a_prime;
  const double h = m / a + (n + 0.5) * a + n / ap + (m + 0.5) * ap;
  FgValues out;
  if (tp.s_prime > 0.0) {
    out.f = BoundValue::Finite((m / a + ap * m + a / 2.0 + a * n) + tp.s * m +
                               a / tp.s_prime * (h + tp.s * m));
  }
  if (tp.s > 0.0) {
    out.g = BoundValue::Finite((n / ap + a * n + ap / 2.0 + ap * m) +
                               tp.s_prime * n +
                               ap / tp.s * (h + tp.s_prime * n));
  }
  return out;
}

}  // namespace ohedge
