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

#include "ohedge/optimizer.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "ohedge/error.h"

namespace ohedge {
namespace {

// coef * exp(<exponents, z>)
struct Monomial {
  double coef;
  LogPoint exponents;
};

using Posynomial = std::vector<Monomial>;

double EvalPosynomial(const Posynomial& poly, const LogPoint& z,
                      LogPoint& grad) {
  grad = {};
  double value = 0.0;
  for (const Monomial& mono : poly) {
    if (mono.coef == 0.0) continue;
    double arg = 0.0;
    for (int k = 0; k < 4; ++k) arg += mono.exponents[k] * z[k];
    const double term = mono.coef * std::exp(arg);
    value += term;
    for (int k = 0; k < 4; ++k) grad[k] += mono.exponents[k] * term;
  }
  return value;
}

// Coordinates: 0 = p, 1 = p', 2 = q, 3 = q'.
Posynomial BuildF(const BoundInputs& in) {
  const double m = in.log_m;
  const double n = in.log_n;
  return {
      {m, {-1, 0, 0, 0}},       {m, {0, 1, 0, 0}},
      {n + 0.5, {1, 0, 0, 0}},  {m, {0, 0, 1, 0}},
      {m, {0, 0, 0, -1}},       {m + 0.5, {1, 1, 0, -1}},
      {n, {1, -1, 0, -1}},      {n + 0.5, {2, 0, 0, -1}},
      {m, {1, 0, 1, -1}},
  };
}

Posynomial BuildG(const BoundInputs& in) {
  const double m = in.log_m;
  const double n = in.log_n;
  return {
      {n, {0, -1, 0, 0}},       {n, {1, 0, 0, 0}},
      {m + 0.5, {0, 1, 0, 0}},  {n, {0, 0, 0, 1}},
      {n, {0, 0, -1, 0}},       {m + 0.5, {0, 2, -1, 0}},
      {n + 0.5, {1, 1, -1, 0}}, {m, {-1, 1, -1, 0}},
      {n, {0, 1, -1, 1}},
  };
}

// Omega at s = s' = 0 as a function of (p, p').
Posynomial BuildSocial(const BoundInputs& in) {
  return {
      {in.log_m, {-1, 0, 0, 0}},
      {in.log_n + 0.5, {1, 0, 0, 0}},
      {in.log_n, {0, -1, 0, 0}},
      {in.log_m + 0.5, {0, 1, 0, 0}},
  };
}

std::array<Posynomial, 4> BuildCoefficients() {
  return {{
      // coefficient of M in f: (1 + a/s')(1/a + a' + s)
      {{1, {-1, 0, 0, 0}},
       {1, {0, 1, 0, 0}},
       {1, {0, 0, 1, 0}},
       {1, {0, 0, 0, -1}},
       {1, {1, 1, 0, -1}},
       {1, {1, 0, 1, -1}}},
      // coefficient of N in f: (a/s')(1/a' + a + s')
      {{1, {1, -1, 0, -1}}, {1, {2, 0, 0, -1}}, {1, {1, 0, 0, 0}}},
      // coefficient of M in g: (a'/s)(1/a + a' + s)
      {{1, {-1, 1, -1, 0}}, {1, {0, 2, -1, 0}}, {1, {0, 1, 0, 0}}},
      // coefficient of N in g: (1 + a'/s)(1/a' + a + s')
      {{1, {0, -1, 0, 0}},
       {1, {1, 0, 0, 0}},
       {1, {0, 0, 0, 1}},
       {1, {0, 0, -1, 0}},
       {1, {1, 1, -1, 0}},
       {1, {0, 1, -1, 1}}},
  }};
}

using SmoothFn = std::function<double(const LogPoint&, LogPoint&)>;

struct Descent {
  LogPoint z{};
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  bool at_boundary = false;
};

// Projected gradient descent on the box [-clamp, clamp]^4. Trial steps use
// the Barzilai-Borwein length when it is positive, then backtrack until the
// Armijo condition holds.
Descent Descend(const SmoothFn& fn, LogPoint z, const OptimizeOptions& opts,
                double grad_tol) {
  const double lo = -opts.log_clamp;
  const double hi = opts.log_clamp;
  for (double& v : z) v = std::clamp(v, lo, hi);

  auto projected_norm = [&](const LogPoint& x, const LogPoint& g) {
    double s = 0.0;
    for (int k = 0; k < 4; ++k) {
      double pg = g[k];
      if ((x[k] <= lo && pg > 0.0) || (x[k] >= hi && pg < 0.0)) pg = 0.0;
      s += pg * pg;
    }
    return std::sqrt(s);
  };

  Descent out;
  LogPoint grad{};
  double value = fn(z, grad);
  double step = opts.initial_step;
  LogPoint prev_z = z;
  LogPoint prev_grad = grad;
  bool have_prev = false;

  int it = 0;
  for (; it < opts.max_iters; ++it) {
    if (projected_norm(z, grad) <= grad_tol) {
      out.converged = true;
      break;
    }
    if (have_prev) {
      double ss = 0.0;
      double sy = 0.0;
      for (int k = 0; k < 4; ++k) {
        const double s = z[k] - prev_z[k];
        const double y = grad[k] - prev_grad[k];
        ss += s * s;
        sy += s * y;
      }
      step = (sy > 0.0 && ss > 0.0) ? ss / sy : 2.0 * step;
      step = std::clamp(step, 1e-16, 1e6);
    }

    LogPoint trial{};
    LogPoint trial_grad{};
    double trial_value = 0.0;
    bool accepted = false;
    for (int bt = 0; bt < 200; ++bt) {
      double decrease = 0.0;
      for (int k = 0; k < 4; ++k) {
        trial[k] = std::clamp(z[k] - step * grad[k], lo, hi);
        decrease += grad[k] * (trial[k] - z[k]);
      }
      if (trial == z) break;
      trial_value = fn(trial, trial_grad);
      if (std::isfinite(trial_value) &&
          trial_value <= value + opts.sufficient_decrease * decrease) {
        accepted = true;
        break;
      }
      step *= opts.shrink;
    }
    if (!accepted) {
      // No representable decrease along the projected gradient.
      out.converged = projected_norm(z, grad) <= grad_tol * 1e3;
      break;
    }
    prev_z = z;
    prev_grad = grad;
    have_prev = true;
    z = trial;
    grad = trial_grad;
    value = trial_value;
  }
  out.z = z;
  out.value = value;
  out.iterations = it;
  for (double v : z) out.at_boundary |= (v <= lo || v >= hi);
  return out;
}

// Smooth stand-in for max_k values[k]: (1/rho) log sum_k exp(rho values[k]).
template <std::size_t K>
double SoftMax(const std::array<double, K>& values,
               const std::array<LogPoint, K>& grads, double rho,
               LogPoint& grad) {
  const double top = *std::max_element(values.begin(), values.end());
  std::array<double, K> w{};
  double total = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    w[k] = std::exp(rho * (values[k] - top));
    total += w[k];
  }
  grad = {};
  for (std::size_t k = 0; k < K; ++k) {
    for (int c = 0; c < 4; ++c) grad[c] += w[k] / total * grads[k][c];
  }
  return top + std::log(total) / rho;
}

template <std::size_t K>
Descent SmoothedMaxDescent(const std::array<Posynomial, K>& pieces,
                           LogPoint start, const OptimizeOptions& opts,
                           double final_rho, int& iterations) {
  const int stages = std::max(1, opts.rho_stages);
  Descent d;
  d.z = start;
  for (int stage = 0; stage < stages; ++stage) {
    const double frac = stages == 1 ? 1.0 : double(stage) / (stages - 1);
    const double rho =
        opts.rho_initial * std::pow(final_rho / opts.rho_initial, frac);
    SmoothFn fn = [&pieces, rho](const LogPoint& z, LogPoint& grad) {
      std::array<double, K> values{};
      std::array<LogPoint, K> grads{};
      for (std::size_t k = 0; k < K; ++k) {
        values[k] = EvalPosynomial(pieces[k], z, grads[k]);
      }
      return SoftMax(values, grads, rho, grad);
    };
    d = Descend(fn, d.z, opts, opts.grad_tol);
    iterations += d.iterations;
  }
  return d;
}

struct TwoPieceMinimax {
  LogPoint z{};
  double weight = 0.5;
  int iterations = 0;
  bool converged = false;
  bool at_boundary = false;
};

// Exact minimization of max{u, v} for smooth convex u, v through the dual
//   max_{w in [0,1]} min_z w u(z) + (1 - w) v(z):
// u - v at the inner minimizer is nonincreasing in w, so w is located by
// bisection on its sign.
TwoPieceMinimax MinimaxOfTwo(const Posynomial& u, const Posynomial& v,
                             LogPoint start, const OptimizeOptions& opts) {
  TwoPieceMinimax out;
  double lo = 0.0;
  double hi = 1.0;
  LogPoint z = start;
  Descent inner;
  for (int it = 0; it < 60; ++it) {
    const double w = 0.5 * (lo + hi);
    SmoothFn fn = [&u, &v, w](const LogPoint& x, LogPoint& grad) {
      LogPoint gu{};
      LogPoint gv{};
      const double fu = EvalPosynomial(u, x, gu);
      const double fv = EvalPosynomial(v, x, gv);
      for (int k = 0; k < 4; ++k) grad[k] = w * gu[k] + (1.0 - w) * gv[k];
      return w * fu + (1.0 - w) * fv;
    };
    inner = Descend(fn, z, opts, opts.grad_tol);
    out.iterations += inner.iterations;
    z = inner.z;
    out.weight = w;
    LogPoint scratch{};
    const double diff =
        EvalPosynomial(u, z, scratch) - EvalPosynomial(v, z, scratch);
    const double scale = std::max(1.0, inner.value);
    if (std::abs(diff) <= 1e-12 * scale) break;
    if (diff > 0.0) {
      lo = w;
    } else {
      hi = w;
    }
    if (hi - lo < 1e-15) break;
  }
  out.z = z;
  out.converged = inner.converged;
  out.at_boundary = inner.at_boundary;
  return out;
}

LogPoint DefaultStart(const BoundInputs& in) {
  return {0.5 * std::log(in.log_m / in.log_n_half),
          0.5 * std::log(in.log_n / in.log_m_half), 0.0, 0.0};
}

void FillFromLog(const LogPoint& z, const BoundInputs& in,
                 OptimizeResult& out) {
  out.point = TransformedParams::FromLog(z[0], z[1], z[2], z[3]);
  out.rates = FromTransformed(out.point);
  const FgValues fg = BoundFgTransformed(out.point, in);
  out.f_value = fg.f;
  out.g_value = fg.g;
}

}  // namespace

LogFg EvalLogFg(const LogPoint& z, const BoundInputs& in) {
  LogFg out;
  out.f = EvalPosynomial(BuildF(in), z, out.grad_f);
  out.g = EvalPosynomial(BuildG(in), z, out.grad_g);
  return out;
}

OptimizeResult Minimize(const Objective& objective, const BoundInputs& in,
                        const OptimizeOptions& opts) {
  if (objective.kind == ObjectiveKind::kJGamma &&
      !(objective.gamma >= 0.0 && objective.gamma <= 1.0)) {
    Fail(ErrorCode::kInvalidGamma, "gamma must lie in [0, 1]");
  }
  if (!(in.log_m > 0.0) || !(in.log_n > 0.0)) {
    Fail(ErrorCode::kDegenerateGame, "bound minimization needs m, n >= 2");
  }
  if (opts.max_iters < 1 || !(opts.grad_tol > 0.0)) {
    Fail(ErrorCode::kInvalidArgs, "max_iters >= 1 and grad_tol > 0 required");
  }

  OptimizeResult out;
  const LogPoint start = DefaultStart(in);
  switch (objective.kind) {
    case ObjectiveKind::kSocialOmega: {
      const Posynomial social = BuildSocial(in);
      SmoothFn fn = [&social](const LogPoint& z, LogPoint& grad) {
        return EvalPosynomial(social, z, grad);
      };
      const Descent d = Descend(fn, {start[0], start[1], 0.0, 0.0}, opts,
                                opts.grad_tol);
      out.point = TransformedParams{std::exp(d.z[0]), std::exp(d.z[1]), 0.0,
                                    0.0};
      out.rates = FromTransformed(out.point);
      out.objective_value = d.value;
      out.iterations = d.iterations;
      out.converged = d.converged;
      out.at_boundary = d.at_boundary;
      return out;
    }
    case ObjectiveKind::kJGamma: {
      const Posynomial f = BuildF(in);
      const Posynomial g = BuildG(in);
      const double gamma = objective.gamma;
      SmoothFn fn = [&f, &g, gamma](const LogPoint& z, LogPoint& grad) {
        LogPoint gf{};
        LogPoint gg{};
        const double vf = EvalPosynomial(f, z, gf);
        const double vg = EvalPosynomial(g, z, gg);
        for (int k = 0; k < 4; ++k) {
          grad[k] = gamma * gf[k] + (1.0 - gamma) * gg[k];
        }
        return gamma * vf + (1.0 - gamma) * vg;
      };
      const Descent d = Descend(fn, start, opts, opts.grad_tol);
      FillFromLog(d.z, in, out);
      out.objective_value = d.value;
      out.iterations = d.iterations;
      out.at_boundary = d.at_boundary;
      out.converged = d.converged && !d.at_boundary;
      return out;
    }
    case ObjectiveKind::kMaxFg: {
      const std::array<Posynomial, 2> pieces = {BuildF(in), BuildG(in)};
      int iterations = 0;
      const Descent smooth =
          SmoothedMaxDescent(pieces, start, opts, opts.rho_final, iterations);
      // Polish: the smoothed optimum is within log(2)/rho of the true one;
      // the two-piece dual pins it down exactly.
      const TwoPieceMinimax exact =
          MinimaxOfTwo(pieces[0], pieces[1], smooth.z, opts);
      iterations += exact.iterations;

      auto exact_max = [&in](const LogPoint& z) {
        const LogFg v = EvalLogFg(z, in);
        return std::max(v.f, v.g);
      };
      const bool use_polish = exact_max(exact.z) <= exact_max(smooth.z);
      const LogPoint& best = use_polish ? exact.z : smooth.z;
      FillFromLog(best, in, out);
      out.objective_value = exact_max(best);
      out.iterations = iterations;
      out.at_boundary = use_polish ? exact.at_boundary : smooth.at_boundary;
      out.converged =
          (use_polish ? exact.converged : smooth.converged) && !out.at_boundary;
      return out;
    }
  }
  return out;
}

double UnawareCoefficients::Max() const {
  return std::max({m_in_f, n_in_f, m_in_g, n_in_g});
}

UnawareCoefficients EvalUnawareCoefficients(const TransformedParams& tp) {
  if (!tp.has_log() || !(tp.a > 0.0) || !(tp.a_prime > 0.0)) {
    Fail(ErrorCode::kOutOfDomain, "coefficients need a, a', s, s' > 0");
  }
  const double a = tp.a;
  const double ap = tp.a_prime;
  const double s = tp.s;
  const double sp = tp.s_prime;
  return UnawareCoefficients{(1.0 + a / sp) * (1.0 / a + ap + s),
                             (a / sp) * (1.0 / ap + a + sp),
                             (ap / s) * (1.0 / a + ap + s),
                             (1.0 + ap / s) * (1.0 / ap + a + sp)};
}

CoefficientResult MinimizeUnawareCoefficients(const OptimizeOptions& opts) {
  const std::array<Posynomial, 4> pieces = BuildCoefficients();
  int iterations = 0;
  const Descent smooth =
      SmoothedMaxDescent(pieces, {0.0, 0.0, 0.0, 0.0}, opts, opts.rho_final,
                         iterations);

  // Polish on the two largest coefficients at the smoothed optimum, then
  // keep the result only if it does not raise the true maximum.
  std::array<double, 4> values{};
  LogPoint scratch{};
  for (int k = 0; k < 4; ++k) values[k] = EvalPosynomial(pieces[k], smooth.z, scratch);
  std::array<int, 4> order = {0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&values](int l, int r) { return values[l] > values[r]; });
  const TwoPieceMinimax exact =
      MinimaxOfTwo(pieces[order[0]], pieces[order[1]], smooth.z, opts);
  iterations += exact.iterations;

  auto true_max = [&pieces](const LogPoint& z) {
    LogPoint g{};
    double top = 0.0;
    for (const Posynomial& p : pieces) top = std::max(top, EvalPosynomial(p, z, g));
    return top;
  };
  const bool use_polish = true_max(exact.z) <= true_max(smooth.z);
  const LogPoint& best = use_polish ? exact.z : smooth.z;

  CoefficientResult out;
  out.point = TransformedParams::FromLog(best[0], best[1], best[2], best[3]);
  out.rates = FromTransformed(out.point);
  out.kappa = true_max(best);
  out.iterations = iterations;
  out.converged = (use_polish ? exact.converged : smooth.converged) &&
                  !(use_polish ? exact.at_boundary : smooth.at_boundary);
  return out;
}

double GradientCheck(const LogPoint& z, const BoundInputs& in, double h) {
  if (!(h > 0.0)) Fail(ErrorCode::kInvalidArgs, "step must be > 0");
  const LogFg at = EvalLogFg(z, in);
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    LogPoint up = z;
    LogPoint down = z;
    up[k] += h;
    down[k] -= h;
    const LogFg vu = EvalLogFg(up, in);
    const LogFg vd = EvalLogFg(down, in);
    const double df = (vu.f - vd.f) / (2.0 * h);
    const double dg = (vu.g - vd.g) / (2.0 * h);
    worst = std::max(worst, std::abs(at.grad_f[k] - df) /
                                std::max(1.0, std::abs(at.grad_f[k])));
    worst = std::max(worst, std::abs(at.grad_g[k] - dg) /
                                std::max(1.0, std::abs(at.grad_g[k])));
  }
  return worst;
}

}  // namespace ohedge
