// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/optim/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

#include "vqfl/error.hpp"

namespace vqfl::optim {

std::string to_string(Method m) {
  return m == Method::GradientFree ? "gradient_free" : "gradient_descent";
}

Method method_from_string(const std::string& name) {
  if (name == "gradient_free" || name == "nelder_mead" || name == "cobyla") {
    return Method::GradientFree;
  }
  if (name == "gradient_descent") return Method::GradientDescent;
  throw InvalidArgument("unknown optimizer method '" + name + "'");
}

void OptimizerConfig::validate() const {
  if (maxiter < 0) throw ConfigError("maxiter", "must be >= 0");
  if (!(step_size > 0.0)) throw ConfigError("step_size", "must be positive");
  if (!(initial_simplex_scale > 0.0)) {
    throw ConfigError("initial_simplex_scale", "must be positive");
  }
  if (!(fd_epsilon > 0.0)) throw ConfigError("fd_epsilon", "must be positive");
}

std::vector<double> ObjectiveTrace::best_so_far() const {
  std::vector<double> out;
  out.reserve(evaluations.size());
  double best = std::numeric_limits<double>::infinity();
  for (const Evaluation& e : evaluations) {
    best = std::min(best, e.value);
    out.push_back(best);
  }
  return out;
}

namespace {

// Objective values this close are treated as equal so rounding noise cannot
// reorder vertices that sit along a flat direction.
bool lower(double a, double b) {
  return a < b - 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

// Counts calls against the budget and keeps the trace. Non-finite values
// after the first call are recorded as +inf so the search moves away.
class Evaluator {
 public:
  Evaluator(const Objective& f, std::size_t budget) : f_(f), budget_(budget) {}

  std::optional<double> operator()(const ParamVector& x) {
    if (trace_.evaluations.size() >= budget_) return std::nullopt;
    double value = f_(x);
    if (!std::isfinite(value)) {
      if (trace_.evaluations.empty()) {
        throw InvalidArgument("objective is not finite at the initial point");
      }
      value = std::numeric_limits<double>::infinity();
    }
    if (trace_.evaluations.empty() || lower(value, trace_.best_value)) {
      trace_.best_value = value;
      trace_.best_params = x;
    }
    trace_.evaluations.push_back({x, value});
    return value;
  }

  std::size_t remaining() const { return budget_ - trace_.evaluations.size(); }
  ObjectiveTrace take() { return std::move(trace_); }

 private:
  const Objective& f_;
  std::size_t budget_;
  ObjectiveTrace trace_;
};

constexpr double kValueSpreadTol = 1e-8;

void nelder_mead(Evaluator& eval, const ParamVector& init, const OptimizerConfig& cfg) {
  const std::size_t n = init.size();
  const auto f0 = eval(init);
  if (n == 0 || cfg.maxiter == 0) return;

  // Adaptive coefficients (Gao & Han); the classic set for one dimension,
  // where the adaptive shrink factor degenerates to zero.
  const double dim = static_cast<double>(n);
  const double reflect = 1.0;
  const double expand = n > 1 ? 1.0 + 2.0 / dim : 2.0;
  const double contract = n > 1 ? 0.75 - 1.0 / (2.0 * dim) : 0.5;
  const double shrink = n > 1 ? 1.0 - 1.0 / dim : 0.5;

  std::vector<ParamVector> vertex(n + 1, init);
  std::vector<double> value(n + 1, *f0);
  for (std::size_t i = 0; i < n; ++i) {
    vertex[i + 1][i] += cfg.initial_simplex_scale;
    const auto v = eval(vertex[i + 1]);
    if (!v) return;
    value[i + 1] = *v;
  }

  std::vector<std::size_t> order(n + 1);
  ParamVector centroid(n), trial(n), second(n);
  auto along = [&](ParamVector& out, double t, const ParamVector& from) {
    // out = centroid + t * (from - centroid)
    for (std::size_t j = 0; j < n; ++j) out[j] = centroid[j] + t * (from[j] - centroid[j]);
  };

  for (int iter = 0; iter < cfg.maxiter; ++iter) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return lower(value[a], value[b]); });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];
    if (value[worst] - value[best] < kValueSpreadTol) return;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const ParamVector& v = vertex[order[k]];
      for (std::size_t j = 0; j < n; ++j) centroid[j] += v[j];
    }
    for (double& c : centroid) c /= dim;

    along(trial, -reflect, vertex[worst]);
    const auto fr = eval(trial);
    if (!fr) return;

    if (lower(*fr, value[best])) {
      along(second, -reflect * expand, vertex[worst]);
      const auto fe = eval(second);
      if (fe && lower(*fe, *fr)) {
        vertex[worst] = second;
        value[worst] = *fe;
      } else {
        vertex[worst] = trial;
        value[worst] = *fr;
      }
      if (!fe) return;
      continue;
    }
    if (lower(*fr, value[second_worst])) {
      vertex[worst] = trial;
      value[worst] = *fr;
      continue;
    }

    const bool outside = lower(*fr, value[worst]);
    if (outside) {
      along(second, -reflect * contract, vertex[worst]);
    } else {
      along(second, contract, vertex[worst]);
    }
    const auto fc = eval(second);
    if (!fc) return;
    if ((outside && !lower(*fr, *fc)) || (!outside && lower(*fc, value[worst]))) {
      vertex[worst] = second;
      value[worst] = *fc;
      continue;
    }

    for (std::size_t k = 1; k <= n; ++k) {
      const std::size_t i = order[k];
      for (std::size_t j = 0; j < n; ++j) {
        vertex[i][j] = vertex[best][j] + shrink * (vertex[i][j] - vertex[best][j]);
      }
      const auto fs = eval(vertex[i]);
      if (!fs) return;
      value[i] = *fs;
    }
  }
}

void gradient_descent(Evaluator& eval, const ParamVector& init,
                      const OptimizerConfig& cfg) {
  const std::size_t n = init.size();
  eval(init);
  if (n == 0) return;

  // Gradient probes go through the evaluator so they count and are traced.
  const Objective probe = [&](std::span<const double> x) {
    const auto v = eval(ParamVector(x.begin(), x.end()));
    return v ? *v : std::numeric_limits<double>::quiet_NaN();
  };

  ParamVector theta = init;
  for (int iter = 0; iter < cfg.maxiter; ++iter) {
    if (eval.remaining() < 2 * n) return;
    const ParamVector grad = finite_diff_gradient(probe, theta, cfg.fd_epsilon);
    double norm = 0.0;
    for (double g : grad) norm += g * g;
    if (std::sqrt(norm) < 1e-12) return;
    for (std::size_t j = 0; j < n; ++j) theta[j] -= cfg.step_size * grad[j];
    if (!eval(theta)) return;
  }
}

}  // namespace

MinimizeResult minimize(const Objective& objective, ParamVector init,
                        const OptimizerConfig& cfg) {
  cfg.validate();
  const std::size_t n = init.size();
  if (n == 0) throw InvalidArgument("cannot minimize over zero parameters");
  const auto iters = static_cast<std::size_t>(cfg.maxiter);
  const std::size_t per_iter = cfg.method == Method::GradientFree ? n + 2 : 2 * n + 1;
  Evaluator eval(objective, std::max<std::size_t>(1, iters * per_iter));

  if (cfg.method == Method::GradientFree) {
    nelder_mead(eval, init, cfg);
  } else {
    gradient_descent(eval, init, cfg);
  }
  ObjectiveTrace trace = eval.take();
  ParamVector best = trace.best_params;
  return {std::move(best), std::move(trace)};
}

ParamVector finite_diff_gradient(const Objective& objective,
                                 std::span<const double> theta, double fd_epsilon) {
  if (!(fd_epsilon > 0.0)) throw InvalidArgument("fd_epsilon must be positive");
  ParamVector x(theta.begin(), theta.end());
  ParamVector grad(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double saved = x[j];
    x[j] = saved + fd_epsilon;
    const double up = objective(x);
    x[j] = saved - fd_epsilon;
    const double down = objective(x);
    x[j] = saved;
    if (!std::isfinite(up) || !std::isfinite(down)) {
      throw InvalidArgument("non-finite objective value in finite differences");
    }
    grad[j] = (up - down) / (2.0 * fd_epsilon);
  }
  return grad;
}

}  // namespace vqfl::optim
