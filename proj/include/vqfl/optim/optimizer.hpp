// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "vqfl/types.hpp"

namespace vqfl::optim {

enum class Method { GradientFree, GradientDescent };

std::string to_string(Method m);
Method method_from_string(const std::string& name);

struct OptimizerConfig {
  Method method = Method::GradientFree;
  int maxiter = 100;
  // Reserved for stochastic methods; both current methods are deterministic.
  std::uint64_t seed = 0;
  double step_size = 0.1;              // gradient descent learning rate
  double initial_simplex_scale = 0.5;  // Nelder-Mead vertex offset
  double fd_epsilon = 1e-5;

  void validate() const;
};

struct Evaluation {
  ParamVector params;
  double value = 0.0;
};

struct ObjectiveTrace {
  std::vector<Evaluation> evaluations;
  ParamVector best_params;
  double best_value = 0.0;

  std::vector<double> best_so_far() const;
};

struct MinimizeResult {
  ParamVector params;
  ObjectiveTrace trace;
};

using Objective = std::function<double(std::span<const double>)>;

// Minimise `objective` from `init`. Returns the best evaluated point, which is
// never worse than `init`. Throws InvalidArgument if the objective is not
// finite at `init`.
//
// Evaluation budget: at most max(1, maxiter * (dim + 2)) calls for the
// gradient-free method and max(1, maxiter * (2 * dim + 1)) for gradient
// descent.
MinimizeResult minimize(const Objective& objective, ParamVector init,
                        const OptimizerConfig& cfg);

// Central differences, one pair of evaluations per coordinate.
ParamVector finite_diff_gradient(const Objective& objective,
                                 std::span<const double> theta,
                                 double fd_epsilon);

}  // namespace vqfl::optim
