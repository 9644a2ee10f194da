#include "artm/pso.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace artm::pso {

void Params::validate() const {
  if (np < 1) throw std::invalid_argument("pso: population size must be at least 1");
  if (dim < 1) throw std::invalid_argument("pso: dimensionality must be at least 1");
  if (n_fes < np) {
    throw std::invalid_argument("pso: evaluation budget must cover one initialization pass");
  }
  if (c1 < 0.0 || c2 < 0.0) throw std::invalid_argument("pso: c1 and c2 must be nonnegative");
  if (inertia < 0.0 || inertia > 1.0) {
    throw std::invalid_argument("pso: inertia must lie in [0,1]");
  }
}

namespace {

double evaluate(const Objective& objective, std::span<const double> position,
                SwarmState& state, const EvalHook& hook) {
  const double f = objective(position);
  ++state.evaluations_used;
  if (hook) hook(position, f);
  return f;
}

}  // namespace

SwarmState initialize(const Params& params, const Objective& objective, Rng& rng,
                      const EvalHook& hook) {
  SwarmState state;
  state.particles.resize(static_cast<std::size_t>(params.np));
  state.global_best_fitness = -std::numeric_limits<double>::infinity();
  for (auto& p : state.particles) {
    p.position.resize(static_cast<std::size_t>(params.dim));
    for (double& x : p.position) x = rng.uniform01();
    p.velocity.assign(static_cast<std::size_t>(params.dim), 0.0);
    p.best_position = p.position;
    p.best_fitness = evaluate(objective, p.position, state, hook);
    if (p.best_fitness >= state.global_best_fitness) {
      state.global_best_fitness = p.best_fitness;
      state.global_best_position = p.position;
    }
  }
  return state;
}

std::int64_t step(SwarmState& state, const Objective& objective, const Params& params,
                  Rng& rng, const EvalHook& hook) {
  std::int64_t evaluated = 0;
  for (auto& p : state.particles) {
    if (state.evaluations_used >= params.n_fes) break;
    for (std::size_t j = 0; j < p.position.size(); ++j) {
      const double u_global = rng.uniform01();
      const double u_personal = rng.uniform01();
      const double v_new = params.inertia * p.velocity[j] +
                           params.c1 * u_global * (state.global_best_position[j] - p.position[j]) +
                           params.c2 * u_personal * (p.best_position[j] - p.position[j]);
      const double move = params.move_with_previous_velocity ? p.velocity[j] : v_new;
      p.velocity[j] = v_new;
      p.position[j] = std::clamp(p.position[j] + move, 0.0, 1.0);
    }
    const double f = evaluate(objective, p.position, state, hook);
    ++evaluated;
    if (f >= p.best_fitness) {
      p.best_fitness = f;
      p.best_position = p.position;
    }
    if (f >= state.global_best_fitness) {
      state.global_best_fitness = f;
      state.global_best_position = p.position;
    }
  }
  return evaluated;
}

RunResult run(const Params& params, const Objective& objective, const EvalHook& hook) {
  params.validate();
  Rng rng(params.seed);
  SwarmState state = initialize(params, objective, rng, hook);
  RunResult result;
  result.history.push_back(state.global_best_fitness);
  while (state.evaluations_used < params.n_fes) {
    step(state, objective, params, rng, hook);
    result.history.push_back(state.global_best_fitness);
  }
  result.best_position = state.global_best_position;
  result.best_fitness = state.global_best_fitness;
  return result;
}

}  // namespace artm::pso
