#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace artm::pso {

/// Swarm parameters. Defaults: Np=200, C1=C2=2.0, w=0.7, nFEs=10000.
/// C1 weighs the attraction towards the global best, C2 towards the
/// particle's personal best.
struct Params {
  int np = 200;
  double c1 = 2.0;
  double c2 = 2.0;
  double inertia = 0.7;
  std::int64_t n_fes = 10000;
  std::uint64_t seed = 1;
  int dim = 0;

  /// Move with the pre-update velocity (x += v before the velocity change)
  /// instead of the standard post-update one.
  bool move_with_previous_velocity = false;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

struct Particle {
  std::vector<double> position;
  std::vector<double> velocity;
  std::vector<double> best_position;
  double best_fitness = 0.0;
};

struct SwarmState {
  std::vector<Particle> particles;
  std::vector<double> global_best_position;
  double global_best_fitness = 0.0;
  std::int64_t evaluations_used = 0;
};

/// Maximised objective over [0,1]^dim. Must be a pure function of the
/// position when runs execute concurrently.
using Objective = std::function<double(std::span<const double>)>;

/// Invoked after every objective evaluation with that evaluation's
/// position and fitness.
using EvalHook = std::function<void(std::span<const double>, double)>;

/// Seedable per-run random stream. uniform01() draws 53-bit doubles in
/// [0,1) so trajectories are reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

struct RunResult {
  std::vector<double> best_position;
  double best_fitness = 0.0;
  std::vector<double> history;  // global best after init and after each generation
};

/// Uniform random positions, zero velocities, one evaluation per particle
/// (np evaluations total); personal bests start at the initial positions.
SwarmState initialize(const Params& params, const Objective& objective, Rng& rng,
                      const EvalHook& hook = {});

/// One generation: per particle, velocity update towards global/personal
/// best, move, clamp to [0,1], re-evaluate, best updates (ties replace the
/// incumbent). Stops early when the evaluation budget runs out; returns the
/// number of evaluations performed.
std::int64_t step(SwarmState& state, const Objective& objective, const Params& params,
                  Rng& rng, const EvalHook& hook = {});

/// Full run: initialize, then step until exactly n_fes evaluations are
/// consumed. The recorded history is non-decreasing.
RunResult run(const Params& params, const Objective& objective, const EvalHook& hook = {});

}  // namespace artm::pso
