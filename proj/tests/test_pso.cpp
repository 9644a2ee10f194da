#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>

#include "artm/pso.hpp"
#include "doctest.h"

using namespace artm;

namespace {

double sum_objective(std::span<const double> x) {
  return std::accumulate(x.begin(), x.end(), 0.0);
}

}  // namespace

TEST_CASE("params validation") {
  pso::Params p;
  p.dim = 3;
  CHECK_NOTHROW(p.validate());
  SUBCASE("np") { p.np = 0; CHECK_THROWS_AS(p.validate(), std::invalid_argument); }
  SUBCASE("dim") { p.dim = 0; CHECK_THROWS_AS(p.validate(), std::invalid_argument); }
  SUBCASE("budget") { p.n_fes = p.np - 1; CHECK_THROWS_AS(p.validate(), std::invalid_argument); }
  SUBCASE("inertia") { p.inertia = 1.5; CHECK_THROWS_AS(p.validate(), std::invalid_argument); }
  SUBCASE("c1") { p.c1 = -0.1; CHECK_THROWS_AS(p.validate(), std::invalid_argument); }
}

TEST_CASE("initialization") {
  pso::Params p;
  p.np = 1;
  p.dim = 2;
  p.seed = 99;
  p.n_fes = 10;

  pso::Rng rng_a(p.seed);
  auto state_a = pso::initialize(p, sum_objective, rng_a);
  pso::Rng rng_b(p.seed);
  auto state_b = pso::initialize(p, sum_objective, rng_b);

  REQUIRE(state_a.particles.size() == 1);
  CHECK(state_a.particles[0].position == state_b.particles[0].position);
  CHECK(state_a.evaluations_used == 1);
  for (double v : state_a.particles[0].velocity) CHECK(v == 0.0);
  CHECK(state_a.particles[0].best_position == state_a.particles[0].position);

  SUBCASE("np evaluations are consumed") {
    pso::Params big;
    big.np = 200;
    big.dim = 6;
    pso::Rng rng(1);
    std::int64_t calls = 0;
    auto counting = [&](std::span<const double> x) {
      ++calls;
      return sum_objective(x);
    };
    auto state = pso::initialize(big, counting, rng);
    CHECK(calls == 200);
    CHECK(state.evaluations_used == 200);
    for (const auto& particle : state.particles) {
      for (double v : particle.velocity) CHECK(v == 0.0);
      for (double x : particle.position) {
        CHECK(x >= 0.0);
        CHECK(x <= 1.0);
      }
    }
  }
}

TEST_CASE("degenerate coefficients freeze the swarm") {
  pso::Params p;
  p.np = 5;
  p.dim = 3;
  p.inertia = 0.0;
  p.c1 = 0.0;
  p.c2 = 0.0;
  p.n_fes = 100;
  pso::Rng rng(5);
  auto state = pso::initialize(p, sum_objective, rng);
  auto positions_before = state.particles;
  pso::step(state, sum_objective, p, rng);
  for (std::size_t i = 0; i < state.particles.size(); ++i) {
    CHECK(state.particles[i].position == positions_before[i].position);
    for (double v : state.particles[i].velocity) CHECK(v == 0.0);
  }
}

TEST_CASE("a particle sitting at both bests with zero velocity stays put") {
  pso::Params p;
  p.np = 1;
  p.dim = 2;
  p.n_fes = 100;
  pso::Rng rng(7);
  auto state = pso::initialize(p, sum_objective, rng);
  // After init, the single particle is the global best with p = x = g, v = 0.
  auto before = state.particles[0].position;
  pso::step(state, sum_objective, p, rng);
  CHECK(state.particles[0].position == before);
}

TEST_CASE("constant objective keeps the global best constant") {
  pso::Params p;
  p.np = 10;
  p.dim = 4;
  p.n_fes = 500;
  auto constant = [](std::span<const double>) { return 1.25; };
  auto result = pso::run(p, constant);
  for (double h : result.history) CHECK(h == 1.25);
}

TEST_CASE("run on the sum objective") {
  pso::Params p;
  p.np = 20;
  p.dim = 3;
  p.n_fes = 2000;
  p.seed = 42;
  auto result = pso::run(p, sum_objective);

  CHECK(result.best_fitness >= 2.9);  // analytic maximum is 3.0
  CHECK(result.best_fitness <= 3.0 + 1e-12);
  for (std::size_t g = 1; g < result.history.size(); ++g) {
    CHECK(result.history[g] >= result.history[g - 1]);
  }
  // init + 99 full generations of 20 evaluations each
  CHECK(result.history.size() == 100);
}

TEST_CASE("budget semantics") {
  SUBCASE("n_fes = np means initialization only") {
    pso::Params p;
    p.np = 30;
    p.dim = 2;
    p.n_fes = 30;
    std::int64_t calls = 0;
    auto counting = [&](std::span<const double> x) {
      ++calls;
      return sum_objective(x);
    };
    auto result = pso::run(p, counting);
    CHECK(calls == 30);
    CHECK(result.history.size() == 1);
  }
  SUBCASE("partial final generation stops at the budget") {
    pso::Params p;
    p.np = 20;
    p.dim = 2;
    p.n_fes = 205;  // init 20 + 9 full generations + 5 evaluations
    std::int64_t calls = 0;
    auto counting = [&](std::span<const double> x) {
      ++calls;
      return sum_objective(x);
    };
    pso::run(p, counting);
    CHECK(calls == 205);
  }
}

TEST_CASE("determinism: same seed, same trajectory") {
  pso::Params p;
  p.np = 15;
  p.dim = 5;
  p.n_fes = 600;
  p.seed = 2024;
  auto a = pso::run(p, sum_objective);
  auto b = pso::run(p, sum_objective);
  CHECK(a.history == b.history);
  CHECK(a.best_position == b.best_position);
  CHECK(a.best_fitness == b.best_fitness);

  p.seed = 2025;
  auto c = pso::run(p, sum_objective);
  CHECK(a.history != c.history);
}

TEST_CASE("positions stay in the unit box and bests are monotone") {
  pso::Params p;
  p.np = 12;
  p.dim = 4;
  p.n_fes = 1200;
  p.seed = 8;
  pso::Rng rng(p.seed);
  auto objective = [](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += std::sin(8.0 * v) * v;
    return s;
  };
  auto state = pso::initialize(p, objective, rng);
  std::vector<double> personal_bests;
  for (const auto& particle : state.particles) personal_bests.push_back(particle.best_fitness);
  double global_before = state.global_best_fitness;
  while (state.evaluations_used < p.n_fes) {
    pso::step(state, objective, p, rng);
    CHECK(state.global_best_fitness >= global_before);
    global_before = state.global_best_fitness;
    for (std::size_t i = 0; i < state.particles.size(); ++i) {
      const auto& particle = state.particles[i];
      CHECK(particle.best_fitness >= personal_bests[i]);
      personal_bests[i] = particle.best_fitness;
      for (double x : particle.position) {
        CHECK(x >= 0.0);
        CHECK(x <= 1.0);
      }
    }
  }
  CHECK(state.evaluations_used == p.n_fes);
}

TEST_CASE("evaluation hook sees every evaluation") {
  pso::Params p;
  p.np = 8;
  p.dim = 3;
  p.n_fes = 80;
  std::int64_t hook_calls = 0;
  auto hook = [&](std::span<const double> position, double fitness) {
    ++hook_calls;
    CHECK(fitness == doctest::Approx(sum_objective(position)).epsilon(1e-15));
  };
  pso::run(p, sum_objective, hook);
  CHECK(hook_calls == 80);
}

TEST_CASE("pre-update velocity mode moves with the old velocity") {
  pso::Params p;
  p.np = 3;
  p.dim = 2;
  p.n_fes = 60;
  p.move_with_previous_velocity = true;
  pso::Rng rng(77);
  auto state = pso::initialize(p, sum_objective, rng);
  auto before = state.particles;
  pso::step(state, sum_objective, p, rng);
  // Velocities start at zero, so the first move cannot change any position.
  for (std::size_t i = 0; i < state.particles.size(); ++i) {
    CHECK(state.particles[i].position == before[i].position);
  }
  // But the velocities themselves have been updated.
  bool any_velocity = false;
  for (const auto& particle : state.particles) {
    for (double v : particle.velocity) {
      if (v != 0.0) any_velocity = true;
    }
  }
  CHECK(any_velocity);
}
