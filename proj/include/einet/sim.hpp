#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "einet/admissible.hpp"
#include "einet/synchrony.hpp"

namespace einet {

struct Trajectory {
  double dt = 0.0;
  std::vector<double> times;                // uniform grid, length steps + 1
  std::vector<std::vector<double>> states;  // same length as times
};

struct DivergenceError : std::runtime_error {
  int step;
  explicit DivergenceError(int step_)
      : std::runtime_error("state became non-finite at step " + std::to_string(step_)),
        step(step_) {}
};

// Classical fixed-step fourth-order integration. Deterministic; throws
// DivergenceError with the offending step index on non-finite states.
Trajectory integrate(const VectorField &field, const std::vector<double> &x0,
                     double dt, int steps);

// Central-difference Jacobian of the field at x.
std::vector<std::vector<double>> finite_diff_jacobian(const VectorField &field,
                                                      const std::vector<double> &x,
                                                      double h);

// Damped Newton iteration with finite-difference Jacobian. Returns a state
// with ||field(x)||_2 < tol or throws std::runtime_error.
std::vector<double> find_equilibrium(const VectorField &field, std::vector<double> guess,
                                     double tol = 1e-10, int max_iter = 60);

struct SynchronyTrial {
  int trial = 0;
  std::uint64_t seed = 0;
  double max_deviation = 0.0;
  bool diverged = false;
};

struct SynchronyReport {
  bool balanced = false;
  bool pass = false;       // balanced colourings: all trial deviations < tol
  double tol = 0.0;
  std::vector<SynchronyTrial> trials;
  int counterexample_trial = -1;  // unbalanced colourings: first violating trial

  std::string summary() const;
};

// Integrates `trials` random admissible systems from random points of the
// polydiagonal and reports the largest deviation from it. The per-trial seed
// is base_seed + trial index, so reports are reproducible regardless of
// execution order. Throws std::invalid_argument when the colouring does not
// refine input equivalence.
SynchronyReport check_synchrony_invariance(const EINetwork &net, const Colouring &colouring,
                                           int trials, double T, double dt, double tol,
                                           std::uint64_t base_seed, int k = 1);

}  // namespace einet
