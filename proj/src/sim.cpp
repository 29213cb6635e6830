#include "einet/sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace einet {

Trajectory integrate(const VectorField &field, const std::vector<double> &x0,
                     double dt, int steps) {
  if (dt <= 0) throw std::invalid_argument("dt must be positive");
  if (steps < 1) throw std::invalid_argument("steps must be at least 1");
  if (static_cast<int>(x0.size()) != field.dim)
    throw std::invalid_argument("initial state dimension mismatch");

  int d = field.dim;
  Trajectory traj;
  traj.dt = dt;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(x0);

  std::vector<double> x = x0, k1(d), k2(d), k3(d), k4(d), tmp(d);
  for (int s = 1; s <= steps; ++s) {
    field.eval(x.data(), k1.data());
    for (int i = 0; i < d; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
    field.eval(tmp.data(), k2.data());
    for (int i = 0; i < d; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
    field.eval(tmp.data(), k3.data());
    for (int i = 0; i < d; ++i) tmp[i] = x[i] + dt * k3[i];
    field.eval(tmp.data(), k4.data());
    for (int i = 0; i < d; ++i)
      x[i] += dt / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
    for (double v : x)
      if (!std::isfinite(v)) throw DivergenceError(s);
    traj.times.push_back(s * dt);
    traj.states.push_back(x);
  }
  return traj;
}

std::vector<std::vector<double>> finite_diff_jacobian(const VectorField &field,
                                                      const std::vector<double> &x,
                                                      double h) {
  if (h <= 0) throw std::invalid_argument("h must be positive");
  int d = field.dim;
  std::vector<std::vector<double>> jac(d, std::vector<double>(d));
  std::vector<double> xp = x, fp(d), fm(d);
  for (int j = 0; j < d; ++j) {
    double save = xp[j];
    xp[j] = save + h;
    field.eval(xp.data(), fp.data());
    xp[j] = save - h;
    field.eval(xp.data(), fm.data());
    xp[j] = save;
    for (int i = 0; i < d; ++i) {
      double v = (fp[i] - fm[i]) / (2 * h);
      if (!std::isfinite(v)) throw std::runtime_error("non-finite field evaluation");
      jac[i][j] = v;
    }
  }
  return jac;
}

namespace {

double norm2(const std::vector<double> &v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Gaussian elimination with partial pivoting; returns false when singular.
bool solve(std::vector<std::vector<double>> a, std::vector<double> b,
           std::vector<double> &out) {
  int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-14) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = col + 1; r < n; ++r) {
      double f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  out.assign(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double acc = b[r];
    for (int c = r + 1; c < n; ++c) acc -= a[r][c] * out[c];
    out[r] = acc / a[r][r];
  }
  return true;
}

}  // namespace

std::vector<double> find_equilibrium(const VectorField &field, std::vector<double> guess,
                                     double tol, int max_iter) {
  std::vector<double> fx(field.dim), step;
  for (int iter = 0; iter < max_iter; ++iter) {
    field.eval(guess.data(), fx.data());
    double res = norm2(fx);
    if (!std::isfinite(res)) throw std::runtime_error("non-finite field evaluation");
    if (res < tol) return guess;
    auto jac = finite_diff_jacobian(field, guess, 1e-6);
    std::vector<double> rhs(fx.size());
    for (size_t i = 0; i < fx.size(); ++i) rhs[i] = -fx[i];
    if (!solve(jac, rhs, step))
      throw std::runtime_error("singular Jacobian in Newton iteration");
    double lambda = 1.0;
    std::vector<double> trial(guess.size()), ft(fx.size());
    while (lambda > 1e-8) {
      for (size_t i = 0; i < guess.size(); ++i) trial[i] = guess[i] + lambda * step[i];
      field.eval(trial.data(), ft.data());
      double rt = norm2(ft);
      if (std::isfinite(rt) && rt < res) break;
      lambda *= 0.5;
    }
    for (size_t i = 0; i < guess.size(); ++i) guess[i] += lambda * step[i];
  }
  std::vector<double> fcheck(field.dim);
  field.eval(guess.data(), fcheck.data());
  if (norm2(fcheck) < tol) return guess;
  throw std::runtime_error("Newton iteration did not converge");
}

namespace {

double deviation_from_polydiagonal(const std::vector<double> &x, const Colouring &c, int k) {
  double dev = 0.0;
  for (const auto &block : c) {
    int rep = block.front();
    for (int i : block)
      for (int comp = 0; comp < k; ++comp)
        dev = std::max(dev, std::abs(x[static_cast<size_t>(i) * k + comp] -
                                     x[static_cast<size_t>(rep) * k + comp]));
  }
  return dev;
}

}  // namespace

SynchronyReport check_synchrony_invariance(const EINetwork &net, const Colouring &colouring,
                                           int trials, double T, double dt, double tol,
                                           std::uint64_t base_seed, int k) {
  Colouring c = normalize_colouring(colouring, net.n);
  if (!refines_input_classes(net, c))
    throw std::invalid_argument("colouring does not refine input equivalence");

  SynchronyReport report;
  report.balanced = is_balanced(net, c);
  report.tol = tol;
  int steps = std::max(1, static_cast<int>(std::llround(T / dt)));

  for (int t = 0; t < trials; ++t) {
    std::uint64_t seed = base_seed + static_cast<std::uint64_t>(t);
    std::mt19937_64 rng(seed);
    CouplingSpec spec = random_admissible_spec(net, rng, k);
    VectorField field = assemble_vector_field(net, spec);

    std::uniform_real_distribution<double> dist(-0.5, 0.5);
    std::vector<double> x0(static_cast<size_t>(net.n) * k, 0.0);
    for (const auto &block : c) {
      std::vector<double> val(k);
      for (auto &v : val) v = dist(rng);
      for (int i : block)
        for (int comp = 0; comp < k; ++comp) x0[static_cast<size_t>(i) * k + comp] = val[comp];
    }

    SynchronyTrial trial;
    trial.trial = t;
    trial.seed = seed;
    try {
      Trajectory traj = integrate(field, x0, dt, steps);
      for (const auto &state : traj.states)
        trial.max_deviation = std::max(trial.max_deviation,
                                       deviation_from_polydiagonal(state, c, k));
    } catch (const DivergenceError &) {
      trial.diverged = true;
    }
    report.trials.push_back(trial);
  }

  bool all_below = true;
  for (const auto &t : report.trials) {
    if (t.diverged) continue;
    if (t.max_deviation >= tol) {
      all_below = false;
      if (report.counterexample_trial < 0) report.counterexample_trial = t.trial;
    }
  }
  report.pass = report.balanced && all_below;
  return report;
}

std::string SynchronyReport::summary() const {
  std::ostringstream out;
  double worst = 0.0;
  int diverged = 0;
  for (const auto &t : trials) {
    if (t.diverged)
      ++diverged;
    else
      worst = std::max(worst, t.max_deviation);
  }
  out << "balanced=" << (balanced ? "yes" : "no") << " trials=" << trials.size()
      << " max_deviation=";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", worst);
  out << buf << " diverged=" << diverged;
  if (balanced)
    out << " result=" << (pass ? "PASS" : "FAIL");
  else if (counterexample_trial >= 0)
    out << " counterexample_trial=" << counterexample_trial;
  else
    out << " counterexample=none-found";
  return out.str();
}

}  // namespace einet
