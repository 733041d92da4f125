#include "signet/sim.hpp"

#include <cmath>
#include <string>

#include "signet/errors.hpp"
#include "signet/matrix.hpp"

namespace signet {

Trajectory simulate(const SignedDigraph& g, const std::vector<double>& x0, const SimOptions& opts) {
  const int n = g.n();
  if (static_cast<int>(x0.size()) != n)
    throw std::invalid_argument("initial state length must match node count");
  if (!(opts.dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(opts.t_end >= 0.0)) throw std::invalid_argument("t_end must be nonnegative");
  if (opts.window < 1 || opts.store_every < 1)
    throw std::invalid_argument("window and store_every must be positive");

  const Matrix<double> lap = laplacian_matrix<double>(g);
  double max_diag = 0.0;
  for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, lap(i, i));
  if (max_diag > 0.0 && !opts.allow_unstable_dt) {
    const double bound = 1.0 / (2.0 * max_diag);
    if (opts.dt > bound)
      throw std::invalid_argument("dt " + std::to_string(opts.dt) +
                                  " exceeds the stability bound " + std::to_string(bound) +
                                  " = 1/(2 max l_ii)");
  }

  auto deriv = [&](const std::vector<double>& x, std::vector<double>& out) {
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += lap(i, j) * x[j];
      out[i] = -acc;
    }
  };

  const long steps = static_cast<long>(std::ceil(opts.t_end / opts.dt - 1e-9));
  Trajectory traj;
  std::vector<double> x = x0;
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  // Ring buffer of the last window+1 states for the convergence test.
  const int ring_len = opts.window + 1;
  std::vector<std::vector<double>> ring(ring_len);
  ring[0] = x;

  traj.times.push_back(0.0);
  traj.states.push_back(x);

  long k = 0;
  for (; k < steps; ++k) {
    deriv(x, k1);
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * opts.dt * k1[i];
    deriv(tmp, k2);
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * opts.dt * k2[i];
    deriv(tmp, k3);
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + opts.dt * k3[i];
    deriv(tmp, k4);
    for (int i = 0; i < n; ++i)
      x[i] += opts.dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    const long step_idx = k + 1;
    for (int i = 0; i < n; ++i)
      if (!std::isfinite(x[i]))
        throw numerical_error("integration diverged at t = " + std::to_string(step_idx * opts.dt));
    if (step_idx % opts.store_every == 0 && step_idx != steps) {
      traj.times.push_back(step_idx * opts.dt);
      traj.states.push_back(x);
    }
    ring[step_idx % ring_len] = x;
    if (step_idx >= opts.window) {
      const std::vector<double>& old = ring[(step_idx - opts.window) % ring_len];
      double diff = 0.0;
      for (int i = 0; i < n; ++i) diff = std::max(diff, std::abs(x[i] - old[i]));
      if (diff <= opts.conv_tol) {
        traj.converged = true;
        traj.converged_time = (step_idx - opts.window) * opts.dt;
        ++k;
        break;
      }
    }
  }
  traj.final_time = k * opts.dt;
  traj.final_state = x;
  if (traj.times.back() != traj.final_time) {
    traj.times.push_back(traj.final_time);
    traj.states.push_back(x);
  }
  return traj;
}

ConvergedState converged_state(const Trajectory& traj) {
  return ConvergedState{traj.final_state, traj.converged, traj.final_time};
}

}  // namespace signet
