#pragma once

#include <vector>

#include "signet/graph.hpp"

namespace signet {

struct SimOptions {
  double dt = 0.01;
  double t_end = 50.0;
  double conv_tol = 1e-9;   // trailing-window infinity-norm tolerance
  int window = 100;         // steps between the compared states
  int store_every = 10;     // decimation of stored samples
  bool allow_unstable_dt = false;
};

struct Trajectory {
  std::vector<double> times;                // decimated samples (last step always kept)
  std::vector<std::vector<double>> states;  // parallel to `times`
  std::vector<double> final_state;          // full precision
  double final_time = 0.0;
  bool converged = false;
  double converged_time = 0.0;  // start of the trailing window that settled
};

struct ConvergedState {
  std::vector<double> state;
  bool converged = false;
  double time = 0.0;
};

// Fixed-step classical Runge-Kutta integration of dx/dt = -L x. Stops early
// when |x(t) - x(t - window*dt)|_inf <= conv_tol. Rejects dt above the
// stability bound 1/(2 max_i l_ii) unless allow_unstable_dt is set; throws
// numerical_error if the state leaves the representable range.
Trajectory simulate(const SignedDigraph& g, const std::vector<double>& x0,
                    const SimOptions& opts = {});

ConvergedState converged_state(const Trajectory& traj);

}  // namespace signet
