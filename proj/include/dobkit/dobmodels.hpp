#pragma once

#include "dobkit/xfer.hpp"

namespace dobkit {

// Physical and controller scalars of the DOB-based position loop. alpha is
// always derived from the four physical parameters, never stored, so the
// struct cannot hold an inconsistent mismatch ratio.
struct DobParams {
  double J_m = 0.01;       // motor inertia, kg m^2
  double J_mn = 0.01;      // nominal inertia used by the observer
  double K_tau = 1.0;      // torque coefficient, N m / A
  double K_tau_n = 1.0;    // nominal torque coefficient
  double g_dob = 1000.0;   // observer low-pass bandwidth, rad/s
  double T_s = 5e-4;       // sample time, s
  double K_P = 5000.0;     // proportional gain
  double K_D = 25.0;       // derivative gain

  double alpha() const { return (J_mn * K_tau) / (J_m * K_tau_n); }

  // Throws std::invalid_argument naming the offending field. g_dob == 0 is
  // accepted only when allow_observer_off is set.
  void validate(bool allow_observer_off = false) const;
};

// Inner velocity loop, continuous: L = alpha*g/s, S = s/(s + alpha*g),
// T = alpha*g/(s + alpha*g).
LoopSet inner_loop_continuous(const DobParams& params, bool allow_observer_off = false);

// Inner velocity loop, discrete: L = alpha*g*T_s/(z - 1),
// S = (z-1)/(z - (1 - alpha*g*T_s)).
LoopSet inner_loop_discrete(const DobParams& params, bool allow_observer_off = false);

// Outer position loop, discrete. Open loop assembled factor by factor:
//   (K_P + K_D (z-1)/(T_s z)) * (alpha((1 + g T_s)z - 1)/(z - (1 - alpha g T_s)))
//     * (T_s^2/2)(z+1)/(z-1)^2
// With K_D == 0 the first factor degenerates to the constant K_P (the z root
// disappears); with K_P == 0 it is the pure derivative branch.
LoopSet outer_loop_discrete(const DobParams& params, bool allow_observer_off = false);

// Continuous counterpart of the loop above:
//   (K_P + K_D s) * (alpha(s + g)/(s + alpha g)) * 1/s^2
LoopSet outer_loop_continuous(const DobParams& params, bool allow_observer_off = false);

// The four exogenous-input maps of the closed position loop, kept exactly in
// the printed factored form (no cancellation, no corrections):
//   reference_error: L_PC * S_PC   (identical to T_PC as a function)
//   disturbance:     (1/J_m) * S_DOB * S_PC
//   noise:           T_DOB * T_PC * (T_s/2)(z+1)/(z-1)
//   auxiliary:       T_PC  (map of the abstract auxiliary input)
struct ClosedLoopMaps {
  RationalTF reference_error;
  RationalTF disturbance;
  RationalTF noise;
  RationalTF auxiliary;
  LoopSet inner;
  LoopSet outer;
};
ClosedLoopMaps closed_loop_maps_discrete(const DobParams& params);

}  // namespace dobkit
