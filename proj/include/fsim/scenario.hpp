#ifndef FSIM_SCENARIO_HPP
#define FSIM_SCENARIO_HPP

#include <string>

#include "fsim/system.hpp"

namespace fsim {

struct IntegratorSettings {
  double rtol = 1e-9;
  double atol = 1e-9;
  /// h <= min_step_fraction * (T - t) while approaching a singular instant T.
  double min_step_fraction = 0.25;
  /// Time localization tolerance for surface crossings.
  double event_tol = 1e-10;
  /// Norm threshold for snapping onto the zero equilibrium.
  double conv_radius = 1e-7;
  /// Allowed state mismatch when gluing segments.
  double continuity_tol = 1e-6;
  /// Recorded samples are at most this far apart (dense output fills in).
  double max_sample_dt = 1e-3;
  long max_steps = 2000000;
  /// Error-controlled steps spent on one singular approach before switching
  /// to the linearized exponential endgame.
  long singular_approach_budget = 250000;

  void validate() const;  // throws Error(InvalidArgument)
};

/// Declarative description of one simulation run.
struct ScenarioConfig {
  std::string system_id = "example1";
  double t0 = 0.0;
  State x0;
  double T = 1.0;  // prescribed instant, where the system uses one
  double k1 = 1.5;
  double k2 = 1.1;
  double t_end = 2.0;
  IntegratorSettings settings;

  void validate() const;  // throws Error(InvalidArgument)
};

}  // namespace fsim

#endif
