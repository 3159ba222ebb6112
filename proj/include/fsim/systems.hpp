#ifndef FSIM_SYSTEMS_HPP
#define FSIM_SYSTEMS_HPP

#include <Eigen/Dense>
#include <optional>
#include <utility>

#include "fsim/scenario.hpp"
#include "fsim/system.hpp"
#include "fsim/trajectory.hpp"

namespace fsim {

struct GainSet {
  double k1 = 1.5;  // square-root correction gain
  double k2 = 1.1;  // sign correction gain
  double T = 1.0;   // prescribed convergence instant

  void validate() const;
};

/// Closed-form solution map of a linear time-varying phase, built from a
/// fundamental matrix M(tau) with tau = T - t:
///   x(t) = M(T - t) M(T - t0)^{-1} x0,  valid for tau in (0, T].
struct AnalyticOracle {
  double T = 1.0;
  std::function<Eigen::Matrix2d(double)> fundamental_matrix;
  /// Sample-step hint near t that resolves the local oscillation.
  std::function<double(double)> suggested_dt;

  State solution(double t0, const State& x0, double t) const;
};

/// Explicit period-2 generalized solution of the alternating singular system:
/// zero at even integers, one fundamental-matrix arch in between.
struct PeriodicOracle {
  double period = 2.0;
  std::function<State(double)> eval;
  std::function<double(double)> suggested_dt;
};

/// Prescribed-time differentiator error dynamics: linear time-varying gains
/// on [0, T), super-twisting for t >= T, singular at T.
std::pair<PiecewiseSystem, AnalyticOracle> make_example1(const GainSet& g);

/// Bounded oscillator with log-phase: no limit at T for x0 != 0; T is a
/// terminal singularity (no branch after it).
std::pair<PiecewiseSystem, AnalyticOracle> make_example2(double T);

/// Alternating expand/contract system with D = {0, 2, 4, ...} and a
/// nontrivial periodic generalized solution through the origin.
std::pair<PiecewiseSystem, PeriodicOracle> make_example3();

/// The t >= T piece of the differentiator as a standalone autonomous system.
PiecewiseSystem make_supertwisting(double k1, double k2);

/// Value of the unique active piece at a point strictly inside its region.
State eval_rhs(const PiecewiseSystem& sys, const State& x, double t);

struct BuiltSystem {
  PiecewiseSystem system;
  std::optional<AnalyticOracle> oracle;
  std::optional<PeriodicOracle> periodic_oracle;
};

/// Instantiate a built-in system from a scenario (by system_id). Enforces
/// t0 < T < t_end for the systems that use the prescribed instant.
BuiltSystem build_system(const ScenarioConfig& scenario);

std::vector<std::string> builtin_system_ids();

/// Sample a closed-form map on [t_begin, t_end] using a local step hint, for
/// analysis and figure data. Clamps the hint into [min_dt, max_dt].
Trajectory sample_map(const std::function<State(double)>& f,
                      const std::function<double(double)>& dt_hint,
                      double t_begin, double t_end, Mode mode,
                      double min_dt = 1e-12, double max_dt = 5e-4);

}  // namespace fsim

#endif
