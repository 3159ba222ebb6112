#ifndef FSIM_ANALYSIS_HPP
#define FSIM_ANALYSIS_HPP

#include <utility>
#include <vector>

#include "fsim/filippov.hpp"
#include "fsim/system.hpp"
#include "fsim/trajectory.hpp"

namespace fsim {

struct ResidualReport {
  double max_residual = 0.0;   // normalized distance to F at the worst sample
  double mean_residual = 0.0;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  double tol = 0.0;
  bool passed = false;
};

/// Central-difference derivative at each interior sample, measured against
/// the Filippov set there. Distances are normalized by the local speed scale
/// so the check is meaningful where the field is large. Samples close to
/// singular instants, window edges or surfaces are skipped; singular_guard
/// widens the exclusion around D and window edges.
ResidualReport residual_check(const Trajectory& traj, const PiecewiseSystem& sys,
                              const FilippovProbe& probe, double tol,
                              double singular_guard = 1e-3);

/// Sampled total variation of one component on [t_lo, t_hi] (a lower bound
/// of the true variation). Endpoints are linearly interpolated when they are
/// not sample times.
double total_variation(const Trajectory& traj, int component, double t_lo,
                       double t_hi);

/// Sum of |dx| over all components' Euclidean increments (vector variation).
double total_variation_vec(const Trajectory& traj, double t_lo, double t_hi);

struct VariationCurve {
  std::vector<double> cutoffs;     // delta values
  std::vector<double> variations;  // TV on [t_begin, T - delta]
  double slope = 0.0;              // fit: TV ~ slope * ln(1/delta) + intercept
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Variation of a component on [t_begin, T - delta] for each delta, with a
/// least-squares fit against ln(1/delta). A positive slope with a tight fit
/// is the numeric signature of variation growing without bound.
VariationCurve variation_growth(const Trajectory& traj, int component, double T,
                                std::vector<double> deltas);

/// Sample range (max - min) of a component on each window (T - delta, T).
std::vector<std::pair<double, double>> oscillation_profile(
    const Trajectory& traj, int component, double T,
    const std::vector<double>& windows);

struct BoundReport {
  double variation = 0.0;    // vector total variation on the interval
  double bound = 0.0;        // (t_hi - t_lo) * Q * (1 + 1e-6)
  double state_bound = 0.0;  // M = max |x| on the interval
  double field_bound = 0.0;  // Q = max vertex norm of F over interval x ball
  bool passed = false;
};

/// Checks the a-priori variation bound on a compact singularity-free
/// interval: TV <= (t_hi - t_lo) * Q, with Q bounded numerically over the
/// interval and the ball of radius max |x|.
BoundReport variation_bound_check(const Trajectory& traj,
                                  const PiecewiseSystem& sys, double t_lo,
                                  double t_hi, const FilippovProbe& probe = {});

}  // namespace fsim

#endif
