#ifndef FSIM_INTEGRATOR_HPP
#define FSIM_INTEGRATOR_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "fsim/scenario.hpp"
#include "fsim/system.hpp"
#include "fsim/trajectory.hpp"

namespace fsim {

/// Dense output of one accepted embedded Runge-Kutta step (4th-order
/// interpolant of the Dormand-Prince 5(4) pair).
struct DenseStep {
  double t0 = 0.0;
  double h = 0.0;
  std::array<State, 5> cont;

  double t1() const { return t0 + h; }
  State eval(double t) const;
};

struct ClassicalStepResult {
  State x_next;
  double h_used = 0.0;
  double h_suggest = 0.0;
  DenseStep dense;
};

/// One embedded RK step of the active piece's field with local error control.
/// h is clamped so the step neither crosses a piece-window edge nor violates
/// the proportional limit near a singular instant.
ClassicalStepResult step_classical(const PiecewiseSystem& sys, const State& x,
                                   double t, double h,
                                   const IntegratorSettings& settings);

/// Refine a surface crossing inside one dense step to within event_tol.
/// Requires a sign change of sigma between the step endpoints.
double locate_event(const PiecewiseSystem& sys, const DenseStep& dense,
                    const SwitchingSurface& surface, double event_tol);

enum class SlidingExit { None, AttractivityLost, Degenerate };

struct SlidingStepResult {
  State x_next;
  double h_used = 0.0;
  SlidingExit exit = SlidingExit::None;
};

/// Advance along the sliding vector field on the given surface, correcting
/// sigma drift so |sigma| stays within 10 * event_tol. Exits signal loss of
/// attractivity (flow crosses) or a degenerate tangential pair (equilibrium
/// candidate).
SlidingStepResult step_sliding(const PiecewiseSystem& sys, const State& x,
                               double t, int surface_index, double h,
                               const IntegratorSettings& settings);

enum class Outcome {
  ContinuedWithLimit,
  ContinuedWithZero,
  NoLimitExists,
  HorizonReached,
  StepBudgetExhausted,
};

const char* outcome_name(Outcome o);

struct ContinuationEvidence {
  std::vector<double> gaps;   // T - t_k, geometric
  std::vector<double> norms;  // |x(t_k)|
  std::vector<double> diffs;  // |x(t_{k+1}) - x(t_k)|
  double remaining_variation = 0.0;  // extrapolated beyond the last sample
  std::string note;
};

struct ContinuationReport {
  Outcome outcome = Outcome::HorizonReached;
  std::optional<State> limit_estimate;  // present iff continued-with-*
  ContinuationEvidence evidence;
};

/// Decide whether x(t) has a limit as t -> T from geometrically spaced
/// samples T - t_k = 2^{-k} (T - t_0), k = 0..K, K >= 20. A Cauchy test on
/// the tail differences certifies a finite limit (snapped to zero within
/// conv_radius); a robust geometric decay of the norms certifies the zero
/// limit of a prescribed-time approach even when the tail is only
/// envelope-accurate.
ContinuationReport detect_limit(const std::vector<std::pair<double, State>>& samples,
                                double T, const IntegratorSettings& settings);

struct SolveResult {
  Trajectory trajectory;
  ContinuationReport report;
};

/// Drive classical stepping, event handling and sliding until t_end or a
/// singular instant; continue past singular instants with the detected limit
/// or the zero solution; stop with no-limit-exists where no continuous
/// continuation exists.
SolveResult solve(const PiecewiseSystem& sys, const ScenarioConfig& scenario);

/// Glue trajectories whose domains union to an interval and whose values
/// match at shared endpoints within continuity_tol.
Trajectory concatenate(const std::vector<Trajectory>& parts,
                       double continuity_tol);

}  // namespace fsim

#endif
