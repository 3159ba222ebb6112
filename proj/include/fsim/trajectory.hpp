#ifndef FSIM_TRAJECTORY_HPP
#define FSIM_TRAJECTORY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fsim/system.hpp"

namespace fsim {

enum class Mode { Classical, Sliding, ZeroContinuation, Constructed };

const char* mode_name(Mode m);
std::optional<Mode> mode_from_name(const std::string& s);

/// Contiguous run of samples produced in a single integration mode.
/// Covers the half-open span [t_begin, t_end); the final segment of a
/// trajectory may carry a sample at t_end itself.
struct TrajectorySegment {
  Mode mode = Mode::Classical;
  double t_begin = 0.0;
  double t_end = 0.0;
  std::vector<double> times;   // strictly increasing
  std::vector<State> states;   // same length as times

  std::size_t size() const { return times.size(); }
};

/// A (generalized) solution on an interval: ordered abutting segments.
struct Trajectory {
  std::vector<TrajectorySegment> segments;

  bool empty() const { return segments.empty(); }
  double t_begin() const;
  double t_end() const;
  std::size_t sample_count() const;

  const State& first_state() const;
  const State& last_state() const;

  /// Piecewise-linear interpolation between samples. OutOfDomain outside.
  State eval(double t) const;

  void for_each_sample(
      const std::function<void(std::size_t seg, double t, const State& x)>& fn) const;
};

Trajectory single_segment_trajectory(std::vector<double> times,
                                     std::vector<State> states, Mode mode);

struct TrajectoryViolation {
  std::string what;
};

/// Checks per-segment monotone times, segment abutment, and interface
/// continuity at abutment instants. Empty result = valid.
std::vector<TrajectoryViolation> validate_trajectory(const Trajectory& traj,
                                                     double continuity_tol);

}  // namespace fsim

#endif
