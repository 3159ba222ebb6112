#ifndef FSIM_SYSTEM_HPP
#define FSIM_SYSTEM_HPP

#include <Eigen/Dense>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "fsim/errors.hpp"

namespace fsim {

using State = Eigen::VectorXd;

using FieldFn = std::function<State(const State&, double)>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Half-open time window [begin, end), optionally repeating with a period.
struct TimeWindow {
  double begin = 0.0;
  double end = kInf;
  double period = 0.0;  // 0 = non-repeating

  bool contains(double t) const;

  /// Smallest begin/end edge strictly greater than t, if any.
  std::optional<double> next_edge_after(double t) const;

  static TimeWindow all() { return TimeWindow{0.0, kInf, 0.0}; }
};

/// Codimension-1 switching surface sigma(x, t) = 0 with its spatial gradient.
struct SwitchingSurface {
  std::string name;
  std::function<double(const State&, double)> sigma;
  std::function<State(const State&, double)> gradient;
};

/// One smooth branch of the right-hand side. Active where every constrained
/// surface sign matches (entries of `signs` in {-1, 0, +1}; 0 means the piece
/// spans that surface) and t lies in the window. The field must evaluate to a
/// finite value anywhere near the closure of its region, so that one-sided
/// limits can be taken at the surfaces.
struct SmoothPiece {
  std::string name;
  std::vector<int> signs;
  TimeWindow window;
  FieldFn field;
};

/// The set D of time instants where the right-hand side is not locally
/// bounded. Either a finite list or an arithmetic progression; in both cases
/// free of cluster points.
struct SingularTimeSet {
  std::vector<double> instants;  // sorted, used when !progression
  bool progression = false;
  double start = 0.0;
  double period = 0.0;

  static SingularTimeSet none() { return {}; }
  static SingularTimeSet finite(std::vector<double> ts);
  static SingularTimeSet arithmetic(double start, double period);

  bool empty() const { return !progression && instants.empty(); }
  bool contains(double t, double tol = 0.0) const;
  double distance(double t) const;
  std::optional<double> next_at_or_after(double t) const;
};

struct PiecewiseSystem {
  std::string id;
  int dimension = 0;
  std::vector<SmoothPiece> pieces;
  std::vector<SwitchingSurface> surfaces;
  SingularTimeSet singular_times;

  struct PieceQuery {
    enum class Status { Unique, OnSurface, None, Ambiguous };
    Status status = Status::None;
    int index = -1;    // piece index when Unique
    int surface = -1;  // blocking surface when OnSurface
  };

  /// Locate the piece whose open region strictly contains (x, t). Does not
  /// look at the singular set; callers reject t in D first.
  PieceQuery classify(const State& x, double t) const;

  /// Sign pattern of the surfaces at (x, t). An entry is 0 iff the point lies
  /// within on_tol of the surface (measured as |sigma| / max(1, |grad|)).
  std::vector<int> surface_signs(const State& x, double t, double on_tol) const;

  /// Smallest piece-window edge strictly greater than t. Integration stops at
  /// these so a step never straddles a change of branch.
  std::optional<double> next_window_edge_after(double t) const;
};

}  // namespace fsim

#endif
