#ifndef FSIM_FILIPPOV_HPP
#define FSIM_FILIPPOV_HPP

#include "fsim/hull.hpp"
#include "fsim/system.hpp"

namespace fsim {

/// Numerical stand-in for the delta-ball of the Filippov construction:
/// probe_radius is the spatial offset at which one-sided limit values are
/// evaluated, and the threshold below which a point counts as lying on a
/// surface.
struct FilippovProbe {
  double probe_radius = 1e-9;
  /// Offsets per adjacent piece used to extrapolate the one-sided limit
  /// (delta, delta/2, delta/4, ...).
  int samples_per_piece = 3;
};

/// Limit value of `field` as the surface is approached from x along the unit
/// direction `dir`. Evaluates at shrinking offsets and Richardson-extrapolates
/// with an estimated convergence order, so square-root-type pieces still come
/// out to full accuracy.
State one_sided_limit(const FieldFn& field, const State& x, double t,
                      const State& dir, double delta, int samples);

/// F(x, t) for a piecewise-smooth system: the convex hull (as vertices) of
/// the one-sided limit values of all pieces whose region closure contains
/// (x, t). A continuity point yields the singleton {f(x, t)}.
ConvexVertexSet filippov_set(const PiecewiseSystem& sys, const State& x,
                             double t, const FilippovProbe& probe = {});

/// True iff the origin lies within tol of the convex hull of the set.
bool contains_zero(const ConvexVertexSet& set, double tol);

/// Filippov sliding vector field on an attractive codimension-1 surface:
/// fs = a*f_plus + (1-a)*f_minus with <normal, fs> = 0, a in (0, 1).
State sliding_vector_field(const State& f_plus, const State& f_minus,
                           const State& normal);

}  // namespace fsim

#endif
