#ifndef FSIM_HULL_HPP
#define FSIM_HULL_HPP

#include <vector>

#include "fsim/system.hpp"

namespace fsim {

/// Convex polytope as a finite vertex list; the value F(x, t) of the Filippov
/// map for piecewise-smooth systems. Vertices are kept deduplicated and in
/// lexicographic order so equal sets compare equal.
struct ConvexVertexSet {
  std::vector<State> vertices;

  bool empty() const { return vertices.empty(); }
  std::size_t size() const { return vertices.size(); }

  static ConvexVertexSet of(std::vector<State> vs);
};

/// Euclidean distance from p to the convex hull of the vertex set. Exact for
/// one or two vertices; for more it enumerates projections onto the faces
/// spanned by vertex subsets of size <= n + 1 (Caratheodory), which is exact
/// for the small sets arising here.
double distance_to_hull(const ConvexVertexSet& set, const State& p);

bool hull_contains(const ConvexVertexSet& set, const State& p, double tol);

/// Hausdorff distance between the hulls of two vertex sets.
double hausdorff_distance(const ConvexVertexSet& a, const ConvexVertexSet& b);

}  // namespace fsim

#endif
