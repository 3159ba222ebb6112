#ifndef FSIM_VALIDATE_HPP
#define FSIM_VALIDATE_HPP

#include <string>
#include <vector>

#include "fsim/system.hpp"

namespace fsim {

struct Violation {
  std::string kind;  // "overlapping regions", "uncovered point",
                     // "gradient mismatch", "singular set"
  std::string what;
};

/// Probes the system at a deterministic pseudo-random sample of points and
/// reports any broken invariant: the region partition must select exactly one
/// piece away from surfaces and D, surface gradients must match a central
/// finite difference of sigma, and the singular set must be cluster-free.
/// Violations are data, not failures; an empty list means the system passed.
std::vector<Violation> validate_system(const PiecewiseSystem& sys);

}  // namespace fsim

#endif
