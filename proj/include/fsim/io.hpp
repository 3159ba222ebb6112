#ifndef FSIM_IO_HPP
#define FSIM_IO_HPP

#include <iosfwd>
#include <string>

#include "fsim/scenario.hpp"
#include "fsim/trajectory.hpp"

namespace fsim {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

/// Exact round-trip parse; throws Error(Parse) on malformed input.
double parse_double(const std::string& s);

/// CSV with header t,x1,...,xn,mode,segment; UTF-8, LF line endings.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
void write_trajectory_csv_file(const std::string& path, const Trajectory& traj);

Trajectory read_trajectory_csv(std::istream& is);
Trajectory read_trajectory_csv_file(const std::string& path);

/// Apply one scenario key (file format or CLI flag). Unknown keys and
/// malformed values throw Error(Parse).
void apply_scenario_key(ScenarioConfig& cfg, const std::string& key,
                        const std::string& value);

/// Flat key = value scenario document; '#' starts a comment.
ScenarioConfig parse_scenario_file(const std::string& path);

State parse_state(const std::string& csv_list);

}  // namespace fsim

#endif
