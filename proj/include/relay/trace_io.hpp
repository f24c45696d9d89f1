#ifndef RELAY_TRACE_IO_HPP
#define RELAY_TRACE_IO_HPP

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "relay/harness.hpp"

namespace relay {

// One CSV row per slot per replication:
//   rep, t, x_0..x_L, y_0..y_K, cs_bits, cr_bits, u1, u2, u3,
//   a_1..a_L, cost_x, cost_y
// Connectivity is a bitstring, index 0 first. Comment lines start with
// '#'; the timestamp header is omitted when reproducible is set.
void write_trace_csv(std::ostream& out, const std::vector<Trajectory>& trajs,
                     Index L, Index K, bool reproducible);

// Reads a trace back into trajectories (cost series recomputed, final
// state re-stepped from the last row). Throws std::runtime_error on a
// malformed file.
std::vector<Trajectory> read_trace_csv(std::istream& in);

nlohmann::json to_json(const DominanceReport& report);
nlohmann::json to_json(const Theorem1Report& report);
nlohmann::json to_json(const Lemma2Report& report);

}  // namespace relay

#endif  // RELAY_TRACE_IO_HPP
