#ifndef RELAY_POLICIES_HPP
#define RELAY_POLICIES_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "relay/rng.hpp"
#include "relay/types.hpp"

namespace relay {

// A scheduling policy maps (history, state) to a feasible control. The
// history parameter keeps the interface fully general; all shipped
// policies read only the current state.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual Control decide(const History& history, const SystemState& state,
                         SplitMix64& rng) = 0;
  virtual std::string_view name() const = 0;
  // Called at the start of each trajectory (round-robin cursors etc.).
  virtual void reset() {}
};

// Queue vectors after the control, before exogenous arrivals:
// x_hat = x - ws, y_hat = y + vr - wr, dummies pinned to zero.
// Throws on an infeasible control.
std::pair<QueueVec, QueueVec> updated_queues(const SystemState& state,
                                             const Control& control);

// The constructive Most Balancing control: longest connected SS queue,
// shortest RS queue (connected preferred among shortest ties), longest
// connected RS queue after the insertion. Pure function of the state;
// ties beyond the stated rules break to the lowest index.
Control lcq_sq_lcq(const SystemState& state);

// Exact per-state Most Balancing verdict by enumerating all feasible
// controls.
struct MBVerdict {
  std::vector<Control> argmin_x;      // minimizers of kappa(x_hat)
  std::vector<Control> argmin_y;      // minimizers of kappa(y_hat)
  std::vector<Control> intersection;  // argmin_x intersect argmin_y
  bool empty_intersection = false;
};

MBVerdict mb_oracle(const SystemState& state);

// Registry of shipped policies:
//   "mb"             - LCQ/SQ/LCQ
//   "random"         - uniform over the feasible set
//   "rr"             - round robin over SS and RS transmitters
//   "lcq-rand-route" - LCQ transmitters, uniformly random RS destination
//   "anti"           - serve-shortest (deliberately unbalancing baseline)
// Throws std::invalid_argument for an unknown name.
std::unique_ptr<Policy> make_policy(std::string_view name);
std::vector<std::string> policy_names();

}  // namespace relay

#endif  // RELAY_POLICIES_HPP
