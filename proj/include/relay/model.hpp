#ifndef RELAY_MODEL_HPP
#define RELAY_MODEL_HPP

#include <vector>

#include "relay/rng.hpp"
#include "relay/types.hpp"

namespace relay {

// Indicator withdrawal/insertion vectors for a control. A dummy SS
// transmission (u1 == 0) inserts nothing into the RS stack.
FlowVectors derive_flows(const SystemState& state, const Control& control);

// A control is feasible iff each withdrawal hits a connected, non-empty
// queue (the RS withdrawal is checked after the u2 insertion) and the
// dummy-coupling rule u1 == 0 <=> u2 == 0 holds. Total function.
bool is_feasible(const SystemState& state, const Control& control);

// All feasible controls for a state, sorted; always contains (0,0,0).
std::vector<Control> feasible_controls(const SystemState& state);

// One-slot evolution: x' = x - ws + a, y' = y + vr - wr, dummies pinned
// to zero. The returned state's connectivity is left all-disconnected
// (dummy bits true); the caller installs the next slot's connectivity.
// Throws std::invalid_argument on an infeasible control or bad arrivals.
SystemState step(const SystemState& state, const Control& control,
                 const QueueVec& arrivals);

// Samples one slot's drivers: connectivity bits Bernoulli(p) per real
// queue (dummies forced connected) and SS arrivals Bernoulli(q).
void sample_drivers(const StochasticParams& params, Index L, Index K,
                    SplitMix64& rng, BoolVec& cs, BoolVec& cr,
                    QueueVec& arrivals);

}  // namespace relay

#endif  // RELAY_MODEL_HPP
