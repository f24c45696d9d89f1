#ifndef RELAY_TYPES_HPP
#define RELAY_TYPES_HPP

#include <Eigen/Core>
#include <compare>
#include <cstdint>
#include <vector>

namespace relay {

using PacketCount = std::int64_t;
using Index = Eigen::Index;

// Queue-length style integer vectors. Index 0 is always the dummy queue.
using QueueVec = Eigen::Array<PacketCount, Eigen::Dynamic, 1>;
// Per-queue connectivity bits, index 0 = dummy (always connected).
using BoolVec = Eigen::Array<bool, Eigen::Dynamic, 1>;

// Queue lengths and connectivities observed at the start of a slot.
struct SystemState {
  QueueVec x;   // SS queues, size L+1
  QueueVec y;   // RS queues, size K+1
  BoolVec cs;   // SS connectivity, size L+1
  BoolVec cr;   // RS connectivity, size K+1

  Index num_ss() const { return x.size() - 1; }
  Index num_rs() const { return y.size() - 1; }

  // All queues empty, everything connected.
  static SystemState empty(Index L, Index K) {
    SystemState s;
    s.x = QueueVec::Zero(L + 1);
    s.y = QueueVec::Zero(K + 1);
    s.cs = BoolVec::Constant(L + 1, true);
    s.cr = BoolVec::Constant(K + 1, true);
    return s;
  }

  // Dummy queues pinned empty and connected, all lengths nonnegative.
  bool invariants_ok() const {
    if (x.size() < 2 || y.size() < 2) return false;
    if (cs.size() != x.size() || cr.size() != y.size()) return false;
    if (x[0] != 0 || y[0] != 0) return false;
    if (!cs[0] || !cr[0]) return false;
    return (x >= 0).all() && (y >= 0).all();
  }

  bool operator==(const SystemState& o) const {
    return (x == o.x).all() && (y == o.y).all() && (cs == o.cs).all() &&
           (cr == o.cr).all();
  }
};

// Scheduler decision (u1, u2, u3): SS transmitter, RS destination,
// RS transmitter. Index 0 encodes the idle/dummy action.
struct Control {
  int u1 = 0;
  int u2 = 0;
  int u3 = 0;

  auto operator<=>(const Control&) const = default;
};

// Withdrawal/insertion indicator vectors derived from a control.
struct FlowVectors {
  QueueVec ws;  // SS withdrawals, size L+1, sums to 1
  QueueVec wr;  // RS withdrawals, size K+1, sums to 1
  QueueVec vr;  // RS insertions, size K+1, at most one nonzero, vr[0] == 0
};

// Bernoulli arrivals to the SS queues; index 0 always 0.
struct ArrivalVector {
  QueueVec a;
};

struct StochasticParams {
  double p = 0.5;  // per-link connectivity probability
  double q = 0.5;  // per-SS-queue arrival probability
  // Optional per-queue overrides (entry i applies to real queue i+1).
  // Empty means symmetric p / q everywhere.
  std::vector<double> p_ss;
  std::vector<double> p_rs;
  std::vector<double> q_ss;
};

// One elapsed slot: the state observed before the control, the control
// applied, and the arrivals added afterwards.
struct SlotRecord {
  SystemState state;
  Control control;
  QueueVec arrivals;
};

using History = std::vector<SlotRecord>;

}  // namespace relay

#endif  // RELAY_TYPES_HPP
