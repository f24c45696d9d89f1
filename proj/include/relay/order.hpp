#ifndef RELAY_ORDER_HPP
#define RELAY_ORDER_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "relay/types.hpp"

namespace relay {

// One instance of the generating relation of the preferred order.
struct RelationStep {
  enum class Kind {
    Reduction,               // pointwise <=, at least one strict
    TwoComponentPermutation, // swap of two components
    BalancingInterchange,    // one unit from a larger to a smaller one
  };
  Kind kind;
  Index i = -1;  // affected indices (unused for Reduction)
  Index j = -1;
  QueueVec before;
  QueueVec after;
};

enum class OrderDecision { Related, NotRelated, Undecided };

struct OrderResult {
  OrderDecision decision = OrderDecision::NotRelated;
  // Chain from reference to candidate when Related.
  std::vector<RelationStep> witness;
  std::size_t states_explored = 0;

  bool related() const { return decision == OrderDecision::Related; }
};

// Decides candidate preceq reference by breadth-first reachability over
// vectors with entries in [0, entry_bound]. All generating steps are
// sum-non-increasing and entry-bounded, so exhaustion of the reachable
// set is a definitive "no"; exceeding state_budget yields Undecided.
OrderResult is_preferred(const QueueVec& candidate, const QueueVec& reference,
                         PacketCount entry_bound,
                         std::size_t state_budget = 2'000'000);

// Enumerates every single generating step between vectors in
// [0, entry_bound]^dimension and checks f(after) <= f(before). Single-step
// monotonicity extends to the transitive closure.
struct MonotoneReport {
  bool passed = true;
  std::size_t steps_checked = 0;
  std::optional<RelationStep> violation;
};

using CostFunction = std::function<double(const QueueVec&)>;

MonotoneReport check_monotone(const CostFunction& f, Index dimension,
                              PacketCount entry_bound);

// Applies a witness chain to `start`; used to validate witnesses.
QueueVec replay_chain(const QueueVec& start,
                      const std::vector<RelationStep>& chain);

}  // namespace relay

#endif  // RELAY_ORDER_HPP
