#ifndef RELAY_HARNESS_HPP
#define RELAY_HARNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relay/policies.hpp"
#include "relay/types.hpp"

namespace relay {

struct ExperimentConfig {
  int L = 2;
  int K = 2;
  StochasticParams params;
  long horizon = 200;
  long replications = 1000;
  std::uint64_t seed = 1;
  std::vector<std::string> policies;
  std::vector<long> checkpoints;  // empty -> {h/4, h/2, h}
  std::optional<QueueVec> initial_x;  // size L+1, dummy 0
  std::optional<QueueVec> initial_y;  // size K+1, dummy 0

  // Throws std::invalid_argument on a bad field.
  void validate() const;
  std::vector<long> effective_checkpoints() const;
};

// One replication's full record.
struct Trajectory {
  long replication = 0;
  SystemState initial;            // state at slot 1, connectivity included
  std::vector<SlotRecord> slots;  // one record per elapsed slot
  SystemState final_state;        // connectivity unset past the horizon
  std::vector<PacketCount> cost_x_series;  // real-queue sums per slot
  std::vector<PacketCount> cost_y_series;
};

// Total packets in the real queues; the canonical member of the monotone
// cost class.
PacketCount real_sum(const QueueVec& v);

// Runs one replication. The driver stream depends only on (seed,
// replication), never on the policy, so competing policies consume
// identical arrival/connectivity sequences.
Trajectory simulate(const ExperimentConfig& config, Policy& policy,
                    long replication);

std::vector<Trajectory> run_replications(const ExperimentConfig& config,
                                         Policy& policy);

// Streaming variant for large runs: costs of the pre-control state at
// each checkpoint slot, one row per replication.
struct CheckpointCosts {
  std::vector<long> checkpoints;
  std::vector<std::vector<PacketCount>> cost_x;  // [rep][checkpoint]
  std::vector<std::vector<PacketCount>> cost_y;
};

CheckpointCosts run_checkpoint_costs(const ExperimentConfig& config,
                                     Policy& policy,
                                     const std::vector<long>& checkpoints);

// Empirical stochastic-dominance test of policy A over policy B under
// common random numbers, with a DKW band at joint level alpha
// (Bonferroni-adjusted across checkpoints).
struct DominanceViolation {
  long checkpoint = 0;
  PacketCount threshold = 0;
  char stack = 'x';  // 'x' = SS cost, 'y' = RS cost
  double cdf_a = 0;
  double cdf_b = 0;
};

struct DominanceReport {
  std::string policy_a;
  std::string policy_b;
  long replications = 0;
  double alpha = 0;
  double epsilon = 0;  // DKW radius after Bonferroni adjustment
  std::vector<long> checkpoints;
  std::vector<DominanceViolation> violations;
  // Sample means of the costs per checkpoint.
  std::vector<double> mean_x_a, mean_x_b, mean_y_a, mean_y_b;

  bool dominates() const { return violations.empty(); }
};

DominanceReport empirical_dominance(const ExperimentConfig& config,
                                    const std::string& policy_a,
                                    const std::string& policy_b,
                                    const std::vector<long>& checkpoints,
                                    double alpha);

// Exhaustive check that LCQ/SQ/LCQ lands in the per-state Most Balancing
// intersection over a bounded state grid.
struct Theorem1Report {
  long states_checked = 0;
  long membership_failures = 0;
  long empty_intersections = 0;
};

Theorem1Report exhaustive_theorem1_sweep(int L_max, int K_max, int entry_max);

// Exhaustive check of the interchange identity for the imbalance index
// over descending vectors.
struct Lemma2Report {
  long cases_checked = 0;
  long mismatches = 0;
};

Lemma2Report lemma2_exhaustive_sweep(int dim_max, int entry_max);

}  // namespace relay

#endif  // RELAY_HARNESS_HPP
