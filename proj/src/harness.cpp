#include "relay/harness.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "relay/imbalance.hpp"
#include "relay/model.hpp"

namespace relay {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

bool prob_ok(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

void ExperimentConfig::validate() const {
  require(L >= 1 && K >= 1, "config: L and K must be >= 1");
  require(horizon >= 0, "config: horizon must be >= 0");
  require(replications >= 1, "config: replications must be >= 1");
  require(prob_ok(params.p), "config: p must lie in [0,1]");
  require(prob_ok(params.q), "config: q must lie in [0,1]");
  require(params.p_ss.empty() ||
              params.p_ss.size() == static_cast<std::size_t>(L),
          "config: p_ss override must have L entries");
  require(params.p_rs.empty() ||
              params.p_rs.size() == static_cast<std::size_t>(K),
          "config: p_rs override must have K entries");
  require(params.q_ss.empty() ||
              params.q_ss.size() == static_cast<std::size_t>(L),
          "config: q_ss override must have L entries");
  for (double v : params.p_ss) require(prob_ok(v), "config: p_ss out of range");
  for (double v : params.p_rs) require(prob_ok(v), "config: p_rs out of range");
  for (double v : params.q_ss) require(prob_ok(v), "config: q_ss out of range");
  const auto& known = policy_names();
  for (const auto& name : policies) {
    require(std::find(known.begin(), known.end(), name) != known.end(),
            "config: unknown policy '" + name + "'");
  }
  if (initial_x) {
    require(initial_x->size() == L + 1 && (*initial_x)[0] == 0 &&
                (*initial_x >= 0).all(),
            "config: bad initial SS state");
  }
  if (initial_y) {
    require(initial_y->size() == K + 1 && (*initial_y)[0] == 0 &&
                (*initial_y >= 0).all(),
            "config: bad initial RS state");
  }
  for (long t : checkpoints) {
    require(t >= 1 && t <= horizon, "config: checkpoint outside [1, horizon]");
  }
}

std::vector<long> ExperimentConfig::effective_checkpoints() const {
  if (!checkpoints.empty()) return checkpoints;
  std::vector<long> out;
  for (long t : {horizon / 4, horizon / 2, horizon}) {
    if (t >= 1 && (out.empty() || t != out.back())) out.push_back(t);
  }
  return out;
}

PacketCount real_sum(const QueueVec& v) {
  return v.tail(v.size() - 1).sum();
}

Trajectory simulate(const ExperimentConfig& config, Policy& policy,
                    long replication) {
  const Index L = config.L;
  const Index K = config.K;
  SplitMix64 driver_rng = SplitMix64::stream(config.seed,
                                             static_cast<std::uint64_t>(
                                                 replication),
                                             0);
  SplitMix64 policy_rng = SplitMix64::stream(config.seed,
                                             static_cast<std::uint64_t>(
                                                 replication),
                                             1);
  policy.reset();

  SystemState state = SystemState::empty(L, K);
  if (config.initial_x) state.x = *config.initial_x;
  if (config.initial_y) state.y = *config.initial_y;

  Trajectory traj;
  traj.replication = replication;
  traj.slots.reserve(static_cast<std::size_t>(config.horizon));
  History history;

  BoolVec cs, cr;
  QueueVec arrivals;
  for (long t = 1; t <= config.horizon; ++t) {
    sample_drivers(config.params, L, K, driver_rng, cs, cr, arrivals);
    state.cs = cs;
    state.cr = cr;
    if (t == 1) traj.initial = state;
    const Control control = policy.decide(history, state, policy_rng);
    traj.slots.push_back({state, control, arrivals});
    traj.cost_x_series.push_back(real_sum(state.x));
    traj.cost_y_series.push_back(real_sum(state.y));
    history.push_back(traj.slots.back());
    state = step(state, control, arrivals);
  }
  if (config.horizon == 0) traj.initial = state;
  traj.final_state = state;
  return traj;
}

std::vector<Trajectory> run_replications(const ExperimentConfig& config,
                                         Policy& policy) {
  config.validate();
  std::vector<Trajectory> out;
  out.reserve(static_cast<std::size_t>(config.replications));
  for (long r = 0; r < config.replications; ++r) {
    out.push_back(simulate(config, policy, r));
  }
  return out;
}

CheckpointCosts run_checkpoint_costs(const ExperimentConfig& config,
                                     Policy& policy,
                                     const std::vector<long>& checkpoints) {
  config.validate();
  CheckpointCosts costs;
  costs.checkpoints = checkpoints;
  costs.cost_x.reserve(static_cast<std::size_t>(config.replications));
  costs.cost_y.reserve(static_cast<std::size_t>(config.replications));
  for (long r = 0; r < config.replications; ++r) {
    const Trajectory traj = simulate(config, policy, r);
    std::vector<PacketCount> row_x, row_y;
    for (long t : checkpoints) {
      row_x.push_back(traj.cost_x_series[static_cast<std::size_t>(t - 1)]);
      row_y.push_back(traj.cost_y_series[static_cast<std::size_t>(t - 1)]);
    }
    costs.cost_x.push_back(std::move(row_x));
    costs.cost_y.push_back(std::move(row_y));
  }
  return costs;
}

DominanceReport empirical_dominance(const ExperimentConfig& config,
                                    const std::string& policy_a,
                                    const std::string& policy_b,
                                    const std::vector<long>& checkpoints,
                                    double alpha) {
  config.validate();
  require(!checkpoints.empty(), "dominance: no checkpoints");
  require(config.replications >= 1000,
          "dominance: at least 1000 replications required");
  require(alpha > 0 && alpha < 1, "dominance: alpha must lie in (0,1)");

  auto pa = make_policy(policy_a);
  auto pb = make_policy(policy_b);
  const CheckpointCosts ca = run_checkpoint_costs(config, *pa, checkpoints);
  const CheckpointCosts cb = run_checkpoint_costs(config, *pb, checkpoints);

  DominanceReport report;
  report.policy_a = policy_a;
  report.policy_b = policy_b;
  report.replications = config.replications;
  report.alpha = alpha;
  report.checkpoints = checkpoints;
  const double n = static_cast<double>(config.replications);
  const double alpha_adj = alpha / static_cast<double>(checkpoints.size());
  report.epsilon = std::sqrt(std::log(2.0 / alpha_adj) / (2.0 * n));

  auto cdf_at = [n](const std::vector<PacketCount>& sorted, PacketCount z) {
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), z);
    return static_cast<double>(it - sorted.begin()) / n;
  };

  for (std::size_t c = 0; c < checkpoints.size(); ++c) {
    for (char stack : {'x', 'y'}) {
      const auto& ma = (stack == 'x') ? ca.cost_x : ca.cost_y;
      const auto& mb = (stack == 'x') ? cb.cost_x : cb.cost_y;
      std::vector<PacketCount> va, vb;
      for (const auto& row : ma) va.push_back(row[c]);
      for (const auto& row : mb) vb.push_back(row[c]);
      std::sort(va.begin(), va.end());
      std::sort(vb.begin(), vb.end());

      double mean_a = 0, mean_b = 0;
      for (PacketCount v : va) mean_a += static_cast<double>(v);
      for (PacketCount v : vb) mean_b += static_cast<double>(v);
      mean_a /= n;
      mean_b /= n;
      if (stack == 'x') {
        report.mean_x_a.push_back(mean_a);
        report.mean_x_b.push_back(mean_b);
      } else {
        report.mean_y_a.push_back(mean_a);
        report.mean_y_b.push_back(mean_b);
      }

      std::set<PacketCount> support(va.begin(), va.end());
      support.insert(vb.begin(), vb.end());
      for (PacketCount z : support) {
        const double fa = cdf_at(va, z);
        const double fb = cdf_at(vb, z);
        if (fa < fb - report.epsilon) {
          report.violations.push_back(
              {checkpoints[c], z, stack, fa, fb});
        }
      }
    }
  }
  return report;
}

Theorem1Report exhaustive_theorem1_sweep(int L_max, int K_max, int entry_max) {
  Theorem1Report report;
  for (int L = 1; L <= L_max; ++L) {
    for (int K = 1; K <= K_max; ++K) {
      // Odometer over (x, y, cs, cr) for the real queues.
      std::vector<int> digits(static_cast<std::size_t>(L + K), 0);
      std::vector<int> bits(static_cast<std::size_t>(L + K), 0);
      for (;;) {
        for (;;) {
          SystemState s = SystemState::empty(L, K);
          for (int i = 0; i < L; ++i) {
            s.x[i + 1] = digits[static_cast<std::size_t>(i)];
            s.cs[i + 1] = bits[static_cast<std::size_t>(i)] != 0;
          }
          for (int j = 0; j < K; ++j) {
            s.y[j + 1] = digits[static_cast<std::size_t>(L + j)];
            s.cr[j + 1] = bits[static_cast<std::size_t>(L + j)] != 0;
          }
          ++report.states_checked;
          const MBVerdict verdict = mb_oracle(s);
          if (verdict.empty_intersection) {
            ++report.empty_intersections;
          } else {
            const Control c = lcq_sq_lcq(s);
            if (!std::binary_search(verdict.intersection.begin(),
                                    verdict.intersection.end(), c)) {
              ++report.membership_failures;
            }
          }
          // advance connectivity bits
          std::size_t pos = 0;
          while (pos < bits.size() && bits[pos] == 1) bits[pos++] = 0;
          if (pos == bits.size()) break;
          bits[pos] = 1;
        }
        std::size_t pos = 0;
        while (pos < digits.size() && digits[pos] == entry_max) {
          digits[pos++] = 0;
        }
        if (pos == digits.size()) break;
        ++digits[pos];
      }
    }
  }
  return report;
}

Lemma2Report lemma2_exhaustive_sweep(int dim_max, int entry_max) {
  Lemma2Report report;
  for (int dim = 2; dim <= dim_max; ++dim) {
    // Enumerate descending vectors recursively.
    QueueVec v(dim);
    auto recurse = [&](auto&& self, int pos, PacketCount max_val) -> void {
      if (pos == dim) {
        for (int l = 1; l <= dim; ++l) {
          // l must be the last rank holding its value.
          if (l < dim && v[l] == v[l - 1]) continue;
          for (int s = l + 1; s <= dim; ++s) {
            if (v[s - 1] >= v[l - 1]) continue;  // x_l > x_s required
            // s must be the first rank holding its value.
            if (v[s - 2] == v[s - 1]) continue;
            ++report.cases_checked;
            const std::int64_t predicted =
                lemma2_predicted_delta(v, l, s);
            const QueueVec after = apply_interchange(v, l - 1, s - 1);
            const std::int64_t observed = kappa(after) - kappa(v);
            if (observed != predicted) ++report.mismatches;
          }
        }
        return;
      }
      for (PacketCount val = max_val; val >= 0; --val) {
        v[pos] = val;
        self(self, pos + 1, val);
      }
    };
    recurse(recurse, 0, entry_max);
  }
  return report;
}

}  // namespace relay
