#include "relay/policies.hpp"

#include <algorithm>
#include <stdexcept>

#include "relay/imbalance.hpp"
#include "relay/model.hpp"

namespace relay {

std::pair<QueueVec, QueueVec> updated_queues(const SystemState& state,
                                             const Control& control) {
  if (!is_feasible(state, control)) {
    throw std::invalid_argument("updated_queues: infeasible control");
  }
  const FlowVectors f = derive_flows(state, control);
  QueueVec x_hat = state.x - f.ws;
  QueueVec y_hat = state.y + f.vr - f.wr;
  x_hat[0] = 0;
  y_hat[0] = 0;
  return {std::move(x_hat), std::move(y_hat)};
}

Control lcq_sq_lcq(const SystemState& state) {
  const Index L = state.num_ss();
  const Index K = state.num_rs();
  Control c;

  // u1: longest connected SS queue; forced idle when none is non-empty.
  for (Index i = 1; i <= L; ++i) {
    if (state.cs[i] && state.x[i] > 0 &&
        (c.u1 == 0 || state.x[i] > state.x[c.u1])) {
      c.u1 = static_cast<int>(i);
    }
  }

  // u2: shortest real RS queue, preferring a connected one among ties.
  if (c.u1 != 0) {
    Index best = 1;
    for (Index j = 2; j <= K; ++j) {
      if (state.y[j] < state.y[best]) best = j;
    }
    if (!state.cr[best]) {
      for (Index j = 1; j <= K; ++j) {
        if (state.y[j] == state.y[best] && state.cr[j]) {
          best = j;
          break;
        }
      }
    }
    c.u2 = static_cast<int>(best);
  }

  // u3: longest connected RS queue after the u2 insertion.
  for (Index j = 1; j <= K; ++j) {
    PacketCount after = state.y[j] + ((c.u1 >= 1 && c.u2 == j) ? 1 : 0);
    if (!state.cr[j] || after <= 0) continue;
    PacketCount cur = 0;
    if (c.u3 != 0) {
      cur = state.y[c.u3] + ((c.u1 >= 1 && c.u2 == c.u3) ? 1 : 0);
    }
    if (c.u3 == 0 || after > cur) c.u3 = static_cast<int>(j);
  }
  return c;
}

MBVerdict mb_oracle(const SystemState& state) {
  MBVerdict verdict;
  std::int64_t best_kx = 0;
  std::int64_t best_ky = 0;
  for (const Control& c : feasible_controls(state)) {
    // The argmin comparison keeps the raw pre-arrival bookkeeping: a served
    // dummy queue drops to -1 instead of being pinned, so controls that idle
    // a stage never tie with controls that serve it. Pinning here would let
    // idle controls into the argmin sets whenever the real-queue imbalance
    // ties, and the balancing algorithm (which never idles voluntarily)
    // would fall outside the intersection.
    const FlowVectors f = derive_flows(state, c);
    const std::int64_t kx = kappa(state.x - f.ws);
    const std::int64_t ky = kappa(state.y + f.vr - f.wr);
    if (verdict.argmin_x.empty() || kx < best_kx) {
      best_kx = kx;
      verdict.argmin_x.clear();
    }
    if (kx == best_kx) verdict.argmin_x.push_back(c);
    if (verdict.argmin_y.empty() || ky < best_ky) {
      best_ky = ky;
      verdict.argmin_y.clear();
    }
    if (ky == best_ky) verdict.argmin_y.push_back(c);
  }
  // feasible_controls is sorted, so the argmin subsets are too.
  std::set_intersection(verdict.argmin_x.begin(), verdict.argmin_x.end(),
                        verdict.argmin_y.begin(), verdict.argmin_y.end(),
                        std::back_inserter(verdict.intersection));
  verdict.empty_intersection = verdict.intersection.empty();
  return verdict;
}

namespace {

class MostBalancingPolicy final : public Policy {
 public:
  Control decide(const History&, const SystemState& state,
                 SplitMix64&) override {
    return lcq_sq_lcq(state);
  }
  std::string_view name() const override { return "mb"; }
};

class RandomFeasiblePolicy final : public Policy {
 public:
  Control decide(const History&, const SystemState& state,
                 SplitMix64& rng) override {
    const auto controls = feasible_controls(state);
    return controls[rng.below(controls.size())];
  }
  std::string_view name() const override { return "random"; }
};

class RoundRobinPolicy final : public Policy {
 public:
  Control decide(const History&, const SystemState& state,
                 SplitMix64&) override {
    const Index L = state.num_ss();
    const Index K = state.num_rs();
    Control c;
    for (Index k = 1; k <= L; ++k) {
      const Index i = (ss_cursor_ + k - 1) % L + 1;
      if (state.cs[i] && state.x[i] > 0) {
        c.u1 = static_cast<int>(i);
        ss_cursor_ = i;
        break;
      }
    }
    if (c.u1 != 0) {
      Index best = 1;
      for (Index j = 2; j <= K; ++j) {
        if (state.y[j] < state.y[best]) best = j;
      }
      c.u2 = static_cast<int>(best);
    }
    for (Index k = 1; k <= K; ++k) {
      const Index j = (rs_cursor_ + k - 1) % K + 1;
      const PacketCount after =
          state.y[j] + ((c.u1 >= 1 && c.u2 == j) ? 1 : 0);
      if (state.cr[j] && after > 0) {
        c.u3 = static_cast<int>(j);
        rs_cursor_ = j;
        break;
      }
    }
    return c;
  }
  std::string_view name() const override { return "rr"; }
  void reset() override { ss_cursor_ = rs_cursor_ = 0; }

 private:
  Index ss_cursor_ = 0;
  Index rs_cursor_ = 0;
};

class LcqRandomRoutePolicy final : public Policy {
 public:
  Control decide(const History&, const SystemState& state,
                 SplitMix64& rng) override {
    const Index K = state.num_rs();
    Control c = lcq_sq_lcq(state);
    if (c.u1 != 0) {
      c.u2 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(K)));
    }
    // Redo u3 against the random route.
    c.u3 = 0;
    for (Index j = 1; j <= K; ++j) {
      const PacketCount after =
          state.y[j] + ((c.u1 >= 1 && c.u2 == j) ? 1 : 0);
      if (!state.cr[j] || after <= 0) continue;
      PacketCount cur = 0;
      if (c.u3 != 0) {
        cur = state.y[c.u3] + ((c.u1 >= 1 && c.u2 == c.u3) ? 1 : 0);
      }
      if (c.u3 == 0 || after > cur) c.u3 = static_cast<int>(j);
    }
    return c;
  }
  std::string_view name() const override { return "lcq-rand-route"; }
};

// Anti-balancing baseline: shortest connected SS transmitter, longest RS
// destination, shortest connected RS transmitter.
class ServeShortestPolicy final : public Policy {
 public:
  Control decide(const History&, const SystemState& state,
                 SplitMix64&) override {
    const Index L = state.num_ss();
    const Index K = state.num_rs();
    Control c;
    for (Index i = 1; i <= L; ++i) {
      if (state.cs[i] && state.x[i] > 0 &&
          (c.u1 == 0 || state.x[i] < state.x[c.u1])) {
        c.u1 = static_cast<int>(i);
      }
    }
    if (c.u1 != 0) {
      Index best = 1;
      for (Index j = 2; j <= K; ++j) {
        if (state.y[j] > state.y[best]) best = j;
      }
      c.u2 = static_cast<int>(best);
    }
    for (Index j = 1; j <= K; ++j) {
      const PacketCount after =
          state.y[j] + ((c.u1 >= 1 && c.u2 == j) ? 1 : 0);
      if (!state.cr[j] || after <= 0) continue;
      PacketCount cur = 0;
      if (c.u3 != 0) {
        cur = state.y[c.u3] + ((c.u1 >= 1 && c.u2 == c.u3) ? 1 : 0);
      }
      if (c.u3 == 0 || after < cur) c.u3 = static_cast<int>(j);
    }
    return c;
  }
  std::string_view name() const override { return "anti"; }
};

}  // namespace

std::unique_ptr<Policy> make_policy(std::string_view name) {
  if (name == "mb") return std::make_unique<MostBalancingPolicy>();
  if (name == "random") return std::make_unique<RandomFeasiblePolicy>();
  if (name == "rr") return std::make_unique<RoundRobinPolicy>();
  if (name == "lcq-rand-route") {
    return std::make_unique<LcqRandomRoutePolicy>();
  }
  if (name == "anti") return std::make_unique<ServeShortestPolicy>();
  throw std::invalid_argument("unknown policy: " + std::string(name));
}

std::vector<std::string> policy_names() {
  return {"mb", "random", "rr", "lcq-rand-route", "anti"};
}

}  // namespace relay
