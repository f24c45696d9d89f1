#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "relay/imbalance.hpp"
#include "relay/model.hpp"
#include "relay/policies.hpp"

using namespace relay;

namespace {

QueueVec vec(std::initializer_list<PacketCount> xs) {
  QueueVec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (PacketCount x : xs) v[i++] = x;
  return v;
}

BoolVec bits(std::initializer_list<int> xs) {
  BoolVec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (int x : xs) v[i++] = x != 0;
  return v;
}

SystemState make_state(QueueVec x, QueueVec y, BoolVec cs, BoolVec cr) {
  SystemState s;
  s.x = std::move(x);
  s.y = std::move(y);
  s.cs = std::move(cs);
  s.cr = std::move(cr);
  return s;
}

SystemState random_state(SplitMix64& rng, Index max_dim = 3,
                         PacketCount max_entry = 4) {
  const Index L = 1 + static_cast<Index>(rng.below(max_dim));
  const Index K = 1 + static_cast<Index>(rng.below(max_dim));
  SystemState s = SystemState::empty(L, K);
  for (Index i = 1; i <= L; ++i) {
    s.x[i] = static_cast<PacketCount>(
        rng.below(static_cast<std::uint64_t>(max_entry + 1)));
    s.cs[i] = rng.bernoulli(0.5);
  }
  for (Index j = 1; j <= K; ++j) {
    s.y[j] = static_cast<PacketCount>(
        rng.below(static_cast<std::uint64_t>(max_entry + 1)));
    s.cr[j] = rng.bernoulli(0.5);
  }
  return s;
}

bool contains(const std::vector<Control>& sorted, const Control& c) {
  return std::binary_search(sorted.begin(), sorted.end(), c);
}

}  // namespace

TEST_CASE("updated_queues") {
  auto s = make_state(vec({0, 3, 1}), vec({0, 2, 0}), bits({1, 1, 1}),
                      bits({1, 1, 1}));
  auto [x_hat, y_hat] = updated_queues(s, {1, 2, 1});
  CHECK((x_hat == vec({0, 2, 1})).all());
  CHECK((y_hat == vec({0, 1, 1})).all());

  auto [xi, yi] = updated_queues(s, {0, 0, 0});
  CHECK((xi == s.x).all());
  CHECK((yi == s.y).all());

  CHECK_THROWS_AS(updated_queues(s, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("lcq_sq_lcq worked example") {
  // LCQ picks SS 1, SQ routes to RS 2, post-insertion LCQ drains RS 1.
  const auto s = make_state(vec({0, 3, 1}), vec({0, 2, 0}), bits({1, 1, 1}),
                            bits({1, 1, 1}));
  const Control c = lcq_sq_lcq(s);
  CHECK(c == Control{1, 2, 1});
  CHECK(is_feasible(s, c));
  CHECK(contains(mb_oracle(s).intersection, c));
}

TEST_CASE("lcq_sq_lcq u2 connectivity tie rule") {
  const auto s = make_state(vec({0, 1}), vec({0, 2, 2}), bits({1, 1}),
                            bits({1, 0, 1}));
  CHECK(lcq_sq_lcq(s).u2 == 2);
}

TEST_CASE("lcq_sq_lcq forced idle") {
  auto s = make_state(vec({0, 0, 0}), vec({0, 1, 0}), bits({1, 1, 1}),
                      bits({1, 1, 1}));
  Control c = lcq_sq_lcq(s);
  CHECK(c.u1 == 0);
  CHECK(c.u2 == 0);

  s = make_state(vec({0, 3, 1}), vec({0, 1, 0}), bits({1, 0, 0}),
                 bits({1, 1, 1}));
  c = lcq_sq_lcq(s);
  CHECK(c.u1 == 0);
  CHECK(c.u2 == 0);
  CHECK(c.u3 == 1);
}

TEST_CASE("u3 maximizes y plus the insertion, not y") {
  // RS 2 only becomes the unique maximum through the routed packet.
  const auto s = make_state(vec({0, 2}), vec({0, 1, 1}), bits({1, 1}),
                            bits({1, 1, 1}));
  const Control c = lcq_sq_lcq(s);
  CHECK(c.u2 == 1);  // shortest tie, lowest index, connected
  CHECK(c.u3 == 1);  // y + vr = [0,2,1], maximum is the routed queue
}

TEST_CASE("mb_oracle") {
  auto s = SystemState::empty(2, 2);
  auto verdict = mb_oracle(s);
  CHECK(verdict.intersection == std::vector<Control>{{0, 0, 0}});
  CHECK_FALSE(verdict.empty_intersection);

  // All real SS queues equal and connected: the real-queue imbalance ties
  // between idling and serving, but the dummy bookkeeping (a served dummy
  // sits at -1 pre-arrival) keeps idle controls out of argmin_x.
  s = make_state(vec({0, 2, 2}), vec({0, 0, 0}), bits({1, 1, 1}),
                 bits({1, 1, 1}));
  verdict = mb_oracle(s);
  CHECK_FALSE(contains(verdict.argmin_x, Control{0, 0, 0}));
  for (const Control& c : verdict.argmin_x) CHECK(c.u1 != 0);
  CHECK(contains(verdict.intersection, lcq_sq_lcq(s)));
}

TEST_CASE("theorem 1 membership on random states") {
  SplitMix64 rng(2024);
  int empty_intersections = 0;
  int checked = 0;
  for (int iter = 0; iter < 2000; ++iter) {
    const SystemState s = random_state(rng);
    const MBVerdict verdict = mb_oracle(s);
    if (verdict.empty_intersection) {
      // The two argmin sets can be disjoint: serving the longest SS queue
      // may force a packet into an RS queue that idling would have left
      // balanced. The sweeps count these states; membership is only
      // meaningful where the intersection is populated.
      ++empty_intersections;
      continue;
    }
    ++checked;
    CHECK(contains(verdict.intersection, lcq_sq_lcq(s)));
  }
  CHECK(checked > 1000);
  CHECK(empty_intersections > 0);
}

TEST_CASE("feasibility contract for every shipped policy") {
  SplitMix64 rng(99);
  const History empty_history;
  for (const std::string& name : policy_names()) {
    auto policy = make_policy(name);
    SplitMix64 policy_rng = SplitMix64::stream(5, 0, 1);
    policy->reset();
    for (int iter = 0; iter < 20000; ++iter) {
      const SystemState s = random_state(rng);
      const Control c = policy->decide(empty_history, s, policy_rng);
      if (!is_feasible(s, c)) {
        CAPTURE(name);
        REQUIRE(is_feasible(s, c));
      }
    }
  }
}

TEST_CASE("lcq_sq_lcq is deterministic") {
  SplitMix64 rng(31);
  for (int iter = 0; iter < 200; ++iter) {
    const SystemState s = random_state(rng);
    CHECK(lcq_sq_lcq(s) == lcq_sq_lcq(s));
  }
}

TEST_CASE("baseline definitions") {
  SplitMix64 rng(1);
  const History h;

  auto random = make_policy("random");
  CHECK(random->decide(h, SystemState::empty(2, 2), rng) == Control{0, 0, 0});

  auto rr = make_policy("rr");
  rr->reset();
  auto s = make_state(vec({0, 1, 1}), vec({0, 0, 0}), bits({1, 1, 1}),
                      bits({1, 1, 1}));
  const Control first = rr->decide(h, s, rng);
  CHECK(first.u1 == 1);
  const Control second = rr->decide(h, s, rng);
  CHECK(second.u1 == 2);

  auto anti = make_policy("anti");
  s = make_state(vec({0, 3, 1}), vec({0, 0, 0}), bits({1, 1, 1}),
                 bits({1, 1, 1}));
  CHECK(anti->decide(h, s, rng).u1 == 2);

  auto lrr = make_policy("lcq-rand-route");
  s = make_state(vec({0, 3, 1}), vec({0, 2, 0}), bits({1, 1, 1}),
                 bits({1, 1, 1}));
  for (int iter = 0; iter < 20; ++iter) {
    const Control c = lrr->decide(h, s, rng);
    CHECK(c.u1 == 1);
    CHECK(is_feasible(s, c));
  }

  CHECK_THROWS_AS(make_policy("nope"), std::invalid_argument);
}

TEST_CASE("registry lists five policies") {
  const auto names = policy_names();
  CHECK(names.size() == 5);
  for (const auto& name : names) CHECK(make_policy(name)->name() == name);
}
