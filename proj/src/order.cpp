#include "relay/order.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <utility>

namespace relay {

namespace {

using Key = std::vector<PacketCount>;

Key to_key(const QueueVec& v) {
  return Key(v.data(), v.data() + v.size());
}

QueueVec from_key(const Key& k) {
  QueueVec v(static_cast<Index>(k.size()));
  for (Index i = 0; i < v.size(); ++i) v[i] = k[static_cast<std::size_t>(i)];
  return v;
}

// Emits every single S1/S2/S3 step out of `v`. S1 is one relation
// instance per pointwise reduction, so one step may drop several units.
template <typename Fn>
void for_each_step(const QueueVec& v, Fn&& emit) {
  const Index n = v.size();

  // S1: odometer over all w with 0 <= w_i <= v_i, w != v.
  QueueVec w = QueueVec::Zero(n);
  for (;;) {
    if ((w != v).any()) {
      emit(RelationStep{RelationStep::Kind::Reduction, -1, -1, v, w});
    }
    Index pos = 0;
    while (pos < n && w[pos] == v[pos]) {
      w[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
    ++w[pos];
  }

  // S2: swaps of two unequal components.
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (v[i] == v[j]) continue;
      QueueVec s = v;
      std::swap(s[i], s[j]);
      emit(RelationStep{RelationStep::Kind::TwoComponentPermutation, i, j, v,
                        std::move(s)});
    }
  }

  // S3: balancing interchanges.
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j || v[i] < v[j] + 1) continue;
      QueueVec s = v;
      s[i] -= 1;
      s[j] += 1;
      emit(RelationStep{RelationStep::Kind::BalancingInterchange, i, j, v,
                        std::move(s)});
    }
  }
}

}  // namespace

OrderResult is_preferred(const QueueVec& candidate, const QueueVec& reference,
                         PacketCount entry_bound, std::size_t state_budget) {
  if (candidate.size() != reference.size()) {
    throw std::invalid_argument("is_preferred: dimension mismatch");
  }
  if ((candidate < 0).any() || (reference < 0).any() ||
      (candidate > entry_bound).any() || (reference > entry_bound).any()) {
    throw std::invalid_argument("is_preferred: entries out of bounds");
  }

  OrderResult result;
  const Key target = to_key(candidate);
  const Key start = to_key(reference);

  // Reflexive by definition of a closure.
  if (target == start) {
    result.decision = OrderDecision::Related;
    result.states_explored = 1;
    return result;
  }

  std::map<Key, std::pair<Key, RelationStep>> parent;
  std::deque<Key> frontier{start};
  parent.emplace(start, std::make_pair(Key{}, RelationStep{}));
  bool found = false;

  while (!frontier.empty() && !found) {
    const Key cur_key = frontier.front();
    frontier.pop_front();
    ++result.states_explored;
    if (result.states_explored > state_budget) {
      result.decision = OrderDecision::Undecided;
      return result;
    }
    const QueueVec cur = from_key(cur_key);
    for_each_step(cur, [&](RelationStep step) {
      if (found) return;
      Key next = to_key(step.after);
      if (parent.contains(next)) return;
      parent.emplace(next, std::make_pair(cur_key, std::move(step)));
      if (next == target) {
        found = true;
        return;
      }
      frontier.push_back(std::move(next));
    });
  }

  if (!found) {
    result.decision = OrderDecision::NotRelated;
    return result;
  }

  result.decision = OrderDecision::Related;
  for (Key k = target; k != start;) {
    auto& [prev, step] = parent.at(k);
    result.witness.push_back(step);
    k = prev;
  }
  std::reverse(result.witness.begin(), result.witness.end());
  return result;
}

MonotoneReport check_monotone(const CostFunction& f, Index dimension,
                              PacketCount entry_bound) {
  MonotoneReport report;
  QueueVec v = QueueVec::Zero(dimension);
  for (;;) {
    const double before = f(v);
    for_each_step(v, [&](RelationStep step) {
      if (!report.passed) return;
      ++report.steps_checked;
      if (f(step.after) > before) {
        report.passed = false;
        report.violation = std::move(step);
      }
    });
    if (!report.passed) break;
    Index pos = 0;
    while (pos < dimension && v[pos] == entry_bound) {
      v[pos] = 0;
      ++pos;
    }
    if (pos == dimension) break;
    ++v[pos];
  }
  return report;
}

QueueVec replay_chain(const QueueVec& start,
                      const std::vector<RelationStep>& chain) {
  QueueVec cur = start;
  for (const RelationStep& step : chain) {
    if (step.before.size() != cur.size() || (step.before != cur).any()) {
      throw std::invalid_argument("replay_chain: step does not apply");
    }
    switch (step.kind) {
      case RelationStep::Kind::Reduction:
        if ((step.after > cur).any() || (step.after == cur).all()) {
          throw std::invalid_argument("replay_chain: invalid reduction");
        }
        break;
      case RelationStep::Kind::TwoComponentPermutation: {
        QueueVec s = cur;
        std::swap(s[step.i], s[step.j]);
        if ((step.after != s).any()) {
          throw std::invalid_argument("replay_chain: invalid permutation");
        }
        break;
      }
      case RelationStep::Kind::BalancingInterchange: {
        if (cur[step.i] < cur[step.j] + 1) {
          throw std::invalid_argument("replay_chain: invalid interchange");
        }
        QueueVec s = cur;
        s[step.i] -= 1;
        s[step.j] += 1;
        if ((step.after != s).any()) {
          throw std::invalid_argument("replay_chain: invalid interchange");
        }
        break;
      }
    }
    cur = step.after;
  }
  return cur;
}

}  // namespace relay
