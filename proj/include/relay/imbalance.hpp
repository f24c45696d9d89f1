#ifndef RELAY_IMBALANCE_HPP
#define RELAY_IMBALANCE_HPP

#include "relay/types.hpp"

namespace relay {

// Imbalance index: sum of pairwise differences of descending order
// statistics, kappa(v) = sum_{i<j} (v_[i] - v_[j]). Permutation- and
// translation-invariant; zero iff all components are equal.
std::int64_t kappa(const QueueVec& v);

// Balancing interchange: move one unit from v[donor] to v[recipient].
// Requires v[donor] >= v[recipient] + 1; throws otherwise.
QueueVec apply_interchange(QueueVec v, Index donor, Index recipient);

// Predicted kappa change of a balancing interchange on a descending
// vector between ranks l and s (1-based, as order statistics):
// -2(s-l) if x_l >= x_s + 2, else 0. Requires the rank conditions
// s > l, x_l > x_s, x_l > x_a for all a > l, x_s < x_b for all b < s
// (l is the last rank holding its value, s the first); throws otherwise.
std::int64_t lemma2_predicted_delta(const QueueVec& sorted_desc, int rank_l,
                                    int rank_s);

// Minimum imbalance index of an (M+1)-dimensional vector (one dummy
// component) whose real components all sit at `level`: M * level.
std::int64_t min_kappa(Index m, std::int64_t level);

}  // namespace relay

#endif  // RELAY_IMBALANCE_HPP
