#include "relay/imbalance.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace relay {

std::int64_t kappa(const QueueVec& v) {
  std::vector<PacketCount> s(v.data(), v.data() + v.size());
  std::sort(s.begin(), s.end(), std::greater<>());
  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      total += s[i] - s[j];
    }
  }
  return total;
}

QueueVec apply_interchange(QueueVec v, Index donor, Index recipient) {
  if (donor < 0 || donor >= v.size() || recipient < 0 ||
      recipient >= v.size() || donor == recipient) {
    throw std::invalid_argument("apply_interchange: bad indices");
  }
  if (v[donor] < v[recipient] + 1) {
    throw std::invalid_argument(
        "apply_interchange: donor must exceed recipient");
  }
  v[donor] -= 1;
  v[recipient] += 1;
  return v;
}

std::int64_t lemma2_predicted_delta(const QueueVec& sorted_desc, int rank_l,
                                    int rank_s) {
  const int n = static_cast<int>(sorted_desc.size());
  for (int k = 0; k + 1 < n; ++k) {
    if (sorted_desc[k] < sorted_desc[k + 1]) {
      throw std::invalid_argument("lemma2_predicted_delta: not descending");
    }
  }
  if (rank_l < 1 || rank_s > n || rank_s <= rank_l) {
    throw std::invalid_argument("lemma2_predicted_delta: bad ranks");
  }
  const PacketCount xl = sorted_desc[rank_l - 1];
  const PacketCount xs = sorted_desc[rank_s - 1];
  if (xl <= xs) {
    throw std::invalid_argument("lemma2_predicted_delta: x_l must exceed x_s");
  }
  // l must be the last rank holding x_l, s the first rank holding x_s.
  if (rank_l < n && sorted_desc[rank_l] >= xl) {
    throw std::invalid_argument("lemma2_predicted_delta: l not last of value");
  }
  if (rank_s > 1 && sorted_desc[rank_s - 2] <= xs) {
    throw std::invalid_argument("lemma2_predicted_delta: s not first of value");
  }
  return (xl >= xs + 2) ? -2 * static_cast<std::int64_t>(rank_s - rank_l) : 0;
}

std::int64_t min_kappa(Index m, std::int64_t level) {
  if (m < 1 || level < 0) {
    throw std::invalid_argument("min_kappa: bad arguments");
  }
  return static_cast<std::int64_t>(m) * level;
}

}  // namespace relay
