#include "relay/model.hpp"

#include <stdexcept>
#include <string>

namespace relay {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

FlowVectors derive_flows(const SystemState& state, const Control& control) {
  const Index L = state.num_ss();
  const Index K = state.num_rs();
  require(control.u1 >= 0 && control.u1 <= L, "derive_flows: u1 out of range");
  require(control.u2 >= 0 && control.u2 <= K, "derive_flows: u2 out of range");
  require(control.u3 >= 0 && control.u3 <= K, "derive_flows: u3 out of range");

  FlowVectors f;
  f.ws = QueueVec::Zero(L + 1);
  f.wr = QueueVec::Zero(K + 1);
  f.vr = QueueVec::Zero(K + 1);
  f.ws[control.u1] = 1;
  f.wr[control.u3] = 1;
  // Dummy transmissions insert nothing; real packets never go to queue 0.
  if (control.u1 >= 1 && control.u2 >= 1) f.vr[control.u2] = 1;
  return f;
}

bool is_feasible(const SystemState& state, const Control& control) {
  const Index L = state.num_ss();
  const Index K = state.num_rs();
  if (control.u1 < 0 || control.u1 > L) return false;
  if (control.u2 < 0 || control.u2 > K) return false;
  if (control.u3 < 0 || control.u3 > K) return false;
  if ((control.u1 == 0) != (control.u2 == 0)) return false;

  if (control.u1 != 0 &&
      !(state.x[control.u1] > 0 && state.cs[control.u1])) {
    return false;
  }
  if (control.u3 != 0) {
    // u3 executes after u2: the routed packet counts.
    PacketCount after = state.y[control.u3];
    if (control.u1 >= 1 && control.u2 == control.u3) after += 1;
    if (!(after > 0 && state.cr[control.u3])) return false;
  }
  return true;
}

std::vector<Control> feasible_controls(const SystemState& state) {
  const int L = static_cast<int>(state.num_ss());
  const int K = static_cast<int>(state.num_rs());
  std::vector<Control> out;
  for (int u1 = 0; u1 <= L; ++u1) {
    const int u2_lo = (u1 == 0) ? 0 : 1;
    const int u2_hi = (u1 == 0) ? 0 : K;
    for (int u2 = u2_lo; u2 <= u2_hi; ++u2) {
      for (int u3 = 0; u3 <= K; ++u3) {
        Control c{u1, u2, u3};
        if (is_feasible(state, c)) out.push_back(c);
      }
    }
  }
  return out;
}

SystemState step(const SystemState& state, const Control& control,
                 const QueueVec& arrivals) {
  require(is_feasible(state, control), "step: infeasible control");
  require(arrivals.size() == state.x.size(), "step: arrival size mismatch");
  require(arrivals[0] == 0 && (arrivals >= 0).all() && (arrivals <= 1).all(),
          "step: invalid arrival vector");

  const FlowVectors f = derive_flows(state, control);
  SystemState next;
  next.x = state.x - f.ws + arrivals;
  next.y = state.y + f.vr - f.wr;
  next.x[0] = 0;  // dummy bookkeeping reduces to pinning
  next.y[0] = 0;
  next.cs = BoolVec::Constant(state.x.size(), false);
  next.cr = BoolVec::Constant(state.y.size(), false);
  next.cs[0] = true;
  next.cr[0] = true;
  return next;
}

void sample_drivers(const StochasticParams& params, Index L, Index K,
                    SplitMix64& rng, BoolVec& cs, BoolVec& cr,
                    QueueVec& arrivals) {
  cs = BoolVec::Constant(L + 1, true);
  cr = BoolVec::Constant(K + 1, true);
  arrivals = QueueVec::Zero(L + 1);
  for (Index i = 1; i <= L; ++i) {
    const double p = params.p_ss.empty() ? params.p : params.p_ss[i - 1];
    cs[i] = rng.bernoulli(p);
  }
  for (Index j = 1; j <= K; ++j) {
    const double p = params.p_rs.empty() ? params.p : params.p_rs[j - 1];
    cr[j] = rng.bernoulli(p);
  }
  for (Index i = 1; i <= L; ++i) {
    const double q = params.q_ss.empty() ? params.q : params.q_ss[i - 1];
    arrivals[i] = rng.bernoulli(q) ? 1 : 0;
  }
}

}  // namespace relay
