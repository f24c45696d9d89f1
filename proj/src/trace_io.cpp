#include "relay/trace_io.hpp"

#include <chrono>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "relay/model.hpp"

namespace relay {

namespace {

std::string bits(const BoolVec& v) {
  std::string s;
  s.reserve(static_cast<std::size_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) s += v[i] ? '1' : '0';
  return s;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

}  // namespace

void write_trace_csv(std::ostream& out, const std::vector<Trajectory>& trajs,
                     Index L, Index K, bool reproducible) {
  out << "# relay-sim trace\n";
  if (!reproducible) {
    const auto now = std::chrono::system_clock::now();
    out << "# generated "
        << std::chrono::duration_cast<std::chrono::seconds>(
               now.time_since_epoch())
               .count()
        << "\n";
  }
  out << "rep,t";
  for (Index i = 0; i <= L; ++i) out << ",x_" << i;
  for (Index j = 0; j <= K; ++j) out << ",y_" << j;
  out << ",cs_bits,cr_bits,u1,u2,u3";
  for (Index i = 1; i <= L; ++i) out << ",a_" << i;
  out << ",cost_x,cost_y\n";

  for (const Trajectory& traj : trajs) {
    long t = 1;
    for (const SlotRecord& rec : traj.slots) {
      out << traj.replication << ',' << t;
      for (Index i = 0; i <= L; ++i) out << ',' << rec.state.x[i];
      for (Index j = 0; j <= K; ++j) out << ',' << rec.state.y[j];
      out << ',' << bits(rec.state.cs) << ',' << bits(rec.state.cr) << ','
          << rec.control.u1 << ',' << rec.control.u2 << ',' << rec.control.u3;
      for (Index i = 1; i <= L; ++i) out << ',' << rec.arrivals[i];
      out << ',' << real_sum(rec.state.x) << ',' << real_sum(rec.state.y)
          << '\n';
      ++t;
    }
  }
}

std::vector<Trajectory> read_trace_csv(std::istream& in) {
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    header = split(line, ',');
    break;
  }
  if (header.empty()) return {};

  Index L = -1, K = -1;
  for (const std::string& col : header) {
    if (col.rfind("x_", 0) == 0) L = std::max<Index>(L, std::stol(col.substr(2)));
    if (col.rfind("y_", 0) == 0) K = std::max<Index>(K, std::stol(col.substr(2)));
  }
  if (L < 1 || K < 1) throw std::runtime_error("trace: malformed header");

  std::map<long, Trajectory> by_rep;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto f = split(line, ',');
    const std::size_t expected =
        2 + static_cast<std::size_t>(L + 1) + static_cast<std::size_t>(K + 1) +
        2 + 3 + static_cast<std::size_t>(L) + 2;
    if (f.size() != expected) throw std::runtime_error("trace: bad row");

    std::size_t pos = 0;
    const long rep = std::stol(f[pos++]);
    ++pos;  // t is implied by row order within a replication
    SlotRecord rec;
    rec.state.x = QueueVec(L + 1);
    rec.state.y = QueueVec(K + 1);
    for (Index i = 0; i <= L; ++i) rec.state.x[i] = std::stoll(f[pos++]);
    for (Index j = 0; j <= K; ++j) rec.state.y[j] = std::stoll(f[pos++]);
    const std::string cs = f[pos++];
    const std::string cr = f[pos++];
    if (cs.size() != static_cast<std::size_t>(L + 1) ||
        cr.size() != static_cast<std::size_t>(K + 1)) {
      throw std::runtime_error("trace: bad connectivity bits");
    }
    rec.state.cs = BoolVec(L + 1);
    rec.state.cr = BoolVec(K + 1);
    for (Index i = 0; i <= L; ++i) rec.state.cs[i] = cs[i] == '1';
    for (Index j = 0; j <= K; ++j) rec.state.cr[j] = cr[j] == '1';
    rec.control.u1 = std::stoi(f[pos++]);
    rec.control.u2 = std::stoi(f[pos++]);
    rec.control.u3 = std::stoi(f[pos++]);
    rec.arrivals = QueueVec::Zero(L + 1);
    for (Index i = 1; i <= L; ++i) rec.arrivals[i] = std::stoll(f[pos++]);

    Trajectory& traj = by_rep[rep];
    traj.replication = rep;
    if (traj.slots.empty()) traj.initial = rec.state;
    traj.cost_x_series.push_back(real_sum(rec.state.x));
    traj.cost_y_series.push_back(real_sum(rec.state.y));
    traj.slots.push_back(std::move(rec));
  }

  std::vector<Trajectory> out;
  for (auto& [rep, traj] : by_rep) {
    const SlotRecord& last = traj.slots.back();
    traj.final_state = step(last.state, last.control, last.arrivals);
    out.push_back(std::move(traj));
  }
  return out;
}

nlohmann::json to_json(const DominanceReport& report) {
  nlohmann::json j;
  j["type"] = "dominance";
  j["policy_a"] = report.policy_a;
  j["policy_b"] = report.policy_b;
  j["replications"] = report.replications;
  j["alpha"] = report.alpha;
  j["epsilon"] = report.epsilon;
  j["checkpoints"] = report.checkpoints;
  j["mean_x_a"] = report.mean_x_a;
  j["mean_x_b"] = report.mean_x_b;
  j["mean_y_a"] = report.mean_y_a;
  j["mean_y_b"] = report.mean_y_b;
  j["violations"] = nlohmann::json::array();
  for (const DominanceViolation& v : report.violations) {
    j["violations"].push_back({{"checkpoint", v.checkpoint},
                               {"threshold", v.threshold},
                               {"stack", std::string(1, v.stack)},
                               {"cdf_a", v.cdf_a},
                               {"cdf_b", v.cdf_b}});
  }
  j["dominates"] = report.dominates();
  return j;
}

nlohmann::json to_json(const Theorem1Report& report) {
  return {{"type", "theorem1_sweep"},
          {"states_checked", report.states_checked},
          {"membership_failures", report.membership_failures},
          {"empty_intersections", report.empty_intersections}};
}

nlohmann::json to_json(const Lemma2Report& report) {
  return {{"type", "lemma2_sweep"},
          {"cases_checked", report.cases_checked},
          {"mismatches", report.mismatches}};
}

}  // namespace relay
