#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relay/harness.hpp"
#include "relay/trace_io.hpp"

namespace {

// Exit codes: 0 success, 1 usage/config error, 2 verification or
// invariant failure, 3 I/O error.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitViolation = 2;
constexpr int kExitIo = 3;

struct CliOptions {
  relay::ExperimentConfig config;
  std::string out_dir = ".";
  std::string out_file;
  bool reproducible = false;
  bool print_config = false;
  double alpha = 0.01;
  int dim_max = 5;
  int entry_max = 6;
  int grid_l = 3;
  int grid_k = 3;
  int grid_entry = 3;
};

void add_experiment_flags(CLI::App& cmd, CliOptions& opt) {
  cmd.add_option("--L", opt.config.L, "Number of SS queues");
  cmd.add_option("--K", opt.config.K, "Number of RS queues");
  cmd.add_option("--p", opt.config.params.p, "Connectivity probability");
  cmd.add_option("--q", opt.config.params.q, "Arrival probability");
  cmd.add_option("--horizon", opt.config.horizon, "Slots per replication");
  cmd.add_option("--replications", opt.config.replications,
                 "Replication count");
  cmd.add_option("--seed", opt.config.seed, "Experiment seed");
  cmd.add_option("--policy", opt.config.policies,
                 "Policy name (repeatable; first is the reference)");
  cmd.add_option("--checkpoint", opt.config.checkpoints,
                 "Checkpoint slot (repeatable)");
  cmd.add_option("--out", opt.out_file, "Output file path");
  cmd.add_option("--out-dir", opt.out_dir, "Default output directory")
      ->envname("RELAY_OUT_DIR");
  cmd.add_flag("--reproducible", opt.reproducible,
               "Omit timestamp headers for byte-identical outputs");
  cmd.add_flag("--print-config", opt.print_config,
               "Print the effective configuration and exit");
  cmd.set_config("--config", "", "Key-value config file (flags override)");
}

void dump_config(const CliOptions& opt) {
  const auto& c = opt.config;
  std::cout << "L=" << c.L << "\nK=" << c.K << "\np=" << c.params.p
            << "\nq=" << c.params.q << "\nhorizon=" << c.horizon
            << "\nreplications=" << c.replications << "\nseed=" << c.seed
            << "\n";
  for (const auto& p : c.policies) std::cout << "policy=" << p << "\n";
  for (long t : c.effective_checkpoints()) {
    std::cout << "checkpoint=" << t << "\n";
  }
}

std::string out_path(const CliOptions& opt, const std::string& fallback) {
  if (!opt.out_file.empty()) return opt.out_file;
  return (std::filesystem::path(opt.out_dir) / fallback).string();
}

int cmd_simulate(CliOptions& opt) {
  if (opt.config.policies.empty()) opt.config.policies = {"mb"};
  opt.config.validate();
  if (opt.print_config) {
    dump_config(opt);
    return kExitOk;
  }
  for (const std::string& name : opt.config.policies) {
    auto policy = relay::make_policy(name);
    const auto trajs = relay::run_replications(opt.config, *policy);
    const std::string path =
        opt.config.policies.size() == 1 && !opt.out_file.empty()
            ? opt.out_file
            : out_path(opt, "trace_" + name + ".csv");
    std::ofstream out(path);
    if (!out) {
      std::cerr << "cannot open " << path << "\n";
      return kExitIo;
    }
    relay::write_trace_csv(out, trajs, opt.config.L, opt.config.K,
                           opt.reproducible);
    if (!out) {
      std::cerr << "write failed: " << path << "\n";
      return kExitIo;
    }
    std::cout << "wrote " << path << " (" << trajs.size()
              << " replications)\n";
  }
  return kExitOk;
}

int cmd_dominance(CliOptions& opt) {
  if (opt.config.policies.size() < 2) {
    std::cerr << "dominance needs at least two --policy names\n";
    return kExitConfig;
  }
  opt.config.validate();
  if (opt.print_config) {
    dump_config(opt);
    return kExitOk;
  }
  const auto checkpoints = opt.config.effective_checkpoints();
  const std::string path = out_path(opt, "dominance.jsonl");
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot open " << path << "\n";
    return kExitIo;
  }
  bool any_violation = false;
  for (std::size_t i = 1; i < opt.config.policies.size(); ++i) {
    const auto report = relay::empirical_dominance(
        opt.config, opt.config.policies[0], opt.config.policies[i],
        checkpoints, opt.alpha);
    out << relay::to_json(report).dump() << "\n";
    std::cout << report.policy_a << " vs " << report.policy_b << ": "
              << report.violations.size() << " violations\n";
    any_violation |= !report.dominates();
  }
  if (!out) {
    std::cerr << "write failed: " << path << "\n";
    return kExitIo;
  }
  std::cout << "wrote " << path << "\n";
  return any_violation ? kExitViolation : kExitOk;
}

int cmd_verify(CliOptions& opt) {
  const auto lemma2 =
      relay::lemma2_exhaustive_sweep(opt.dim_max, opt.entry_max);
  const auto theorem1 =
      relay::exhaustive_theorem1_sweep(opt.grid_l, opt.grid_k, opt.grid_entry);
  std::cout << "lemma2: " << lemma2.cases_checked << " cases, "
            << lemma2.mismatches << " mismatches; theorem1: "
            << theorem1.states_checked << " states, "
            << theorem1.membership_failures << " membership failures, "
            << theorem1.empty_intersections << " empty intersections\n";
  if (!opt.out_file.empty()) {
    std::ofstream out(opt.out_file);
    if (!out) {
      std::cerr << "cannot open " << opt.out_file << "\n";
      return kExitIo;
    }
    out << relay::to_json(lemma2).dump() << "\n"
        << relay::to_json(theorem1).dump() << "\n";
    if (!out) return kExitIo;
  }
  const bool failed =
      lemma2.mismatches != 0 || theorem1.membership_failures != 0;
  return failed ? kExitViolation : kExitOk;
}

int cmd_list_policies() {
  for (const auto& name : relay::policy_names()) std::cout << name << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-time simulator for two-stage wireless relay "
               "scheduling policies"};
  app.require_subcommand(1);

  CliOptions opt;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Run replications and write per-slot CSV traces");
  add_experiment_flags(*simulate, opt);

  CLI::App* dominance = app.add_subcommand(
      "dominance",
      "Test empirical stochastic dominance of the first policy over the rest");
  add_experiment_flags(*dominance, opt);
  dominance->add_option("--alpha", opt.alpha,
                        "Joint confidence level for the DKW bands");

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the exhaustive interchange-identity and MB-membership "
                "sweeps");
  verify->add_option("--dim-max", opt.dim_max, "Max vector dimension");
  verify->add_option("--entry-max", opt.entry_max, "Max vector entry");
  verify->add_option("--grid-L", opt.grid_l, "Max SS queues in the sweep");
  verify->add_option("--grid-K", opt.grid_k, "Max RS queues in the sweep");
  verify->add_option("--grid-entry", opt.grid_entry,
                     "Max queue length in the sweep");
  verify->add_option("--out", opt.out_file, "Report file (JSON lines)");

  CLI::App* list =
      app.add_subcommand("list-policies", "Print the policy registry");

  try {
    app.parse(argc, argv);
    if (simulate->parsed()) return cmd_simulate(opt);
    if (dominance->parsed()) return cmd_dominance(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (list->parsed()) return cmd_list_policies();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
