#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "beliefnet/detection.hpp"
#include "beliefnet/signal_model.hpp"
#include "beliefnet/topology.hpp"

namespace beliefnet {

// Orchestration config, normally parsed from a JSON file:
//   {"experiment": "...", "network": {...}, "model": <id|object>,
//    "horizon": T, "seeds": [...], "delta": d, "eta": "theorem1"|number,
//    "output": "dir", "format": "csv"|"json", ...experiment extras...}
//
// Experiment extras: epsilon (channel-demo), p_high (binary builtins),
// threshold (convergence), removals + tracked_agents (link-failure),
// tracked_agents (optimize-gap). Agent ids in configs and emitted tables are
// 1-based; the C++ and C APIs are 0-based.
struct ExperimentConfig {
  std::string experiment;
  NetworkSpec network;
  nlohmann::json model_ref;  // builtin id (string), {"builtin": id, ...}, or inline model
  int horizon = 1;
  std::vector<std::uint64_t> seeds{1};
  double delta = 0.1;
  std::optional<double> eta;  // empty = theorem1
  std::string output_dir;     // empty = no files written
  std::string format = "csv";
  double epsilon = 0.1;
  double p_high = 0.75;
  double threshold = 0.99;
  int removals = 50;
  std::vector<int> tracked;  // 1-based
  bool check = false;

  static ExperimentConfig defaults_for(const std::string& experiment);
  static ExperimentConfig from_json(const nlohmann::json& j);
  static ExperimentConfig from_json_text(const std::string& text);
  nlohmann::json to_json() const;
};

// Report body layout (JSON): config echo, per_seed array, aggregate block
// recomputable from per_seed, bound_satisfaction_fraction, checks array and
// wall_clock_seconds. checks_passed folds the embedded check results.
struct ExperimentReport {
  nlohmann::json body;
  bool checks_passed = true;

  std::string to_json_text() const { return body.dump(2) + "\n"; }
};

// Builtin scenarios -------------------------------------------------------

// n agents, n+1 states: agent i's pmf under state i+1 matches its pmf under
// the true state (binary symbols, P(1) = p_high for those two states and
// 1 - p_high elsewhere), so each agent alone is blind to exactly one rival
// state while the network as a whole is identifiable.
ModelBundle equivalence_binary_model(int agents, double p_high = 0.75);

// Two receivers watching a two-digit channel: each decodes one digit with
// success probability 1 - epsilon and sees pure noise on the other, so
// neither alone can identify the transmitted pair.
ModelBundle channel_model(double epsilon = 0.1);

// One informative binary marginal (P(1) = p_high under the true state,
// 1 - p_high under the rival) placed at `informative_agent` (0-based); every
// other agent observes state-independent coin flips.
ModelBundle allocation_model(int agents, int informative_agent, double p_high = 0.75);

// Experiments -------------------------------------------------------------

ExperimentReport run_convergence(const ExperimentConfig& config);
ExperimentReport run_optimize_gap(const ExperimentConfig& config);
ExperimentReport run_link_failure(const ExperimentConfig& config);
ExperimentReport run_channel_demo(const ExperimentConfig& config);
ExperimentReport run_centrality_allocation(const ExperimentConfig& config);
ExperimentReport run_custom(const ExperimentConfig& config);

// Dispatch on config.experiment.
ExperimentReport run_experiment(const ExperimentConfig& config);
ExperimentReport run_experiment_json(const std::string& config_text);

// Concurrency cap for independent seeded runs: BELIEFNET_THREADS, where 0 or
// unset means hardware concurrency; always clamped to the run count.
int thread_cap(std::size_t runs);

}  // namespace beliefnet
