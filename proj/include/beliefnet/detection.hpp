#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "beliefnet/markov.hpp"
#include "beliefnet/matrix.hpp"
#include "beliefnet/signal_model.hpp"

namespace beliefnet {

// Accumulated per-agent and centralized score vectors. Scores start at zero
// and are never renormalized; only beliefs are.
struct ScoreState {
  Eigen::VectorXd phi_central;  // length m
  Eigen::MatrixXd phi_agents;   // n x m
  int round = 0;

  static ScoreState zero(int agents, int states);
};

struct BeliefProfile {
  Eigen::VectorXd mu_central;
  Eigen::MatrixXd mu_agents;  // rows are probability vectors
};

// One synchronized round: every agent averages its neighbors' scores through
// W and adds its own log-likelihood vector; the centralized score adds the
// centrality-weighted average of the same vectors. Within a round the agent
// rows are independent, so results do not depend on update order.
void step(const RowStochasticMatrix& W, const Eigen::VectorXd& centrality,
          const SignalModel& model, const StateSpace& states, ScoreState& scores,
          const std::vector<int>& signals);

// Independent oracle for the score recursion: the double sum over explicitly
// computed matrix powers of W applied to the full signal history
// (history[t][i] = agent i's symbol at round t+1).
Eigen::MatrixXd closed_form_scores(const RowStochasticMatrix& W,
                                   const std::vector<std::vector<int>>& history,
                                   const SignalModel& model, const StateSpace& states);

// Exponential-weights belief map: row-wise softmax of eta * phi, computed
// with max subtraction since scores grow linearly with the round count.
BeliefProfile beliefs(const ScoreState& scores, double eta);

// D_KL(mu_agent || mu_central) in nats. Both arguments must be strictly
// positive probability vectors.
double kl_cost_increment(const Eigen::VectorXd& mu_agent, const Eigen::VectorXd& mu_central);

// Prescribed learning rate gap / (16 B log n).
double theorem1_eta(double log_bound, int agents, double gap);

// High-probability ceiling on the cumulative decentralization cost:
// max{ 8B^2/I12^2 * log(mT/delta), (4B log n / I12) * log(mT)/gap } + 1.
double theorem1_bound(double log_bound, int agents, int states, int horizon, double gap,
                      double min_info, double delta);

// High-probability ceiling on (1/eta) log TV(mu_{i,t}, truth):
// -I12 t + sqrt(2 B^2 t log(m/delta)) + 8 B log n / gap + log(m)/eta.
double lemma3_bound(int round, double eta, double log_bound, int agents, int states,
                    double gap, double min_info, double delta);

struct RunConfig {
  int horizon = 1;
  std::optional<double> eta;  // empty = theorem1_eta
  double delta = 0.1;
  std::uint64_t seed = 1;
};

// Full trajectory of one simulated run. Per-round per-agent data is stored
// flat as [round * n + agent]; bounds are per round. When the model is not
// identifiable the bound columns are +infinity and identifiable is false.
struct Trajectory {
  int agents = 0;
  int states = 0;
  int horizon = 0;
  double eta = 0.0;
  double delta = 0.0;
  double log_bound = 0.0;
  double gap = 0.0;
  double min_info = 0.0;
  bool identifiable = false;
  std::uint64_t seed = 0;
  Eigen::VectorXd centrality;

  std::vector<double> belief_true;  // mu_{i,t}(true)
  std::vector<double> tv;           // 1 - belief_true
  std::vector<double> cost_cum;     // running sum of KL increments
  std::vector<double> q_inf;        // || phi_{i,t} - phi_t ||_inf
  std::vector<double> lemma3;       // per-round bound value
  std::vector<double> theorem1;     // bound evaluated at horizon = round

  Eigen::VectorXd final_cost;
  double theorem1_bound_final = 0.0;

  double at(const std::vector<double>& v, int round, int agent) const {
    return v[static_cast<std::size_t>(round - 1) * agents + agent];
  }
};

// Simulates both engines over config.horizon rounds on a shared signal
// stream. `analysis` optionally reuses a precomputed spectral summary (which
// carries the centrality); otherwise one is computed here.
Trajectory run(const RowStochasticMatrix& W, const SignalModel& model,
               const StateSpace& states, const RunConfig& config,
               const SpectralSummary* analysis = nullptr);

}  // namespace beliefnet
