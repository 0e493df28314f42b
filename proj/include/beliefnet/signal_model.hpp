#pragma once

#include <Eigen/Dense>
#include <random>
#include <string>
#include <vector>

#include "beliefnet/errors.hpp"

namespace beliefnet {

// Finite hypothesis set. true_state is 0-based in memory; the JSON exchange
// format carries it 1-based under the key "true_index".
struct StateSpace {
  int m = 0;
  std::vector<std::string> labels;
  int true_state = 0;

  static StateSpace make(std::vector<std::string> labels, int true_state);
};

// Per-agent finite signal alphabets with one conditional pmf per state.
// pmfs are validated on construction, never renormalized: each row must sum
// to 1 within 1e-12 and every entry must stay at or above the support floor,
// which keeps every log-likelihood finite and bounded.
class SignalModel {
 public:
  static constexpr double kDefaultFloor = 1e-6;
  static constexpr double kPmfSumTol = 1e-12;

  struct AgentChannel {
    std::vector<std::string> alphabet;
    Eigen::MatrixXd pmf;      // m x |alphabet|, row k = conditional pmf under state k
    Eigen::MatrixXd log_pmf;  // cached natural logs of pmf
  };

  static SignalModel make(std::vector<AgentChannel> agents, int state_count,
                          double floor = kDefaultFloor);

  int agent_count() const { return static_cast<int>(agents_.size()); }
  int state_count() const { return state_count_; }
  double floor() const { return floor_; }
  const AgentChannel& agent(int i) const;

  // B: the exact maximum of |log pmf| over the stored table.
  double log_bound() const { return log_bound_; }

  // Index of a symbol name in agent i's alphabet; unknown_signal if absent.
  int symbol_index(int agent, const std::string& name) const;

 private:
  SignalModel() = default;
  std::vector<AgentChannel> agents_;
  int state_count_ = 0;
  double floor_ = kDefaultFloor;
  double log_bound_ = 0.0;
};

// A signal model together with its state space; the unit of model exchange.
// JSON format:
//   {"m": int, "labels": [...], "true_index": int (1-based),
//    "floor": double (optional),
//    "agents": [{"alphabet": [...], "pmfs": [[... per symbol ...] per state]}]}
struct ModelBundle {
  SignalModel model;
  StateSpace states;

  static ModelBundle from_json(const std::string& text);
  std::string to_json() const;
};

// One synchronized observation round: each agent draws independently from its
// pmf under the true state. Deterministic given the generator state.
std::vector<int> sample_signal(const SignalModel& model, const StateSpace& states,
                               std::mt19937_64& rng);

// psi: the length-m vector of log-likelihoods of one observed symbol under
// every state. ||psi||_inf <= log_bound().
Eigen::VectorXd log_likelihood_vector(const SignalModel& model, int agent, int symbol);

// KL table against the true state, the aggregated per-state information
// weighted by centrality, and the observational-equivalence structure.
//
// equiv_sets[i] lists the states agent i cannot distinguish from the true
// state (pmf identical entrywise within 1e-12, true state included);
// global_equiv is their intersection. min_info is the smallest aggregated
// information over non-true states, with ties broken toward the lowest state
// index. identifiable means global_equiv == {true_state}.
struct InformationProfile {
  Eigen::MatrixXd kl;                        // n x m, column at true state is zero
  std::vector<double> info;                  // length m, 0 at the true state
  std::vector<std::vector<int>> equiv_sets;  // ascending state indices
  std::vector<int> global_equiv;
  double min_info = 0.0;
  int min_state = -1;
  bool identifiable = false;
};

InformationProfile information_profile(const SignalModel& model, const StateSpace& states,
                                       const Eigen::VectorXd& centrality);

inline bool check_identifiability(const InformationProfile& profile) {
  return profile.identifiable;
}

}  // namespace beliefnet
