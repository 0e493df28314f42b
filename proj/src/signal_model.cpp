#include "beliefnet/signal_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "beliefnet/rng.hpp"

namespace beliefnet {

StateSpace StateSpace::make(std::vector<std::string> labels, int true_state) {
  StateSpace s;
  s.m = static_cast<int>(labels.size());
  if (s.m < 2) fail(errc::invalid_argument, "state space needs at least 2 states");
  std::set<std::string> unique(labels.begin(), labels.end());
  if (static_cast<int>(unique.size()) != s.m)
    fail(errc::invalid_argument, "state labels must be unique");
  if (true_state < 0 || true_state >= s.m)
    fail(errc::invalid_argument, "true state index out of range");
  s.labels = std::move(labels);
  s.true_state = true_state;
  return s;
}

SignalModel SignalModel::make(std::vector<AgentChannel> agents, int state_count, double floor) {
  if (agents.empty()) fail(errc::invalid_argument, "model needs at least one agent");
  if (state_count < 2) fail(errc::invalid_argument, "model needs at least 2 states");
  if (!(floor > 0.0)) fail(errc::invalid_argument, "support floor must be positive");

  double log_bound = 0.0;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    auto& a = agents[i];
    const int symbols = static_cast<int>(a.alphabet.size());
    if (symbols < 1) fail(errc::invalid_argument, "agent " + std::to_string(i) + ": empty alphabet");
    std::set<std::string> unique(a.alphabet.begin(), a.alphabet.end());
    if (static_cast<int>(unique.size()) != symbols)
      fail(errc::invalid_argument, "agent " + std::to_string(i) + ": duplicate symbols");
    if (a.pmf.rows() != state_count || a.pmf.cols() != symbols)
      fail(errc::dimension_mismatch,
           "agent " + std::to_string(i) + ": pmf table must be states x alphabet");
    for (int k = 0; k < state_count; ++k) {
      double sum = 0.0;
      for (int s = 0; s < symbols; ++s) {
        const double p = a.pmf(k, s);
        if (!std::isfinite(p) || p < floor)
          fail(errc::domain_error, "agent " + std::to_string(i) + ", state " + std::to_string(k) +
                                       ": pmf entry below the support floor");
        sum += p;
      }
      if (std::abs(sum - 1.0) > kPmfSumTol)
        fail(errc::domain_error, "agent " + std::to_string(i) + ", state " + std::to_string(k) +
                                     ": pmf does not sum to 1");
    }
    a.log_pmf = a.pmf.array().log().matrix();
    log_bound = std::max(log_bound, a.log_pmf.cwiseAbs().maxCoeff());
  }

  SignalModel m;
  m.agents_ = std::move(agents);
  m.state_count_ = state_count;
  m.floor_ = floor;
  m.log_bound_ = log_bound;
  return m;
}

const SignalModel::AgentChannel& SignalModel::agent(int i) const {
  if (i < 0 || i >= agent_count()) fail(errc::invalid_argument, "agent index out of range");
  return agents_[static_cast<std::size_t>(i)];
}

int SignalModel::symbol_index(int agent_idx, const std::string& name) const {
  const auto& a = agent(agent_idx);
  const auto it = std::find(a.alphabet.begin(), a.alphabet.end(), name);
  if (it == a.alphabet.end())
    fail(errc::unknown_signal, "symbol \"" + name + "\" not in agent alphabet");
  return static_cast<int>(it - a.alphabet.begin());
}

ModelBundle ModelBundle::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::invalid_argument, std::string("model json: ") + e.what());
  }
  for (const char* key : {"m", "labels", "true_index", "agents"})
    if (!doc.contains(key))
      fail(errc::invalid_argument, std::string("model json: missing \"") + key + "\"");

  const int m = doc["m"].get<int>();
  auto labels = doc["labels"].get<std::vector<std::string>>();
  if (static_cast<int>(labels.size()) != m)
    fail(errc::invalid_argument, "model json: labels/m mismatch");
  const int true_index = doc["true_index"].get<int>();  // 1-based on the wire
  StateSpace states = StateSpace::make(std::move(labels), true_index - 1);

  const double floor = doc.value("floor", SignalModel::kDefaultFloor);
  std::vector<SignalModel::AgentChannel> agents;
  for (const auto& aj : doc["agents"]) {
    SignalModel::AgentChannel ch;
    ch.alphabet = aj.at("alphabet").get<std::vector<std::string>>();
    const auto& pmfs = aj.at("pmfs");
    if (!pmfs.is_array() || static_cast<int>(pmfs.size()) != m)
      fail(errc::invalid_argument, "model json: pmfs must hold one row per state");
    const int symbols = static_cast<int>(ch.alphabet.size());
    ch.pmf.resize(m, symbols);
    for (int k = 0; k < m; ++k) {
      if (static_cast<int>(pmfs[k].size()) != symbols)
        fail(errc::invalid_argument, "model json: pmf row length mismatch");
      for (int s = 0; s < symbols; ++s) ch.pmf(k, s) = pmfs[k][s].get<double>();
    }
    agents.push_back(std::move(ch));
  }
  return ModelBundle{SignalModel::make(std::move(agents), m, floor), std::move(states)};
}

std::string ModelBundle::to_json() const {
  nlohmann::json doc;
  doc["m"] = states.m;
  doc["labels"] = states.labels;
  doc["true_index"] = states.true_state + 1;
  doc["floor"] = model.floor();
  auto agents = nlohmann::json::array();
  for (int i = 0; i < model.agent_count(); ++i) {
    const auto& a = model.agent(i);
    nlohmann::json aj;
    aj["alphabet"] = a.alphabet;
    auto pmfs = nlohmann::json::array();
    for (int k = 0; k < states.m; ++k) {
      auto row = nlohmann::json::array();
      for (int s = 0; s < a.pmf.cols(); ++s) row.push_back(a.pmf(k, s));
      pmfs.push_back(std::move(row));
    }
    aj["pmfs"] = std::move(pmfs);
    agents.push_back(std::move(aj));
  }
  doc["agents"] = std::move(agents);
  return doc.dump();
}

std::vector<int> sample_signal(const SignalModel& model, const StateSpace& states,
                               std::mt19937_64& rng) {
  if (model.state_count() != states.m)
    fail(errc::dimension_mismatch, "model and state space disagree on m");
  std::vector<int> symbols(static_cast<std::size_t>(model.agent_count()));
  for (int i = 0; i < model.agent_count(); ++i) {
    const auto& a = model.agent(i);
    const Eigen::RowVectorXd row = a.pmf.row(states.true_state);
    symbols[static_cast<std::size_t>(i)] =
        sample_pmf(rng, row.data(), static_cast<int>(row.size()));
  }
  return symbols;
}

Eigen::VectorXd log_likelihood_vector(const SignalModel& model, int agent, int symbol) {
  const auto& a = model.agent(agent);
  if (symbol < 0 || symbol >= a.pmf.cols())
    fail(errc::unknown_signal, "symbol index out of range for agent alphabet");
  return a.log_pmf.col(symbol);
}

InformationProfile information_profile(const SignalModel& model, const StateSpace& states,
                                       const Eigen::VectorXd& centrality) {
  const int n = model.agent_count();
  const int m = states.m;
  if (model.state_count() != m) fail(errc::dimension_mismatch, "model and state space disagree");
  if (centrality.size() != n)
    fail(errc::dimension_mismatch, "centrality length must equal the agent count");
  if (centrality.minCoeff() <= 0.0)
    fail(errc::domain_error, "centrality must be strictly positive");
  if (std::abs(centrality.sum() - 1.0) > 1e-9)
    fail(errc::domain_error, "centrality must sum to 1");

  // Equivalence is entrywise pmf identity; KL vanishing on exactly those
  // pairs is asserted by the tests rather than assumed here.
  constexpr double kSameTol = 1e-12;

  InformationProfile p;
  p.kl = Eigen::MatrixXd::Zero(n, m);
  p.info.assign(static_cast<std::size_t>(m), 0.0);
  p.equiv_sets.resize(static_cast<std::size_t>(n));
  const int truth = states.true_state;

  for (int i = 0; i < n; ++i) {
    const auto& a = model.agent(i);
    for (int k = 0; k < m; ++k) {
      if (k == truth) {
        p.equiv_sets[static_cast<std::size_t>(i)].push_back(k);
        continue;
      }
      double kl = 0.0;
      for (int s = 0; s < a.pmf.cols(); ++s)
        kl += a.pmf(truth, s) * (a.log_pmf(truth, s) - a.log_pmf(k, s));
      p.kl(i, k) = std::max(kl, 0.0);
      const bool same = (a.pmf.row(truth) - a.pmf.row(k)).cwiseAbs().maxCoeff() <= kSameTol;
      if (same) p.equiv_sets[static_cast<std::size_t>(i)].push_back(k);
    }
  }

  for (int k = 0; k < m; ++k) {
    if (k == truth) continue;
    double info = 0.0;
    for (int i = 0; i < n; ++i) info += centrality(i) * p.kl(i, k);
    p.info[static_cast<std::size_t>(k)] = info;
  }

  for (int k = 0; k < m; ++k) {
    bool everywhere = true;
    for (int i = 0; i < n && everywhere; ++i) {
      const auto& set = p.equiv_sets[static_cast<std::size_t>(i)];
      everywhere = std::binary_search(set.begin(), set.end(), k);
    }
    if (everywhere) p.global_equiv.push_back(k);
  }

  p.min_state = -1;
  p.min_info = std::numeric_limits<double>::infinity();
  for (int k = 0; k < m; ++k) {
    if (k == truth) continue;
    if (p.info[static_cast<std::size_t>(k)] < p.min_info) {
      p.min_info = p.info[static_cast<std::size_t>(k)];
      p.min_state = k;
    }
  }
  p.identifiable = (p.global_equiv.size() == 1 && p.global_equiv.front() == truth);
  return p;
}

}  // namespace beliefnet
