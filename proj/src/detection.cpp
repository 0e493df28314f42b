#include "beliefnet/detection.hpp"

#include <cmath>
#include <limits>

#include "beliefnet/rng.hpp"

namespace beliefnet {

namespace {

// log softmax of eta * x, max-subtracted. Scores grow linearly with the
// round count, so the naive path overflows long before the horizon ends.
Eigen::VectorXd log_softmax_scaled(const Eigen::VectorXd& x, double eta) {
  Eigen::VectorXd z = eta * x;
  const double zmax = z.maxCoeff();
  const double lse = zmax + std::log((z.array() - zmax).exp().sum());
  return z.array() - lse;
}

// KL between two distributions given in log space; immune to belief
// underflow (a vanished belief contributes exactly zero mass).
double kl_from_logs(const Eigen::VectorXd& log_a, const Eigen::VectorXd& log_b) {
  double kl = 0.0;
  for (Eigen::Index k = 0; k < log_a.size(); ++k) {
    const double pa = std::exp(log_a(k));
    if (pa > 0.0) kl += pa * (log_a(k) - log_b(k));
  }
  return std::max(kl, 0.0);
}

}  // namespace

ScoreState ScoreState::zero(int agents, int states) {
  ScoreState s;
  s.phi_central = Eigen::VectorXd::Zero(states);
  s.phi_agents = Eigen::MatrixXd::Zero(agents, states);
  s.round = 0;
  return s;
}

void step(const RowStochasticMatrix& W, const Eigen::VectorXd& centrality,
          const SignalModel& model, const StateSpace& states, ScoreState& scores,
          const std::vector<int>& signals) {
  const int n = W.order();
  const int m = states.m;
  if (model.agent_count() != n || model.state_count() != m ||
      scores.phi_agents.rows() != n || scores.phi_agents.cols() != m ||
      scores.phi_central.size() != m || centrality.size() != n ||
      static_cast<int>(signals.size()) != n)
    fail(errc::dimension_mismatch, "step: inconsistent dimensions");

  Eigen::MatrixXd psi(n, m);
  for (int i = 0; i < n; ++i)
    psi.row(i) = log_likelihood_vector(model, i, signals[static_cast<std::size_t>(i)]).transpose();

  scores.phi_agents = W.entries() * scores.phi_agents + psi;
  scores.phi_central += psi.transpose() * centrality;
  scores.round += 1;
}

Eigen::MatrixXd closed_form_scores(const RowStochasticMatrix& W,
                                   const std::vector<std::vector<int>>& history,
                                   const SignalModel& model, const StateSpace& states) {
  const int n = W.order();
  const int m = states.m;
  if (model.agent_count() != n || model.state_count() != m)
    fail(errc::dimension_mismatch, "closed_form_scores: inconsistent dimensions");

  Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(n, m);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);  // W^(t - tau)
  for (std::size_t back = 0; back < history.size(); ++back) {
    const auto& signals = history[history.size() - 1 - back];
    if (static_cast<int>(signals.size()) != n)
      fail(errc::dimension_mismatch, "closed_form_scores: bad history row");
    Eigen::MatrixXd psi(n, m);
    for (int i = 0; i < n; ++i)
      psi.row(i) =
          log_likelihood_vector(model, i, signals[static_cast<std::size_t>(i)]).transpose();
    phi += power * psi;
    if (back + 1 < history.size()) power *= W.entries();
  }
  return phi;
}

BeliefProfile beliefs(const ScoreState& scores, double eta) {
  if (!(eta > 0.0)) fail(errc::domain_error, "eta must be positive");
  BeliefProfile b;
  b.mu_central = log_softmax_scaled(scores.phi_central, eta).array().exp();
  b.mu_agents.resize(scores.phi_agents.rows(), scores.phi_agents.cols());
  for (Eigen::Index i = 0; i < scores.phi_agents.rows(); ++i)
    b.mu_agents.row(i) =
        log_softmax_scaled(scores.phi_agents.row(i).transpose(), eta).array().exp();
  return b;
}

double kl_cost_increment(const Eigen::VectorXd& mu_agent, const Eigen::VectorXd& mu_central) {
  if (mu_agent.size() != mu_central.size())
    fail(errc::dimension_mismatch, "kl_cost_increment: length mismatch");
  if (mu_agent.minCoeff() <= 0.0 || mu_central.minCoeff() <= 0.0)
    fail(errc::domain_error, "kl_cost_increment: entries must be strictly positive");
  if (std::abs(mu_agent.sum() - 1.0) > 1e-9 || std::abs(mu_central.sum() - 1.0) > 1e-9)
    fail(errc::domain_error, "kl_cost_increment: arguments must sum to 1");
  double kl = 0.0;
  for (Eigen::Index k = 0; k < mu_agent.size(); ++k)
    kl += mu_agent(k) * std::log(mu_agent(k) / mu_central(k));
  return std::max(kl, 0.0);
}

double theorem1_eta(double log_bound, int agents, double gap) {
  if (agents < 2) fail(errc::invalid_network, "theorem1_eta: need at least 2 agents");
  if (!(log_bound > 0.0)) fail(errc::domain_error, "theorem1_eta: log bound must be positive");
  if (!(gap > 0.0) || gap > 1.0) fail(errc::domain_error, "theorem1_eta: gap must lie in (0, 1]");
  return gap / (16.0 * log_bound * std::log(static_cast<double>(agents)));
}

double theorem1_bound(double log_bound, int agents, int states, int horizon, double gap,
                      double min_info, double delta) {
  if (min_info <= 0.0) fail(errc::not_identifiable, "theorem1_bound: information gap is zero");
  if (!(delta > 0.0 && delta < 1.0)) fail(errc::domain_error, "theorem1_bound: delta in (0,1)");
  if (horizon < 1) fail(errc::domain_error, "theorem1_bound: horizon must be >= 1");
  if (agents < 2) fail(errc::invalid_network, "theorem1_bound: need at least 2 agents");
  if (!(gap > 0.0)) fail(errc::domain_error, "theorem1_bound: gap must be positive");
  const double mt = static_cast<double>(states) * static_cast<double>(horizon);
  const double first = 8.0 * log_bound * log_bound / (min_info * min_info) * std::log(mt / delta);
  const double second = 4.0 * log_bound * std::log(static_cast<double>(agents)) / min_info *
                        std::log(mt) / gap;
  return std::max(first, second) + 1.0;
}

double lemma3_bound(int round, double eta, double log_bound, int agents, int states, double gap,
                    double min_info, double delta) {
  if (min_info <= 0.0) fail(errc::not_identifiable, "lemma3_bound: information gap is zero");
  if (!(delta > 0.0 && delta < 1.0)) fail(errc::domain_error, "lemma3_bound: delta in (0,1)");
  if (!(eta > 0.0)) fail(errc::domain_error, "lemma3_bound: eta must be positive");
  if (round < 0) fail(errc::domain_error, "lemma3_bound: round must be >= 0");
  if (agents < 2) fail(errc::invalid_network, "lemma3_bound: need at least 2 agents");
  if (!(gap > 0.0)) fail(errc::domain_error, "lemma3_bound: gap must be positive");
  const double t = static_cast<double>(round);
  const double m = static_cast<double>(states);
  return -min_info * t +
         std::sqrt(2.0 * log_bound * log_bound * t * std::log(m / delta)) +
         8.0 * log_bound * std::log(static_cast<double>(agents)) / gap + std::log(m) / eta;
}

Trajectory run(const RowStochasticMatrix& W, const SignalModel& model, const StateSpace& states,
               const RunConfig& config, const SpectralSummary* analysis) {
  const int n = W.order();
  const int m = states.m;
  if (model.agent_count() != n) fail(errc::dimension_mismatch, "run: model/network agent count");
  if (config.horizon < 1) fail(errc::invalid_argument, "run: horizon must be >= 1");
  if (config.eta && !(*config.eta > 0.0)) fail(errc::domain_error, "run: explicit eta must be > 0");

  SpectralSummary local;
  if (analysis == nullptr) {
    local = spectral_summary(W);
    analysis = &local;
  }
  const Eigen::VectorXd& pi = analysis->centrality;
  const double gap = analysis->gap;

  const InformationProfile profile = information_profile(model, states, pi);
  const double B = model.log_bound();
  const double eta = config.eta ? *config.eta : theorem1_eta(B, n, gap);
  const double inf = std::numeric_limits<double>::infinity();

  Trajectory out;
  out.agents = n;
  out.states = m;
  out.horizon = config.horizon;
  out.eta = eta;
  out.delta = config.delta;
  out.log_bound = B;
  out.gap = gap;
  out.min_info = profile.min_info;
  out.identifiable = profile.identifiable;
  out.seed = config.seed;
  out.centrality = pi;

  const std::size_t cells = static_cast<std::size_t>(config.horizon) * n;
  out.belief_true.resize(cells);
  out.tv.resize(cells);
  out.cost_cum.resize(cells);
  out.q_inf.resize(cells);
  out.lemma3.resize(static_cast<std::size_t>(config.horizon));
  out.theorem1.resize(static_cast<std::size_t>(config.horizon));

  const bool bounded = profile.identifiable && profile.min_info > 0.0;

  ScoreState scores = ScoreState::zero(n, m);
  Eigen::VectorXd cost = Eigen::VectorXd::Zero(n);
  std::mt19937_64 rng = make_rng(derive_stream(config.seed, kStreamSignals));

  for (int t = 1; t <= config.horizon; ++t) {
    const std::vector<int> signals = sample_signal(model, states, rng);
    step(W, pi, model, states, scores, signals);

    const Eigen::VectorXd log_mu_central = log_softmax_scaled(scores.phi_central, eta);
    for (int i = 0; i < n; ++i) {
      const Eigen::VectorXd log_mu =
          log_softmax_scaled(scores.phi_agents.row(i).transpose(), eta);
      const double mu_true = std::exp(log_mu(states.true_state));
      cost(i) += kl_from_logs(log_mu, log_mu_central);
      const double q =
          (scores.phi_agents.row(i).transpose() - scores.phi_central).cwiseAbs().maxCoeff();
      const std::size_t cell = static_cast<std::size_t>(t - 1) * n + i;
      out.belief_true[cell] = mu_true;
      out.tv[cell] = 1.0 - mu_true;
      out.cost_cum[cell] = cost(i);
      out.q_inf[cell] = q;
    }
    out.lemma3[static_cast<std::size_t>(t - 1)] =
        bounded ? lemma3_bound(t, eta, B, n, m, gap, profile.min_info, config.delta) : inf;
    out.theorem1[static_cast<std::size_t>(t - 1)] =
        bounded ? theorem1_bound(B, n, m, t, gap, profile.min_info, config.delta) : inf;
  }

  out.final_cost = cost;
  out.theorem1_bound_final = out.theorem1.back();
  return out;
}

}  // namespace beliefnet
