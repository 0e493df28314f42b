#include "beliefnet/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "beliefnet/markov.hpp"
#include "beliefnet/rng.hpp"

namespace beliefnet {

namespace {

constexpr int kGenerationAttempts = 100;

// Default density targets a mean degree of about 8: the spanning ring
// contributes degree 2 (symmetric) or out-degree 1 (directed), and each
// remaining slot is kept with this probability.
double default_density(NetworkKind kind, int n) {
  const double base = (kind == NetworkKind::random_symmetric) ? 2.0 : 1.0;
  const double slots = (kind == NetworkKind::random_symmetric) ? n - 3 : n - 2;
  if (slots <= 0.0) return 1.0;
  return std::clamp((8.0 - base) / slots, 0.0, 1.0);
}

void check_common(const NetworkSpec& spec) {
  if (spec.n < 2) fail(errc::invalid_argument, "network needs at least 2 agents");
  if (!(spec.omega > 0.0 && spec.omega < 1.0))
    fail(errc::invalid_argument, "self-reliance must lie strictly inside (0, 1)");
  if (spec.density && !(*spec.density >= 0.0 && *spec.density <= 1.0))
    fail(errc::invalid_argument, "density must lie in [0, 1]");
}

RowStochasticMatrix build_star(int n, double omega) {
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) W(i, i) = omega;
  for (int leaf = 1; leaf < n; ++leaf) {
    W(0, leaf) = (1.0 - omega) / (n - 1);
    W(leaf, 0) = 1.0 - omega;
  }
  return RowStochasticMatrix::from_entries(std::move(W));
}

RowStochasticMatrix build_cycle(int n, double omega) {
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    W(i, i) = omega;
    W(i, (i + 1) % n) += (1.0 - omega) / 2.0;  // += handles n = 2
    W(i, (i + n - 1) % n) += (1.0 - omega) / 2.0;
  }
  return RowStochasticMatrix::from_entries(std::move(W));
}

RowStochasticMatrix build_grid(int n, double omega) {
  const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  if (side * side != n || side < 2)
    fail(errc::invalid_argument, "grid size must be a perfect square >= 4");
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
  auto id = [side](int r, int c) {
    return ((r + side) % side) * side + ((c + side) % side);
  };
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      const int u = id(r, c);
      W(u, u) = omega;
      const double share = (1.0 - omega) / 4.0;
      W(u, id(r - 1, c)) += share;
      W(u, id(r + 1, c)) += share;
      W(u, id(r, c - 1)) += share;
      W(u, id(r, c + 1)) += share;
    }
  }
  return RowStochasticMatrix::from_entries(std::move(W));
}

RowStochasticMatrix build_random_symmetric(const NetworkSpec& spec) {
  const int n = spec.n;
  const double p = spec.density ? *spec.density : default_density(spec.kind, n);
  for (int attempt = 0; attempt < kGenerationAttempts; ++attempt) {
    auto rng = make_rng(derive_stream(spec.seed, kStreamTopology + attempt));
    // Spanning ring plus density-sampled chords.
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      adj(i, (i + 1) % n) = 1.0;
      adj((i + 1) % n, i) = 1.0;
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (adj(i, j) == 0.0 && canonical(rng) < p) adj(i, j) = adj(j, i) = 1.0;

    Eigen::VectorXd degree = adj.rowwise().sum();

    // Metropolis weights keep the chain symmetric (hence uniform
    // centrality), then a spectral shift pins the smallest self-reliance
    // exactly at omega.
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      double off = 0.0;
      for (int j = 0; j < n; ++j) {
        if (i == j || adj(i, j) == 0.0) continue;
        P(i, j) = 1.0 / std::max(degree(i), degree(j));
        off += P(i, j);
      }
      P(i, i) = 1.0 - off;
    }
    const double p_min = P.diagonal().minCoeff();
    const double beta = (spec.omega - p_min) / (1.0 - p_min);
    Eigen::MatrixXd W = beta * Eigen::MatrixXd::Identity(n, n) + (1.0 - beta) * P;
    if (strongly_connected(W)) return RowStochasticMatrix::from_entries(std::move(W));
  }
  fail(errc::generation_failed, "random symmetric network: retry cap exhausted");
}

RowStochasticMatrix build_random_directed(const NetworkSpec& spec) {
  const int n = spec.n;
  const double p = spec.density ? *spec.density : default_density(spec.kind, n);
  for (int attempt = 0; attempt < kGenerationAttempts; ++attempt) {
    auto rng = make_rng(derive_stream(spec.seed, kStreamTopology + attempt));
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) adj(i, (i + 1) % n) = 1.0;  // spanning cycle
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && adj(i, j) == 0.0 && canonical(rng) < p) adj(i, j) = 1.0;

    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      W(i, i) = spec.omega;
      double total = 0.0;
      std::vector<std::pair<int, double>> weights;
      for (int j = 0; j < n; ++j) {
        if (adj(i, j) == 0.0) continue;
        const double u = 0.5 + canonical(rng);
        weights.emplace_back(j, u);
        total += u;
      }
      for (const auto& [j, u] : weights) W(i, j) = (1.0 - spec.omega) * u / total;
    }
    if (strongly_connected(W)) return RowStochasticMatrix::from_entries(std::move(W));
  }
  fail(errc::generation_failed, "random directed network: retry cap exhausted");
}

}  // namespace

const char* network_kind_name(NetworkKind kind) {
  switch (kind) {
    case NetworkKind::star: return "star";
    case NetworkKind::cycle: return "cycle";
    case NetworkKind::grid: return "grid";
    case NetworkKind::random_directed: return "random-directed";
    case NetworkKind::random_symmetric: return "random-symmetric";
    case NetworkKind::explicit_matrix: return "explicit";
  }
  return "unknown";
}

NetworkKind network_kind_from_name(const std::string& name) {
  if (name == "star") return NetworkKind::star;
  if (name == "cycle") return NetworkKind::cycle;
  if (name == "grid") return NetworkKind::grid;
  if (name == "random-directed") return NetworkKind::random_directed;
  if (name == "random-symmetric") return NetworkKind::random_symmetric;
  if (name == "explicit") return NetworkKind::explicit_matrix;
  fail(errc::invalid_argument, "unknown network kind \"" + name + "\"");
}

NetworkSpec NetworkSpec::star(int n, double omega) {
  return NetworkSpec{NetworkKind::star, n, omega, 1, std::nullopt, std::nullopt};
}
NetworkSpec NetworkSpec::cycle(int n, double omega) {
  return NetworkSpec{NetworkKind::cycle, n, omega, 1, std::nullopt, std::nullopt};
}
NetworkSpec NetworkSpec::grid(int n, double omega) {
  return NetworkSpec{NetworkKind::grid, n, omega, 1, std::nullopt, std::nullopt};
}

RowStochasticMatrix generate(const NetworkSpec& spec) {
  if (spec.kind == NetworkKind::explicit_matrix) {
    if (!spec.explicit_rows) fail(errc::invalid_argument, "explicit network needs rows");
    return RowStochasticMatrix::from_entries(*spec.explicit_rows);
  }
  check_common(spec);
  switch (spec.kind) {
    case NetworkKind::star: return build_star(spec.n, spec.omega);
    case NetworkKind::cycle: return build_cycle(spec.n, spec.omega);
    case NetworkKind::grid: return build_grid(spec.n, spec.omega);
    case NetworkKind::random_symmetric: return build_random_symmetric(spec);
    case NetworkKind::random_directed: return build_random_directed(spec);
    default: fail(errc::invalid_argument, "unhandled network kind");
  }
}

std::vector<double> analytic_spectrum(const NetworkSpec& spec) {
  check_common(spec);
  const double w = spec.omega;
  const int n = spec.n;
  std::vector<double> values;
  switch (spec.kind) {
    case NetworkKind::star:
      values.push_back(1.0);
      for (int i = 0; i < n - 2; ++i) values.push_back(w);
      values.push_back(2.0 * w - 1.0);
      return values;
    case NetworkKind::cycle:
      for (int i = 0; i < n; ++i)
        values.push_back(w + (1.0 - w) * std::cos(2.0 * std::numbers::pi * i / n));
      return values;
    case NetworkKind::grid: {
      const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
      if (side * side != n || side < 2)
        fail(errc::invalid_argument, "grid size must be a perfect square >= 4");
      for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
          values.push_back(w + (1.0 - w) * std::cos(std::numbers::pi * (i + j) / side) *
                                   std::cos(std::numbers::pi * (i - j) / side));
      return values;
    }
    default:
      fail(errc::unsupported, "analytic spectrum exists only for star, cycle and grid");
  }
}

MixResult optimal_mix(const RowStochasticMatrix& W) {
  const SpectralSummary summary = spectral_summary(W);
  for (const auto& value : summary.eigenvalues)
    if (std::abs(value.imag()) > 1e-10)
      fail(errc::complex_spectrum, "optimal mix needs a real spectrum");

  std::vector<double> reals;
  reals.reserve(summary.eigenvalues.size());
  for (const auto& value : summary.eigenvalues) reals.push_back(value.real());
  std::sort(reals.begin(), reals.end(), std::greater<>());
  const double lambda2 = reals[1];
  const double lambda_n = reals.back();

  double alpha = 1.0;
  if (lambda2 + lambda_n < 0.0) alpha = 2.0 / (2.0 - lambda_n - lambda2);

  const double mixed2 = alpha * lambda2 + 1.0 - alpha;
  const double mixed_n = alpha * lambda_n + 1.0 - alpha;
  const double gamma = 1.0 - std::max(std::abs(mixed2), std::abs(mixed_n));

  const int n = W.order();
  Eigen::MatrixXd mixed =
      alpha * W.entries() + (1.0 - alpha) * Eigen::MatrixXd::Identity(n, n);
  MixedChain chain{W, alpha, RowStochasticMatrix::from_entries(std::move(mixed))};
  return MixResult{alpha, gamma, std::move(chain)};
}

LinkRemoval remove_link(const RowStochasticMatrix& W, int i, int j) {
  const int n = W.order();
  if (i < 0 || i >= n || j < 0 || j >= n || i == j)
    fail(errc::invalid_argument, "remove_link: bad endpoint indices");
  if (!W.is_symmetric()) fail(errc::not_symmetric, "remove_link: matrix must be symmetric");
  const double weight = W(i, j);
  if (weight <= 0.0) fail(errc::no_such_edge, "remove_link: no edge between the endpoints");

  Eigen::MatrixXd M = W.entries();
  M(i, j) = 0.0;
  M(j, i) = 0.0;
  M(i, i) += weight;
  M(j, j) += weight;
  LinkRemoval out{RowStochasticMatrix::from_entries(std::move(M)), false};
  out.disconnected = !strongly_connected(out.matrix.entries());
  return out;
}

}  // namespace beliefnet
