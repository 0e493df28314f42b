#include "beliefnet/markov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace beliefnet {

namespace {

constexpr double kResidualTarget = 1e-12;
constexpr double kResidualContract = 1e-10;
constexpr int kIterationCap = 200000;

}  // namespace

Eigen::VectorXd stationary_distribution(const RowStochasticMatrix& W) {
  if (!strongly_connected(W.entries())) fail(errc::reducible, "matrix is not strongly connected");
  const int n = W.order();
  const Eigen::MatrixXd& M = W.entries();

  // Iterate the half-lazy chain (W + I)/2: same fixed point, aperiodic for
  // any strongly connected W. Residuals are measured against W itself.
  Eigen::RowVectorXd x = Eigen::RowVectorXd::Constant(n, 1.0 / n);
  double residual = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < kIterationCap; ++iter) {
    Eigen::RowVectorXd xW = x * M;
    residual = (xW - x).lpNorm<1>();
    if (residual <= kResidualTarget) break;
    x = 0.5 * (x + xW);
    x /= x.sum();
  }
  if (residual > kResidualContract)
    fail(errc::non_convergent, "stationary distribution stalled at residual " +
                                   std::to_string(residual));
  x /= x.sum();
  if (x.minCoeff() <= 0.0)
    fail(errc::numerical_failure, "stationary distribution lost positivity");
  return x.transpose();
}

SpectralSummary spectral_summary(const RowStochasticMatrix& W) {
  if (!strongly_connected(W.entries())) fail(errc::reducible, "matrix is not strongly connected");
  const int n = W.order();
  const Eigen::MatrixXd& M = W.entries();

  std::vector<std::complex<double>> values(n);
  if (W.is_symmetric()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M);
    if (solver.info() != Eigen::Success) fail(errc::numerical_failure, "eigen solver failed");
    for (int k = 0; k < n; ++k) {
      const double lambda = solver.eigenvalues()(k);
      const Eigen::VectorXd v = solver.eigenvectors().col(k);
      if ((M * v - lambda * v).norm() > 1e-8)
        fail(errc::numerical_failure, "eigenpair residual above 1e-8");
      values[k] = {lambda, 0.0};
    }
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(M);
    if (solver.info() != Eigen::Success) fail(errc::numerical_failure, "eigen solver failed");
    const Eigen::MatrixXcd Mc = M.cast<std::complex<double>>();
    for (int k = 0; k < n; ++k) {
      const std::complex<double> lambda = solver.eigenvalues()(k);
      const Eigen::VectorXcd v = solver.eigenvectors().col(k);
      if ((Mc * v - lambda * v).norm() > 1e-8)
        fail(errc::numerical_failure, "eigenpair residual above 1e-8");
      values[k] = lambda;
    }
  }

  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
    const double ma = std::abs(a);
    const double mb = std::abs(b);
    if (ma != mb) return ma > mb;
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });

  if (std::abs(values.front() - std::complex<double>(1.0, 0.0)) > 1e-10)
    fail(errc::numerical_failure, "leading eigenvalue deviates from 1");

  SpectralSummary summary;
  summary.eigenvalues = std::move(values);
  summary.lambda_max = std::clamp(std::abs(summary.eigenvalues[1]), 0.0, 1.0);
  summary.gap = 1.0 - summary.lambda_max;
  summary.centrality = stationary_distribution(W);
  return summary;
}

double mixing_sum(const RowStochasticMatrix& W, int agent, int rounds) {
  const int n = W.order();
  if (agent < 0 || agent >= n) fail(errc::invalid_argument, "agent index out of range");
  if (rounds < 1) fail(errc::invalid_argument, "rounds must be >= 1");
  const Eigen::VectorXd pi = stationary_distribution(W);

  Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(n);
  row(agent) = 1.0;
  double total = 0.0;
  for (int k = 0; k < rounds; ++k) {
    total += (row - pi.transpose()).lpNorm<1>();
    if (k + 1 < rounds) row *= W.entries();
  }
  return total;
}

}  // namespace beliefnet
