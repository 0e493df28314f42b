#pragma once

#include <Eigen/Dense>
#include <string>

#include "beliefnet/errors.hpp"

namespace beliefnet {

// Row-stochastic communication matrix over n >= 2 agents. Construction
// validates: square shape, finite nonnegative entries, every row summing to 1
// within kRowSumTol. The edge set is the support of the entries; generators
// are responsible for keeping supports consistent with their topology.
//
// Single-agent matrices are rejected: n = 1 degenerates every quantity that
// divides by log n, and is handled as the centralized case elsewhere.
class RowStochasticMatrix {
 public:
  static constexpr double kRowSumTol = 1e-12;

  static RowStochasticMatrix from_entries(Eigen::MatrixXd entries);

  // JSON exchange format: {"n": <int>, "rows": [[...], ...]}, row-major.
  static RowStochasticMatrix from_json(const std::string& text);
  std::string to_json() const;

  int order() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }

  bool is_symmetric(double tol = 1e-12) const;

 private:
  explicit RowStochasticMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {}
  Eigen::MatrixXd entries_;
};

// Exact reachability check on the support graph: forward and backward
// traversals from node 0 must each cover all nodes.
bool strongly_connected(const Eigen::MatrixXd& entries);

}  // namespace beliefnet
