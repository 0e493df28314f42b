#include "beliefnet/matrix.hpp"

#include <cmath>
#include <vector>

#include <json.hpp>

namespace beliefnet {

RowStochasticMatrix RowStochasticMatrix::from_entries(Eigen::MatrixXd entries) {
  const auto rows = entries.rows();
  if (rows != entries.cols()) fail(errc::invalid_argument, "matrix must be square");
  if (rows < 2) fail(errc::invalid_argument, "matrix needs at least 2 agents");
  for (Eigen::Index i = 0; i < rows; ++i) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < rows; ++j) {
      const double w = entries(i, j);
      if (!std::isfinite(w) || w < 0.0)
        fail(errc::invalid_argument, "matrix entries must be finite and nonnegative");
      sum += w;
    }
    if (std::abs(sum - 1.0) > kRowSumTol)
      fail(errc::invalid_argument,
           "row " + std::to_string(i) + " sums to " + std::to_string(sum) + ", expected 1");
  }
  return RowStochasticMatrix(std::move(entries));
}

RowStochasticMatrix RowStochasticMatrix::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::invalid_argument, std::string("matrix json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows"))
    fail(errc::invalid_argument, "matrix json must contain \"n\" and \"rows\"");
  const int n = doc["n"].get<int>();
  const auto& rows = doc["rows"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    fail(errc::invalid_argument, "matrix json: \"rows\" must hold n rows");
  Eigen::MatrixXd entries(n, n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
      fail(errc::invalid_argument, "matrix json: row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j) entries(i, j) = rows[i][j].get<double>();
  }
  return from_entries(std::move(entries));
}

std::string RowStochasticMatrix::to_json() const {
  nlohmann::json doc;
  const int n = order();
  doc["n"] = n;
  auto rows = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    auto row = nlohmann::json::array();
    for (int j = 0; j < n; ++j) row.push_back(entries_(i, j));
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump();
}

bool RowStochasticMatrix::is_symmetric(double tol) const {
  return (entries_ - entries_.transpose()).cwiseAbs().maxCoeff() <= tol;
}

bool strongly_connected(const Eigen::MatrixXd& entries) {
  const int n = static_cast<int>(entries.rows());
  auto sweep = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        const double w = forward ? entries(u, v) : entries(v, u);
        if (w > 0.0 && !seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == n;
  };
  return sweep(true) && sweep(false);
}

}  // namespace beliefnet
