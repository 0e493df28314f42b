#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "beliefnet/matrix.hpp"

namespace beliefnet {

enum class NetworkKind {
  star,
  cycle,
  grid,
  random_directed,
  random_symmetric,
  explicit_matrix,
};

const char* network_kind_name(NetworkKind kind);
NetworkKind network_kind_from_name(const std::string& name);

// Recipe for a communication matrix. omega is the self-reliance placed on th
// diagonal (a floor for the random-symmetric kind, exact elsewhere). density
// is the probability of each optional edge in the random kinds; when unset a
// default targeting mean degree ~8 is used. grid means the 2-D torus, so n
// must be a perfect square.
struct NetworkSpec {
  NetworkKind kind = NetworkKind::cycle;
  int n = 2;
  double omega = 0.5;
  std::uint64_t seed = 1;
  std::optional<double> density;
  std::optional<Eigen::MatrixXd> explicit_rows;  // explicit_matrix only

  static NetworkSpec star(int n, double omega);
  static NetworkSpec cycle(int n, double omega);
  static NetworkSpec grid(int n, double omega);
};

// Builds the matrix for a spec. Random kinds are seeded and re-attempted with
// fresh derived seeds (cap 100) until strongly connected; both carry a
// spanning cycle so generation failure indicates a bug rather than bad luck.
RowStochasticMatrix generate(const NetworkSpec& spec);

// Closed-form eigenvalue multiset for star, cycle and grid; unsupported for
// the other kinds. Order is unspecified.
//   star : {1, omega (n-2 times), 2*omega - 1}
//   cycle: {omega + (1-omega) cos(2 pi i / n)}
//   grid : {omega + (1-omega) cos(pi(i+j)/s) cos(pi(i-j)/s)}, s = sqrt(n)
std::vector<double> analytic_spectrum(const NetworkSpec& spec);

// W' = alpha W + (1 - alpha) I. Shares the eigenvectors and the stationary
// distribution of W; eigenvalues move to alpha lambda + 1 - alpha.
struct MixedChain {
  RowStochasticMatrix base;
  double alpha = 1.0;
  RowStochasticMatrix mixed;
};

struct MixResult {
  double alpha_star = 1.0;
  double gamma_star = 0.0;  // spectral gap of the mixed chain
  MixedChain chain;
};

// Best convex mixing of W with the identity. Requires a real spectrum
// (imaginary parts above 1e-10 raise complex_spectrum). When
// lambda_n + lambda_2 < 0 the closed-form optimum applies; otherwise mixing
// toward the identity can only raise lambda_2, so alpha = 1 is returned.
MixResult optimal_mix(const RowStochasticMatrix& W);

struct LinkRemoval {
  RowStochasticMatrix matrix;
  // Removal never fails for losing connectivity; the flag reports it.
  bool disconnected = false;
};

// Removes the bidirectional edge (i, j) of a symmetric W and folds its weight
// into both endpoints' self-reliance. Requires symmetry, i != j, and an
// existing edge.
LinkRemoval remove_link(const RowStochasticMatrix& W, int i, int j);

}  // namespace beliefnet
