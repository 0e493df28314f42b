#pragma once

#include <complex>
#include <vector>

#include "beliefnet/matrix.hpp"

namespace beliefnet {

// Spectral picture of a communication matrix. Eigenvalues are sorted by
// descending modulus (ties: descending real, then imaginary part), so the
// leading entry is the Perron eigenvalue 1 and lambda_max is the modulus of
// the second entry, which equals max{|lambda_2|, |lambda_n|} under any
// ordering. Directed matrices may have complex eigenvalues; everything here
// works through moduli. centrality is the stationary distribution.
struct SpectralSummary {
  std::vector<std::complex<double>> eigenvalues;
  double lambda_max = 0.0;
  double gap = 0.0;  // 1 - lambda_max
  Eigen::VectorXd centrality;
};

// Stationary distribution pi with pi^T W = pi^T, ||pi||_1 = 1, entries > 0.
// Power iteration on the half-lazy chain (same fixed point, never periodic);
// the returned vector has residual ||pi^T W - pi^T||_1 <= 1e-10.
// Throws: reducible (strong-connectivity pre-check), non_convergent.
Eigen::VectorXd stationary_distribution(const RowStochasticMatrix& W);

// Full spectrum + gap + centrality. Eigenpair residuals ||Wv - lambda v||_2
// must be <= 1e-8 each, and the leading eigenvalue must equal 1 within 1e-10;
// otherwise numerical_failure. Throws reducible for disconnected input.
SpectralSummary spectral_summary(const RowStochasticMatrix& W);

// sum_{tau=1}^{rounds} || e_agent^T W^(rounds-tau) - pi^T ||_1, evaluated as
// the exact finite sum over explicit powers. Bounded above by
// 4 log(n) / gap for any strongly connected W.
double mixing_sum(const RowStochasticMatrix& W, int agent, int rounds);

}  // namespace beliefnet
