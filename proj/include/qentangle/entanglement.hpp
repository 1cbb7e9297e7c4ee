#pragma once

// Schmidt coefficients and von Neumann entanglement entropy of pair states.
// Entropies are in nats (natural logarithm).

#include <span>
#include <vector>

#include "qentangle/entangler.hpp"
#include "qentangle/pair_state.hpp"

namespace qentangle {

/// Singular values of the coefficient grid, descending.
/// Throws std::invalid_argument if the state is not normalized within kNormTol.
std::vector<double> schmidt_coefficients(const PairState& s);

/// -sum p log p over a probability vector; terms with p < 1e-15 contribute 0.
double shannon_entropy(std::span<const double> probabilities);

double von_neumann_entropy(const PairState& s);

/// -[f1 log f1 + (N-1) f2 log f2].
double entropy_from_pair(const CoefficientPair& p, int n);

struct EntropySample {
  double beta;
  double entropy;
};

struct EntropyCurve {
  EntanglerMethod method;
  int n;
  std::vector<EntropySample> samples;
};

/// Entropy of J(beta)|11> on a uniform grid of `steps` points including both
/// ends. The fractional-power method uses the default seed.
/// Throws std::invalid_argument for steps < 2, beta_min >= beta_max or n < 2.
EntropyCurve entropy_curve(EntanglerMethod method, int n, double beta_min,
                           double beta_max, int steps);

/// Same, for a prebuilt fractional-power entangler.
EntropyCurve entropy_curve(const FracPowEntangler& e, double beta_min,
                           double beta_max, int steps);

}  // namespace qentangle
