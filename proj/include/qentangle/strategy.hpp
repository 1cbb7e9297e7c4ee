#pragma once

// SU(N) strategies parametrized by the generalized Gell-Mann basis:
// U(gamma) = exp(i sum_m gamma_m G_m).

#include <vector>

#include "qentangle/tensorlin.hpp"

namespace qentangle {

/// Generalized Gell-Mann matrices, ordered so N = 2 gives (sigma_x,
/// sigma_y, sigma_z) and N = 3 the standard lambda_1..lambda_8: for each
/// k = 1..N-1, the symmetric and antisymmetric pairs (j, k), j < k,
/// followed by the k-th diagonal generator. tr(G_a G_b) = 2 delta_ab.
class StrategyBasis {
 public:
  /// Throws std::invalid_argument for n < 2.
  explicit StrategyBasis(int n);

  int n() const { return n_; }
  std::size_t size() const { return generators_.size(); }
  const std::vector<ComplexMatrix>& generators() const { return generators_; }
  const ComplexMatrix& operator[](std::size_t m) const { return generators_[m]; }

 private:
  int n_;
  std::vector<ComplexMatrix> generators_;
};

struct StrategyParams {
  int n;
  std::vector<double> gamma;  // length N^2 - 1

  /// Throws std::invalid_argument when gamma.size() != n*n - 1.
  static StrategyParams make(int n, std::vector<double> gamma);
  static StrategyParams identity(int n);
};

ComplexMatrix strategy_unitary(const StrategyParams& p);
ComplexMatrix strategy_unitary(const StrategyParams& p, const StrategyBasis& basis);

/// gamma with strategy_unitary(gamma) = s. Requires s unitary with unit
/// determinant (throws NumericalError otherwise). The principal logarithm is
/// shifted by 2 pi on the largest (or smallest) eigenphases until traceless.
StrategyParams embed_classical(const ComplexMatrix& s);

/// The classical flip i*sigma_y for N = 2.
ComplexMatrix flip_strategy();

}  // namespace qentangle
