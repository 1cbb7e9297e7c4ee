#pragma once

// Single-parameter entanglers J(beta) acting on |11>.
//
// Permutation exponential:  J(beta) = exp(i beta/2 sum_{j>=2} S_1j (x) S_1j),
//   with a closed form on the diagonal kets; complete only for N <= 4.
// Fractional power:  J(beta) = V diag(exp(i beta eta)) V^dagger where
//   R = V diag(exp(i eta)) V^dagger is a Gram-Schmidt unitary whose first
//   column is uniform; complete for every N on beta in [0, 1].

#include <optional>
#include <string_view>
#include <vector>

#include "qentangle/pair_state.hpp"
#include "qentangle/tensorlin.hpp"

namespace qentangle {

enum class EntanglerMethod { PermExp, FracPow };

std::string_view to_string(EntanglerMethod method);
/// Accepts "perm", "perm-exp", "fracpow", "frac-pow".
EntanglerMethod parse_entangler_method(std::string_view text);

struct PermExpEntangler {
  int n;
  double beta;

  /// Throws std::invalid_argument for n < 2.
  static PermExpEntangler make(int n, double beta);
  double period() const;
};

/// Squared moduli of the |11> coefficient (f1) and of each |jj>, j >= 2 (f2).
struct CoefficientPair {
  double f1;
  double f2;
};

/// Brute-force exponential of the summed Kronecker exponent (N^2 x N^2).
/// Test oracle for the closed form.
ComplexMatrix perm_entangler_matrix(const PermExpEntangler& e);

/// Closed-form J(beta)|11>:
///   e^{-i beta/2}/N [ (e^{i N beta/2} + N - 1)|11> + (e^{i N beta/2} - 1) sum_{j>=2} |jj> ].
PairState perm_entangled_state(const PermExpEntangler& e);

CoefficientPair coefficient_pair(int n, double beta);

/// Roots of cos(N beta/2) = -(N-2)/2 in [0, 4 pi/N), ascending.
/// Empty for N > 4.
std::vector<double> max_entanglement_betas(int n);

/// The two-qubit entangler exp(-i beta/2 sigma_y (x) sigma_y).
ComplexMatrix sigma_y_entangler(double beta);

/// Default non-singular seed for the fractional-power construction: first
/// column all ones, column j >= 2 equal to e_1 + e_j. For N = 2 that pattern
/// is singular and [[1, 1], [1, 0]] is used instead.
ComplexMatrix default_fracpow_seed(int n);

class FracPowEntangler {
 public:
  int n() const { return static_cast<int>(r_.rows()); }
  const ComplexMatrix& seed_matrix() const { return seed_; }
  const ComplexMatrix& r() const { return r_; }
  const ComplexMatrix& eigvecs() const { return eig_.vectors; }
  const std::vector<double>& eigenphases() const { return eig_.phases; }
  bool default_seed() const { return default_seed_; }

  /// N x N block V diag(exp(i beta eta)) V^dagger on the diagonal kets.
  ComplexMatrix block(double beta) const;

 private:
  friend FracPowEntangler build_fracpow(int n, const std::optional<ComplexMatrix>& seed);
  FracPowEntangler() = default;

  ComplexMatrix seed_;
  ComplexMatrix r_;
  UnitaryEigen eig_;
  bool default_seed_ = true;
};

/// Throws std::invalid_argument for n < 2 or a seed of the wrong shape,
/// NumericalError for a singular seed or one whose orthonormalized first
/// column is not uniform.
FracPowEntangler build_fracpow(int n, const std::optional<ComplexMatrix>& seed = std::nullopt);

/// sum_i [J(beta)]_{i1} |ii>.
PairState fracpow_state(const FracPowEntangler& e, double beta);

/// The block embedded in the N^2 x N^2 identity on the product basis
/// (Kronecker ordering): it acts on the kets |ii> and fixes every |ij>, i != j.
ComplexMatrix fracpow_matrix(const FracPowEntangler& e, double beta);

/// Index of |ij> (0-based) in the Kronecker-ordered product basis.
inline Eigen::Index pair_index(int n, int i, int j) { return static_cast<Eigen::Index>(i) * n + j; }

}  // namespace qentangle
