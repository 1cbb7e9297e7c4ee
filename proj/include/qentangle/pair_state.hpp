#pragma once

#include "qentangle/tensorlin.hpp"

namespace qentangle {

inline constexpr double kNormTol = 1e-10;

/// A 2-quNit pure state sum_ij v_ij |ij>, stored as the N x N grid v with
/// row index = player 1's basis ket and column = player 2's. Basis kets are
/// 0-based here: |11> in the usual notation is (0, 0).
///
/// The flat vector form uses the Kronecker ordering, index i*N + j.
class PairState {
 public:
  /// Throws std::invalid_argument for a non-square grid or N < 1.
  explicit PairState(ComplexMatrix coeffs);

  static PairState basis(int n, int i, int j);
  /// Diagonal-supported state sum_i c_i |ii>.
  static PairState diagonal(const StateVector& c);
  /// Throws std::invalid_argument when the length is not a perfect square.
  static PairState from_vector(const StateVector& v);

  int n() const { return static_cast<int>(coeffs_.rows()); }
  const ComplexMatrix& coeffs() const { return coeffs_; }
  Complex operator()(int i, int j) const { return coeffs_(i, j); }

  StateVector to_vector() const;
  double norm_squared() const { return coeffs_.squaredNorm(); }
  bool is_normalized(double tol = kNormTol) const;
  bool is_diagonal_supported(double tol = 1e-12) const;

 private:
  ComplexMatrix coeffs_;
};

}  // namespace qentangle
