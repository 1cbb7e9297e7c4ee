#include "qentangle/pair_state.hpp"

#include <cmath>
#include <stdexcept>

namespace qentangle {

PairState::PairState(ComplexMatrix coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.rows() != coeffs_.cols() || coeffs_.rows() < 1) {
    throw std::invalid_argument("PairState: coefficient grid must be square and non-empty");
  }
}

PairState PairState::basis(int n, int i, int j) {
  if (n < 1 || i < 0 || j < 0 || i >= n || j >= n) {
    throw std::invalid_argument("PairState::basis: index out of range");
  }
  ComplexMatrix c = ComplexMatrix::Zero(n, n);
  c(i, j) = 1.0;
  return PairState(std::move(c));
}

PairState PairState::diagonal(const StateVector& c) {
  return PairState(ComplexMatrix(c.asDiagonal()));
}

PairState PairState::from_vector(const StateVector& v) {
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (n < 1 || n * n != v.size()) {
    throw std::invalid_argument("PairState::from_vector: length is not N^2");
  }
  ComplexMatrix c(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) c(i, j) = v(i * n + j);
  }
  return PairState(std::move(c));
}

StateVector PairState::to_vector() const {
  const auto n = coeffs_.rows();
  StateVector v(n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) v(i * n + j) = coeffs_(i, j);
  }
  return v;
}

bool PairState::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

bool PairState::is_diagonal_supported(double tol) const {
  const auto n = coeffs_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j && std::abs(coeffs_(i, j)) > tol) return false;
    }
  }
  return true;
}

}  // namespace qentangle
