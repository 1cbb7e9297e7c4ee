#pragma once

// Dense complex linear algebra for the small operators of a 2-quNit game:
// Kronecker products, exponentials, unitary eigendecomposition and logarithm,
// and Gram-Schmidt orthonormalization.

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace qentangle {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Raised when a numerical precondition (unitarity, rank, determinant) fails.
class NumericalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kDegeneracyTol = 1e-8;
inline constexpr double kPivotTol = 1e-12;

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
/// The left factor acts on player 1's quNit.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Frobenius norm of M^dagger M - I. Returns +inf for non-square input.
double unitarity_residual(const ComplexMatrix& m);

bool is_unitary(const ComplexMatrix& m, double tol = kUnitaryTol);

/// Matrix exponential by scaling and squaring of a truncated Taylor series.
/// Throws std::invalid_argument for non-square input.
ComplexMatrix matexp(const ComplexMatrix& a);

struct UnitaryEigen {
  ComplexMatrix vectors;       // unitary, columns are eigenvectors
  std::vector<double> phases;  // eigenphases in (-pi, pi]
};

/// Spectral decomposition u = V diag(exp(i*phase)) V^dagger of a unitary.
///
/// Eigenvectors come from a complex Schur factorization, which is diagonal
/// for normal matrices. Phases closer than kDegeneracyTol are grouped into
/// one eigenspace, assigned their common mean, and the eigenvectors of the
/// group are re-orthonormalized. A phase within 1e-12 of -pi is mapped
/// to +pi.
UnitaryEigen unitary_eigen(const ComplexMatrix& u, double tol = kUnitaryTol);

/// Reconstructs V diag(exp(i*phase)) V^dagger.
ComplexMatrix reconstruct(const UnitaryEigen& eig);

/// Hermitian H with exp(iH) = u, using the principal eigenphases.
ComplexMatrix matlog_unitary(const ComplexMatrix& u, double tol = kUnitaryTol);

/// Modified Gram-Schmidt on the columns of a, with one re-orthogonalization
/// pass per column. Column k of the result spans the same flag as the first
/// k columns of a, and each normalization is by a positive real.
/// Throws NumericalError when a pivot norm drops below kPivotTol relative
/// to the column norm.
ComplexMatrix gram_schmidt(const ComplexMatrix& a);

}  // namespace qentangle
