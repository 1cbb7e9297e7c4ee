#include "qentangle/tensorlin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace qentangle {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double unitarity_residual(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  const auto n = m.rows();
  return (m.adjoint() * m - ComplexMatrix::Identity(n, n)).norm();
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  return unitarity_residual(m) <= tol;
}

ComplexMatrix matexp(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("matexp: matrix must be square");
  }
  const auto n = a.rows();
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();

  // Scale so the series argument has 1-norm at most 1/2.
  int squarings = 0;
  if (norm1 > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  }
  const ComplexMatrix scaled = a / std::ldexp(1.0, squarings);

  ComplexMatrix sum = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
    if (term.norm() <= 1e-18 * sum.norm()) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

namespace {

double principal_phase(Complex z) {
  double phase = std::arg(z);
  if (phase <= -std::numbers::pi + 1e-12) phase = std::numbers::pi;
  return phase;
}

void orthonormalize_columns(ComplexMatrix& v, const std::vector<Eigen::Index>& cols) {
  for (std::size_t k = 0; k < cols.size(); ++k) {
    auto col = v.col(cols[k]);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        const auto prev = v.col(cols[j]);
        col -= prev * prev.dot(col);
      }
    }
    col.normalize();
  }
}

}  // namespace

UnitaryEigen unitary_eigen(const ComplexMatrix& u, double tol) {
  if (!is_unitary(u, tol)) {
    throw NumericalError("unitary_eigen: input is not unitary");
  }
  const auto n = u.rows();
  Eigen::ComplexSchur<ComplexMatrix> schur(u);
  if (schur.info() != Eigen::Success) {
    throw NumericalError("unitary_eigen: Schur factorization failed");
  }
  const ComplexMatrix& t = schur.matrixT();
  const ComplexMatrix& q = schur.matrixU();

  std::vector<double> raw(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) raw[i] = principal_phase(t(i, i));

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](auto x, auto y) { return raw[x] < raw[y]; });

  UnitaryEigen out;
  out.vectors.resize(n, n);
  out.phases.resize(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    out.vectors.col(k) = q.col(order[k]);
    out.phases[k] = raw[order[k]];
  }

  // Group near-equal phases into eigenspaces.
  std::size_t start = 0;
  while (start < out.phases.size()) {
    std::size_t end = start + 1;
    while (end < out.phases.size() &&
           out.phases[end] - out.phases[end - 1] < kDegeneracyTol) {
      ++end;
    }
    if (end - start > 1) {
      double mean = 0.0;
      std::vector<Eigen::Index> cols;
      for (std::size_t k = start; k < end; ++k) {
        mean += out.phases[k];
        cols.push_back(static_cast<Eigen::Index>(k));
      }
      mean /= static_cast<double>(end - start);
      for (std::size_t k = start; k < end; ++k) out.phases[k] = mean;
      orthonormalize_columns(out.vectors, cols);
    }
    start = end;
  }

  if ((reconstruct(out) - u).norm() > 1e-9) {
    throw NumericalError("unitary_eigen: reconstruction residual too large");
  }
  return out;
}

ComplexMatrix reconstruct(const UnitaryEigen& eig) {
  const auto n = eig.vectors.cols();
  Eigen::VectorXcd lambda(n);
  for (Eigen::Index k = 0; k < n; ++k) lambda(k) = std::polar(1.0, eig.phases[k]);
  return eig.vectors * lambda.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix matlog_unitary(const ComplexMatrix& u, double tol) {
  const UnitaryEigen eig = unitary_eigen(u, tol);
  const auto n = eig.vectors.cols();
  Eigen::VectorXcd phases(n);
  for (Eigen::Index k = 0; k < n; ++k) phases(k) = eig.phases[k];
  const ComplexMatrix h = eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
  return (h + h.adjoint()) / 2.0;
}

ComplexMatrix gram_schmidt(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("gram_schmidt: matrix must be square");
  }
  ComplexMatrix q = a;
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    auto col = q.col(k);
    const double original = col.norm();
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index j = 0; j < k; ++j) {
        col -= q.col(j) * q.col(j).dot(col);
      }
    }
    const double pivot = col.norm();
    if (original == 0.0 || pivot <= kPivotTol * original) {
      throw NumericalError("gram_schmidt: columns are linearly dependent");
    }
    col /= pivot;
  }
  return q;
}

}  // namespace qentangle
