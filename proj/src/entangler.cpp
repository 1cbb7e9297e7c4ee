#include "qentangle/entangler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qentangle/permrep.hpp"

namespace qentangle {

using namespace std::complex_literals;

std::string_view to_string(EntanglerMethod method) {
  switch (method) {
    case EntanglerMethod::PermExp: return "perm";
    case EntanglerMethod::FracPow: return "fracpow";
  }
  throw std::invalid_argument("unknown entangler method");
}

EntanglerMethod parse_entangler_method(std::string_view text) {
  if (text == "perm" || text == "perm-exp") return EntanglerMethod::PermExp;
  if (text == "fracpow" || text == "frac-pow") return EntanglerMethod::FracPow;
  throw std::invalid_argument("unknown entangler method: " + std::string(text));
}

PermExpEntangler PermExpEntangler::make(int n, double beta) {
  if (n < 2) throw std::invalid_argument("entangler requires n >= 2");
  return PermExpEntangler{n, beta};
}

double PermExpEntangler::period() const { return 4.0 * std::numbers::pi / n; }

ComplexMatrix perm_entangler_matrix(const PermExpEntangler& e) {
  const int n = e.n;
  const auto dim = static_cast<Eigen::Index>(n) * n;
  ComplexMatrix z = ComplexMatrix::Zero(dim, dim);
  for (int j = 2; j <= n; ++j) {
    const ComplexMatrix s = plain_transposition(n, 1, j);
    z += kron(s, s);
  }
  return matexp((1i * (e.beta / 2.0)) * z);
}

PairState perm_entangled_state(const PermExpEntangler& e) {
  const double n = e.n;
  const Complex prefactor = std::polar(1.0 / n, -e.beta / 2.0);
  const Complex phase = std::polar(1.0, n * e.beta / 2.0);
  StateVector c = StateVector::Constant(e.n, prefactor * (phase - 1.0));
  c(0) = prefactor * (phase + (n - 1.0));
  return PairState::diagonal(c);
}

CoefficientPair coefficient_pair(int n, double beta) {
  if (n < 2) throw std::invalid_argument("coefficient_pair requires n >= 2");
  const double nn = n;
  const double c = std::cos(nn * beta / 2.0);
  const double f1 = (nn * nn - 2.0 * nn + 2.0 + 2.0 * (nn - 1.0) * c) / (nn * nn);
  const double f2 = (2.0 - 2.0 * c) / (nn * nn);
  return {f1, f2};
}

std::vector<double> max_entanglement_betas(int n) {
  if (n < 2) throw std::invalid_argument("max_entanglement_betas requires n >= 2");
  const double target = -(n - 2) / 2.0;
  if (target < -1.0) return {};
  // x = N beta / 2 ranges over [0, 2 pi) within one period.
  const double x = std::acos(target);
  std::vector<double> roots{2.0 * x / n};
  if (target > -1.0) roots.push_back(2.0 * (2.0 * std::numbers::pi - x) / n);
  return roots;
}

ComplexMatrix sigma_y_entangler(double beta) {
  ComplexMatrix sy(2, 2);
  sy << 0.0, -1i, 1i, 0.0;
  return matexp((-1i * (beta / 2.0)) * kron(sy, sy));
}

ComplexMatrix default_fracpow_seed(int n) {
  if (n < 2) throw std::invalid_argument("seed requires n >= 2");
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  a.col(0).setOnes();
  a.row(0).setOnes();
  if (n == 2) return a;
  for (int i = 1; i < n; ++i) a(i, i) = 1.0;
  return a;
}

ComplexMatrix FracPowEntangler::block(double beta) const {
  const auto n = eig_.vectors.cols();
  Eigen::VectorXcd lambda(n);
  for (Eigen::Index k = 0; k < n; ++k) lambda(k) = std::polar(1.0, beta * eig_.phases[k]);
  return eig_.vectors * lambda.asDiagonal() * eig_.vectors.adjoint();
}

FracPowEntangler build_fracpow(int n, const std::optional<ComplexMatrix>& seed) {
  if (n < 2) throw std::invalid_argument("fractional-power entangler requires n >= 2");
  FracPowEntangler e;
  e.default_seed_ = !seed.has_value();
  e.seed_ = seed ? *seed : default_fracpow_seed(n);
  if (e.seed_.rows() != n || e.seed_.cols() != n) {
    throw std::invalid_argument("seed matrix must be n x n");
  }
  e.r_ = gram_schmidt(e.seed_);
  const double uniform = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) {
    if (std::abs(e.r_(i, 0) - uniform) > 1e-12) {
      throw NumericalError("seed must have a uniform positive first column");
    }
  }
  e.eig_ = unitary_eigen(e.r_);
  return e;
}

PairState fracpow_state(const FracPowEntangler& e, double beta) {
  return PairState::diagonal(e.block(beta).col(0));
}

ComplexMatrix fracpow_matrix(const FracPowEntangler& e, double beta) {
  const int n = e.n();
  const ComplexMatrix b = e.block(beta);
  ComplexMatrix j = ComplexMatrix::Identity(static_cast<Eigen::Index>(n) * n,
                                            static_cast<Eigen::Index>(n) * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) j(pair_index(n, r, r), pair_index(n, c, c)) = b(r, c);
  }
  return j;
}

}  // namespace qentangle
