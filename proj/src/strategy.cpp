#include "qentangle/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qentangle {

using namespace std::complex_literals;

StrategyBasis::StrategyBasis(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("StrategyBasis requires n >= 2");
  for (int k = 1; k < n; ++k) {
    for (int j = 0; j < k; ++j) {
      ComplexMatrix sym = ComplexMatrix::Zero(n, n);
      sym(j, k) = 1.0;
      sym(k, j) = 1.0;
      generators_.push_back(std::move(sym));

      ComplexMatrix anti = ComplexMatrix::Zero(n, n);
      anti(j, k) = -1i;
      anti(k, j) = 1i;
      generators_.push_back(std::move(anti));
    }
    ComplexMatrix diag = ComplexMatrix::Zero(n, n);
    const double scale = std::sqrt(2.0 / (k * (k + 1.0)));
    for (int j = 0; j < k; ++j) diag(j, j) = scale;
    diag(k, k) = -k * scale;
    generators_.push_back(std::move(diag));
  }
}

StrategyParams StrategyParams::make(int n, std::vector<double> gamma) {
  if (n < 2 || gamma.size() != static_cast<std::size_t>(n * n - 1)) {
    throw std::invalid_argument("strategy parameters must have length n^2 - 1");
  }
  return StrategyParams{n, std::move(gamma)};
}

StrategyParams StrategyParams::identity(int n) {
  return make(n, std::vector<double>(static_cast<std::size_t>(n * n - 1), 0.0));
}

namespace {

const StrategyBasis& cached_basis(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<StrategyBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<StrategyBasis>(n);
  return *slot;
}

}  // namespace

ComplexMatrix strategy_unitary(const StrategyParams& p) {
  return strategy_unitary(p, cached_basis(p.n));
}

ComplexMatrix strategy_unitary(const StrategyParams& p, const StrategyBasis& basis) {
  if (basis.n() != p.n || p.gamma.size() != basis.size()) {
    throw std::invalid_argument("strategy_unitary: parameter length mismatch");
  }
  ComplexMatrix h = ComplexMatrix::Zero(p.n, p.n);
  for (std::size_t m = 0; m < basis.size(); ++m) h += p.gamma[m] * basis[m];
  return matexp(1i * h);
}

StrategyParams embed_classical(const ComplexMatrix& s) {
  if (s.rows() != s.cols() || s.rows() < 2) {
    throw std::invalid_argument("embed_classical: matrix must be square, n >= 2");
  }
  if (std::abs(s.determinant() - 1.0) > 1e-9) {
    throw NumericalError("embed_classical: determinant is not 1");
  }
  const int n = static_cast<int>(s.rows());
  UnitaryEigen eig = unitary_eigen(s);

  // Phases sum to 2 pi k; move k of them by 2 pi so the logarithm is traceless.
  const double total = std::accumulate(eig.phases.begin(), eig.phases.end(), 0.0);
  const long winding = std::lround(total / (2.0 * std::numbers::pi));
  std::vector<std::size_t> order(eig.phases.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return eig.phases[a] > eig.phases[b]; });
  if (winding > 0) {
    for (long k = 0; k < winding; ++k) eig.phases[order[k]] -= 2.0 * std::numbers::pi;
  } else {
    for (long k = 0; k < -winding; ++k) {
      eig.phases[order[order.size() - 1 - k]] += 2.0 * std::numbers::pi;
    }
  }

  Eigen::VectorXcd phases(n);
  for (int k = 0; k < n; ++k) phases(k) = eig.phases[k];
  const ComplexMatrix h = eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();

  const StrategyBasis& basis = cached_basis(n);
  std::vector<double> gamma(basis.size());
  for (std::size_t m = 0; m < basis.size(); ++m) {
    gamma[m] = (basis[m] * h).trace().real() / 2.0;
  }
  return StrategyParams{n, std::move(gamma)};
}

ComplexMatrix flip_strategy() {
  ComplexMatrix f(2, 2);
  f << 0.0, 1.0, -1.0, 0.0;
  return f;
}

}  // namespace qentangle
