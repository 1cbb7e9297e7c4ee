#include "qentangle/entanglement.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include <Eigen/SVD>

namespace qentangle {

std::vector<double> schmidt_coefficients(const PairState& s) {
  if (!s.is_normalized()) {
    throw std::invalid_argument("schmidt_coefficients: state is not normalized");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(s.coeffs());
  const auto& sv = svd.singularValues();  // already descending
  return {sv.data(), sv.data() + sv.size()};
}

double shannon_entropy(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p >= 1e-15) h -= p * std::log(p);
  }
  return h;
}

double von_neumann_entropy(const PairState& s) {
  std::vector<double> weights = schmidt_coefficients(s);
  for (double& w : weights) w *= w;
  return shannon_entropy(weights);
}

double entropy_from_pair(const CoefficientPair& p, int n) {
  std::vector<double> weights(static_cast<std::size_t>(n), p.f2);
  weights[0] = p.f1;
  return shannon_entropy(weights);
}

namespace {

void validate_grid(int n, double beta_min, double beta_max, int steps) {
  if (n < 2) throw std::invalid_argument("entropy_curve: n must be >= 2");
  if (steps < 2) throw std::invalid_argument("entropy_curve: steps must be >= 2");
  if (!(beta_min < beta_max)) {
    throw std::invalid_argument("entropy_curve: beta_min must be below beta_max");
  }
}

std::vector<EntropySample> sample(double beta_min, double beta_max, int steps,
                                  const std::function<PairState(double)>& state) {
  std::vector<EntropySample> out;
  out.reserve(static_cast<std::size_t>(steps));
  const double h = (beta_max - beta_min) / (steps - 1);
  for (int k = 0; k < steps; ++k) {
    const double beta = k + 1 == steps ? beta_max : beta_min + k * h;
    out.push_back({beta, von_neumann_entropy(state(beta))});
  }
  return out;
}

}  // namespace

EntropyCurve entropy_curve(EntanglerMethod method, int n, double beta_min,
                           double beta_max, int steps) {
  validate_grid(n, beta_min, beta_max, steps);
  if (method == EntanglerMethod::FracPow) {
    return entropy_curve(build_fracpow(n), beta_min, beta_max, steps);
  }
  return {method, n, sample(beta_min, beta_max, steps, [n](double beta) {
            return perm_entangled_state(PermExpEntangler::make(n, beta));
          })};
}

EntropyCurve entropy_curve(const FracPowEntangler& e, double beta_min,
                           double beta_max, int steps) {
  validate_grid(e.n(), beta_min, beta_max, steps);
  return {EntanglerMethod::FracPow, e.n(),
          sample(beta_min, beta_max, steps,
                 [&e](double beta) { return fracpow_state(e, beta); })};
}

}  // namespace qentangle
