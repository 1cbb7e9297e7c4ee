#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qentangle/entangler.hpp"
#include "qentangle/entanglement.hpp"
#include "test_support.hpp"

using namespace qentangle;
using namespace std::complex_literals;
constexpr double pi = std::numbers::pi;

TEST_CASE("perm entangler matrix at beta = 0 is the identity") {
  for (int n = 2; n <= 5; ++n) {
    const ComplexMatrix j = perm_entangler_matrix(PermExpEntangler::make(n, 0.0));
    CHECK((j - ComplexMatrix::Identity(n * n, n * n)).norm() < 1e-15);
  }
  CHECK_THROWS_AS(PermExpEntangler::make(1, 0.0), std::invalid_argument);
}

TEST_CASE("N = 2 perm entangler is a block rotation on |00>, |11>") {
  for (double beta : {0.3, 1.1, pi / 2, 2.9}) {
    const ComplexMatrix j = perm_entangler_matrix(PermExpEntangler::make(2, beta));
    CHECK(std::abs(j(0, 0) - std::cos(beta / 2)) < 1e-14);
    CHECK(std::abs(j(1, 0)) < 1e-14);
    CHECK(std::abs(j(2, 0)) < 1e-14);
    CHECK(std::abs(j(3, 0) - 1i * std::sin(beta / 2)) < 1e-14);

    // sigma_y x sigma_y |00> = -|11>, so exp(-i beta/2 sy x sy)|00> agrees here too.
    const ComplexMatrix jy = sigma_y_entangler(beta);
    CHECK(std::abs(jy(3, 0) - 1i * std::sin(beta / 2)) < 1e-14);
    CHECK((j.col(0).cwiseAbs() - jy.col(0).cwiseAbs()).norm() < 1e-14);
  }
}

TEST_CASE("N = 3 perm entangler |11> coefficient matches the two-term closed form") {
  for (double beta : {0.2, 4 * pi / 9, 1.7, 3.0}) {
    const ComplexMatrix j = perm_entangler_matrix(PermExpEntangler::make(3, beta));
    const Complex c11 = (2.0 * std::exp(-0.5i * beta) + std::exp(1i * beta)) / 3.0;
    const Complex c22 = (std::exp(1i * beta) - std::exp(-0.5i * beta)) / 3.0;
    CHECK(std::abs(j(0, 0) - c11) < 1e-12);
    CHECK(std::abs(j(pair_index(3, 1, 1), 0) - c22) < 1e-12);
    CHECK(std::abs(j(pair_index(3, 2, 2), 0) - c22) < 1e-12);
  }
}

TEST_CASE("closed form state agrees with the brute-force exponential") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-4.0, 8.0);
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k < 25; ++k) {
      const double beta = u(rng);
      const auto e = PermExpEntangler::make(n, beta);
      const StateVector oracle = perm_entangler_matrix(e).col(0);
      const StateVector closed = perm_entangled_state(e).to_vector();
      CHECK((oracle - closed).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("perm entangled state examples") {
  const PairState s0 = perm_entangled_state(PermExpEntangler::make(4, 0.0));
  CHECK(s0.coeffs() == PairState::basis(4, 0, 0).coeffs());

  const PairState s3 = perm_entangled_state(PermExpEntangler::make(3, 4 * pi / 9));
  CHECK(s3.is_diagonal_supported());
  for (int i = 0; i < 3; ++i) CHECK(std::abs(s3(i, i)) == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-12));

  // N beta / 2 = pi: f1 = (N-2)^2/N^2, f2 = 4/N^2.
  const PairState s5 = perm_entangled_state(PermExpEntangler::make(5, 2 * pi / 5));
  CHECK(std::norm(s5(0, 0)) == doctest::Approx(9.0 / 25).epsilon(1e-12));
  for (int j = 1; j < 5; ++j) CHECK(std::norm(s5(j, j)) == doctest::Approx(4.0 / 25).epsilon(1e-12));
}

TEST_CASE("coefficient pair examples") {
  for (int n = 2; n <= 7; ++n) {
    const auto p = coefficient_pair(n, 0.0);
    CHECK(p.f1 == 1.0);
    CHECK(p.f2 == 0.0);
  }
  const auto p3 = coefficient_pair(3, 4 * pi / 9);
  CHECK(std::abs(p3.f1 - 1.0 / 3) < 1e-12);
  CHECK(std::abs(p3.f2 - 1.0 / 3) < 1e-12);
  const auto p4 = coefficient_pair(4, pi / 2);
  CHECK(std::abs(p4.f1 - 0.25) < 1e-12);
  CHECK(std::abs(p4.f2 - 0.25) < 1e-12);
}

TEST_CASE("coefficient pair matches the squared moduli of the closed-form state") {
  for (int n = 2; n <= 6; ++n) {
    for (double beta = -1.0; beta < 7.0; beta += 0.37) {
      const auto p = coefficient_pair(n, beta);
      const PairState s = perm_entangled_state(PermExpEntangler::make(n, beta));
      CHECK(std::abs(std::norm(s(0, 0)) - p.f1) < 1e-12);
      CHECK(std::abs(std::norm(s(n - 1, n - 1)) - p.f2) < 1e-12);
    }
  }
}

TEST_CASE("coefficient pair invariants on random (N, beta)") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> ns(2, 20);
  std::uniform_real_distribution<double> bs(-20.0, 20.0);
  for (int k = 0; k < 1000; ++k) {
    const int n = ns(rng);
    const double beta = bs(rng);
    const double period = 4 * pi / n;
    const auto p = coefficient_pair(n, beta);
    CHECK(std::abs(p.f1 + (n - 1) * p.f2 - 1.0) <= 1e-12);
    CHECK(p.f1 >= 0.0);
    CHECK(p.f1 <= 1.0 + 1e-15);
    CHECK(p.f2 >= 0.0);
    CHECK(p.f2 <= 1.0);

    const auto shifted = coefficient_pair(n, beta + period);
    CHECK(std::abs(shifted.f1 - p.f1) <= 1e-12);
    CHECK(std::abs(shifted.f2 - p.f2) <= 1e-12);
    const auto mirrored = coefficient_pair(n, period - beta);
    CHECK(std::abs(mirrored.f1 - p.f1) <= 1e-12);
    CHECK(std::abs(mirrored.f2 - p.f2) <= 1e-12);
  }
}

TEST_CASE("maximal entanglement roots") {
  const auto r3 = max_entanglement_betas(3);
  REQUIRE(r3.size() == 2);
  CHECK(std::abs(r3[0] - 4 * pi / 9) <= 1e-12);
  CHECK(std::abs(r3[1] - 8 * pi / 9) <= 1e-12);

  const auto r4 = max_entanglement_betas(4);
  REQUIRE(r4.size() == 1);
  CHECK(std::abs(r4[0] - pi / 2) <= 1e-12);

  const auto r2 = max_entanglement_betas(2);
  REQUIRE(r2.size() == 2);
  CHECK(std::abs(r2[0] - pi / 2) <= 1e-12);
  CHECK(std::abs(r2[1] - 3 * pi / 2) <= 1e-12);

  for (int n = 5; n <= 12; ++n) CHECK(max_entanglement_betas(n).empty());

  for (int n = 2; n <= 4; ++n) {
    for (double beta : max_entanglement_betas(n)) {
      CHECK(beta >= 0.0);
      CHECK(beta < 4 * pi / n);
      const auto p = coefficient_pair(n, beta);
      CHECK(std::abs(p.f1 - 1.0 / n) <= 1e-12);
      CHECK(std::abs(p.f2 - 1.0 / n) <= 1e-12);
    }
  }
}

TEST_CASE("default seeds are non-singular") {
  for (int n = 2; n <= 12; ++n) {
    const ComplexMatrix a = default_fracpow_seed(n);
    CHECK(a.col(0) == ComplexMatrix::Ones(n, 1));
    CHECK(std::abs(a.determinant()) > 0.5);
  }
}

TEST_CASE("build_fracpow reproduces the Gram-Schmidt unitaries") {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);

  const auto e2 = build_fracpow(2);
  Eigen::Matrix2d r2;
  r2 << 1 / s2, 1 / s2, 1 / s2, -1 / s2;
  CHECK((e2.r() - r2.cast<Complex>()).cwiseAbs().maxCoeff() <= 1e-12);

  const auto e3 = build_fracpow(3);
  Eigen::Matrix3d r3;
  r3 << 1 / s3, 1 / s6, 1 / s2,
        1 / s3, 1 / s6, -1 / s2,
        1 / s3, -2 / s6, 0;
  CHECK((e3.r() - r3.cast<Complex>()).cwiseAbs().maxCoeff() <= 1e-12);

  const auto e5 = build_fracpow(5);
  CHECK(std::abs(e5.r()(0, 1) - std::sqrt(3.0 / 10)) <= 1e-12);
  CHECK(std::abs(e5.r()(2, 2) - 2 * std::sqrt(2.0 / 21)) <= 1e-12);
  CHECK(std::abs(e5.r()(3, 3) - 5 / (2 * std::sqrt(14.0))) <= 1e-12);
  CHECK(std::abs(e5.r()(4, 4) - 1 / s2) <= 1e-12);
}

TEST_CASE("fracpow invariants") {
  for (int n = 2; n <= 9; ++n) {
    const auto e = build_fracpow(n);
    for (int i = 0; i < n; ++i) CHECK(std::abs(e.r()(i, 0) - 1 / std::sqrt(double(n))) <= 1e-12);
    UnitaryEigen eig{e.eigvecs(), e.eigenphases()};
    CHECK((reconstruct(eig) - e.r()).norm() <= 1e-9);
    CHECK(unitarity_residual(e.eigvecs()) <= 1e-10);
  }
}

TEST_CASE("build_fracpow rejects bad seeds") {
  CHECK_THROWS_AS(build_fracpow(1), std::invalid_argument);
  CHECK_THROWS_AS(build_fracpow(3, ComplexMatrix::Identity(2, 2)), std::invalid_argument);
  ComplexMatrix singular = ComplexMatrix::Ones(3, 3);
  CHECK_THROWS_AS(build_fracpow(3, singular), NumericalError);
  CHECK_THROWS_AS(build_fracpow(3, ComplexMatrix(ComplexMatrix::Identity(3, 3))), NumericalError);

  // A different non-singular seed with a ones first column is accepted.
  ComplexMatrix alt(3, 3);
  alt << 1, 2, 0,
         1, 0, 3,
         1, 1, 1;
  CHECK_NOTHROW(build_fracpow(3, alt));
}

TEST_CASE("fracpow state endpoints") {
  for (int n = 2; n <= 8; ++n) {
    const auto e = build_fracpow(n);
    const PairState s0 = fracpow_state(e, 0.0);
    CHECK((s0.coeffs() - PairState::basis(n, 0, 0).coeffs()).norm() <= 1e-12);
    const PairState s1 = fracpow_state(e, 1.0);
    CHECK(s1.is_diagonal_supported());
    for (int i = 0; i < n; ++i) CHECK(std::abs(std::abs(s1(i, i)) - 1 / std::sqrt(double(n))) <= 1e-12);
  }
  const auto e5 = build_fracpow(5);
  const double s = von_neumann_entropy(fracpow_state(e5, 0.5));
  CHECK(s > 0.0);
  CHECK(s < std::log(5.0));
}

TEST_CASE("fracpow matrix embeds the block on the diagonal kets") {
  const auto e3 = build_fracpow(3);
  CHECK((fracpow_matrix(e3, 0.0) - ComplexMatrix::Identity(9, 9)).norm() <= 1e-12);

  const ComplexMatrix j1 = fracpow_matrix(e3, 1.0);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      CHECK(std::abs(j1(pair_index(3, r, r), pair_index(3, c, c)) - e3.r()(r, c)) <= 1e-12);
  // Off-diagonal kets are fixed.
  CHECK(std::abs(j1(pair_index(3, 0, 1), pair_index(3, 0, 1)) - 1.0) == 0.0);

  const auto e5 = build_fracpow(5);
  CHECK(unitarity_residual(fracpow_matrix(e5, 0.37)) <= 1e-10);
  for (double beta = -2.0; beta <= 3.0; beta += 0.25) {
    CHECK(unitarity_residual(fracpow_matrix(e5, beta)) <= 1e-10);
    CHECK(std::abs(fracpow_state(e5, beta).norm_squared() - 1.0) <= 1e-10);
    // First column of the full matrix is the state.
    const StateVector col = fracpow_matrix(e5, beta).col(0);
    CHECK((col - fracpow_state(e5, beta).to_vector()).norm() <= 1e-14);
  }
}

TEST_CASE("method names") {
  CHECK(parse_entangler_method("perm") == EntanglerMethod::PermExp);
  CHECK(parse_entangler_method("frac-pow") == EntanglerMethod::FracPow);
  CHECK_THROWS_AS(parse_entangler_method("hadamard"), std::invalid_argument);
}
