#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qentangle/entangler.hpp"
#include "qentangle/game.hpp"
#include "qentangle/permrep.hpp"
#include "test_support.hpp"

using namespace qentangle;
using namespace qentangle::testing;
using namespace std::complex_literals;
constexpr double pi = std::numbers::pi;

namespace {

StrategyParams random_params(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-pi, pi);
  std::vector<double> g(static_cast<std::size_t>(n * n - 1));
  for (double& x : g) x = u(rng);
  return StrategyParams::make(n, g);
}

ComplexMatrix classical(SU3Label l) { return su3_classical(l).matrix; }

}  // namespace

TEST_CASE("strategy basis is an orthonormal traceless Hermitian set") {
  for (int n = 2; n <= 5; ++n) {
    const StrategyBasis basis(n);
    REQUIRE(basis.size() == static_cast<std::size_t>(n * n - 1));
    for (std::size_t a = 0; a < basis.size(); ++a) {
      CHECK((basis[a] - basis[a].adjoint()).norm() == 0.0);
      CHECK(std::abs(basis[a].trace()) < 1e-14);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const Complex ip = (basis[a] * basis[b]).trace();
        CHECK(std::abs(ip - (a == b ? 2.0 : 0.0)) <= 1e-12);
      }
    }
  }
  // N = 2 gives the Pauli matrices in order.
  const StrategyBasis b2(2);
  CHECK(b2[0] == pauli_x());
  CHECK(b2[1](0, 1) == -1i);
  CHECK(b2[2](1, 1) == Complex(-1.0));
  CHECK_THROWS_AS(StrategyBasis(1), std::invalid_argument);
}

TEST_CASE("strategy unitary") {
  CHECK((strategy_unitary(StrategyParams::identity(3)) - ComplexMatrix::Identity(3, 3)).norm() == 0.0);
  CHECK_THROWS_AS(StrategyParams::make(3, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(strategy_unitary(StrategyParams{3, {1.0}}), std::invalid_argument);

  const ComplexMatrix flip = strategy_unitary(StrategyParams::make(2, {0.0, pi / 2, 0.0}));
  CHECK((flip - flip_strategy()).norm() < 1e-14);
  CHECK(embed_classical(flip_strategy()).gamma[1] == doctest::Approx(pi / 2));

  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const ComplexMatrix u = strategy_unitary(random_params(rng, 3));
    CHECK(unitarity_residual(u) <= 1e-10);
    CHECK(std::abs(u.determinant() - 1.0) <= 1e-10);
  }
}

TEST_CASE("classical strategies embed into the parametrization") {
  CHECK(embed_classical(ComplexMatrix::Identity(3, 3)).gamma == std::vector<double>(8, 0.0));
  for (auto label : kAllSU3Labels) {
    const ComplexMatrix s = classical(label);
    CHECK((strategy_unitary(embed_classical(s)) - s).norm() <= 1e-9);
  }
  CHECK((strategy_unitary(embed_classical(flip_strategy())) - flip_strategy()).norm() <= 1e-9);
  CHECK_THROWS_AS(embed_classical(plain_transposition(3, 1, 2)), NumericalError);

  std::mt19937_64 rng(9);
  for (int n = 2; n <= 5; ++n) {
    ComplexMatrix u = random_unitary(rng, n);
    u /= std::pow(u.determinant(), 1.0 / n);
    CHECK((strategy_unitary(embed_classical(u)) - u).norm() <= 1e-9);
  }
}

TEST_CASE("final state") {
  const PairState start = PairState::basis(3, 0, 0);
  const auto id3 = StrategyParams::identity(3);
  const PairState same = final_state(ComplexMatrix::Identity(9, 9), id3, id3, start);
  CHECK((same.coeffs() - start.coeffs()).norm() < 1e-15);

  const PairState flipped = final_state(ComplexMatrix::Identity(4, 4), flip_strategy(), flip_strategy(),
                                        PairState::basis(2, 0, 0));
  CHECK(std::abs(std::abs(flipped(1, 1)) - 1.0) < 1e-15);

  const ComplexMatrix j = perm_entangler_matrix(PermExpEntangler::make(3, 4 * pi / 9));
  const PairState back = final_state(j, id3, id3, start);
  CHECK((back.coeffs() - start.coeffs()).norm() <= 1e-12);

  CHECK_THROWS_AS(final_state(ComplexMatrix::Identity(4, 4), id3, id3, start), std::invalid_argument);
}

TEST_CASE("payoffs") {
  Eigen::MatrixXd u1(3, 3), u2(3, 3);
  u1 << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  u2 << 9, 8, 7, 6, 5, 4, 3, 2, 1;
  const GameTable t = GameTable::make(u1, u2);

  const Payoffs point = payoffs(t, PairState::basis(3, 0, 0));
  CHECK(point.p1 == 1.0);
  CHECK(point.p2 == 9.0);

  const PairState uniform(ComplexMatrix::Constant(3, 3, 1.0 / 3.0));
  const Payoffs mean = payoffs(t, uniform);
  CHECK(mean.p1 == doctest::Approx(5.0));
  CHECK(mean.p2 == doctest::Approx(5.0));

  CHECK_THROWS_AS(payoffs(t, PairState::basis(2, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(GameTable::make(u1, Eigen::MatrixXd::Zero(2, 2)), std::invalid_argument);
  Eigen::MatrixXd bad = u1;
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS(GameTable::make(bad, u2), std::invalid_argument);

  const GameTable pd = GameTable::prisoners_dilemma();
  const PairState dd = final_state(ComplexMatrix::Identity(4, 4), flip_strategy(), flip_strategy(),
                                   PairState::basis(2, 0, 0));
  const Payoffs p = payoffs(pd, dd);
  CHECK(p.p1 == doctest::Approx(1.0));
  CHECK(p.p2 == doctest::Approx(1.0));
}

TEST_CASE("classical play at zero entanglement reproduces the table") {
  Eigen::MatrixXd u1(3, 3), u2(3, 3);
  u1 << 2, -1, 4, 0, 3, 5, 1, 7, -2;
  u2 << 6, 1, 0, 2, -3, 4, 5, 8, 9;
  const GameTable t = GameTable::make(u1, u2);
  const ComplexMatrix id = ComplexMatrix::Identity(9, 9);
  const SU3Label moves[] = {SU3Label::Identity, SU3Label::S12, SU3Label::S13};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const auto g1 = embed_classical(classical(moves[a]));
      const auto g2 = embed_classical(classical(moves[b]));
      const Payoffs p = payoffs(t, final_state(id, g1, g2, PairState::basis(3, 0, 0)));
      CHECK(std::abs(p.p1 - u1(a, b)) <= 1e-9);
      CHECK(std::abs(p.p2 - u2(a, b)) <= 1e-9);
    }
  }
}

TEST_CASE("zero-sum payoffs are conserved") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 30; ++k) {
    const int n = 2 + k % 2;
    Eigen::MatrixXd u1(n, n);
    for (int i = 0; i < n * n; ++i) u1.data()[i] = u(rng);
    const QuantumGame game(GameTable::make(u1, -u1),
                           perm_entangler_matrix(PermExpEntangler::make(n, u(rng))));
    const Payoffs p = game.evaluate(random_params(rng, n), random_params(rng, n));
    CHECK(std::abs(p.p1 + p.p2) <= 1e-10);
  }
}

TEST_CASE("QuantumGame evaluation matches the free functions") {
  std::mt19937_64 rng(19);
  const GameTable t = GameTable::prisoners_dilemma();
  const ComplexMatrix j = sigma_y_entangler(0.8);
  const QuantumGame game(t, j);
  for (int k = 0; k < 10; ++k) {
    const auto g1 = random_params(rng, 2), g2 = random_params(rng, 2);
    const Payoffs fast = game.evaluate(g1, g2);
    const Payoffs slow = payoffs(t, final_state(j, g1, g2, PairState::basis(2, 0, 0)));
    CHECK(std::abs(fast.p1 - slow.p1) < 1e-12);
    CHECK(std::abs(fast.p2 - slow.p2) < 1e-12);
  }
  CHECK_THROWS_AS(QuantumGame(t, ComplexMatrix::Identity(9, 9)), std::invalid_argument);
  CHECK_THROWS_AS(QuantumGame(t, 2.0 * ComplexMatrix::Identity(4, 4)), std::invalid_argument);
}

TEST_CASE("best response on a constant table returns the constant") {
  const GameTable t = GameTable::constant(2, 2.5);
  const QuantumGame game(t, sigma_y_entangler(1.0));
  const auto br = game.best_response(Player::One, StrategyParams::identity(2), 3);
  CHECK(game.payoff_of(Player::One, br, StrategyParams::identity(2)) == doctest::Approx(2.5));
}

TEST_CASE("best response to defection at zero entanglement is defection") {
  const GameTable pd = GameTable::prisoners_dilemma();
  const ComplexMatrix j = ComplexMatrix::Identity(4, 4);
  const QuantumGame game(pd, j);
  const auto flip = embed_classical(flip_strategy());
  const auto br = best_response(pd, j, flip, Player::One, 42);
  const double value = game.payoff_of(Player::One, br, flip);
  CHECK(std::abs(value - 1.0) <= 1e-6);
  CHECK(value >= game.payoff_of(Player::One, StrategyParams::identity(2), flip) - 1e-9);

  // Brute-force grid over all three angles never beats it.
  double grid_best = -1e9;
  const int m = 50;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        const auto g = StrategyParams::make(
            2, {-pi + 2 * pi * a / m, -pi + 2 * pi * b / m, -pi + 2 * pi * c / m});
        grid_best = std::max(grid_best, game.payoff_of(Player::One, g, flip));
      }
  CHECK(grid_best <= value + 1e-6);
  CHECK(grid_best > 0.99);
}

TEST_CASE("NE search on a constant table converges immediately") {
  SearchOptions opt;
  opt.restarts = 4;
  opt.probes = 200;
  const auto report = find_ne(GameTable::constant(2, 1.0), sigma_y_entangler(0.7), opt);
  CHECK(report.converged);
  CHECK(report.rounds == 1);
  CHECK(report.result.epsilon <= 1e-9);
}

TEST_CASE("NE search reproduces mutual defection at zero entanglement") {
  SearchOptions opt;
  opt.seed = 42;
  const GameTable pd = GameTable::prisoners_dilemma();
  const ComplexMatrix j = ComplexMatrix::Identity(4, 4);
  const auto report = find_ne(pd, j, opt);
  CHECK(report.converged);
  CHECK(std::abs(report.result.payoffs.p1 - 1.0) <= 1e-6);
  CHECK(std::abs(report.result.payoffs.p2 - 1.0) <= 1e-6);
  CHECK(report.result.epsilon <= 1e-4);
  CHECK(report.result.probes == 2 * opt.probes);

  const QuantumGame game(pd, j);
  const Payoffs again = game.evaluate(report.result.gamma1, report.result.gamma2);
  CHECK(std::abs(again.p1 - report.result.payoffs.p1) <= 1e-9);
  CHECK(std::abs(again.p2 - report.result.payoffs.p2) <= 1e-9);

  // Same seed, same answer.
  const auto repeat = find_ne(pd, j, opt);
  CHECK(repeat.result.gamma1.gamma == report.result.gamma1.gamma);
  CHECK(repeat.result.epsilon == report.result.epsilon);

  CHECK_THROWS_AS(find_ne(pd, j, SearchOptions{.restarts = 0}), std::invalid_argument);
}

TEST_CASE("commensurability residual") {
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix j = perm_entangler_matrix(PermExpEntangler::make(3, 1.0));
  CHECK(commensurability_residual(j, ComplexMatrix::Identity(3, 3), ComplexMatrix::Identity(3, 3)) == 0.0);

  for (double beta = 0.0; beta < 2 * pi; beta += 0.3) {
    CHECK(commensurability_residual(sigma_y_entangler(beta), flip_strategy(), flip_strategy()) <= 1e-12);
    const ComplexMatrix jp = perm_entangler_matrix(PermExpEntangler::make(2, beta));
    CHECK(commensurability_residual(jp, flip_strategy(), flip_strategy()) <= 1e-12);
  }

  const ComplexMatrix j3 = perm_entangler_matrix(PermExpEntangler::make(3, 4 * pi / 9));
  CHECK(commensurability_residual(j3, classical(SU3Label::S12), classical(SU3Label::S13)) > 0.1);
  CHECK_THROWS_AS(commensurability_residual(j3, id2, id2), std::invalid_argument);
}
