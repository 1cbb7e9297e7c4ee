#include "qentangle/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qentangle {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
  return splitmix64(splitmix64(splitmix64(master) ^ a) ^ b);
}

std::vector<double> random_gamma(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::vector<double> g(dim);
  for (double& x : g) x = angle(rng);
  return g;
}

// Higher payoff wins; exact ties go to the lexicographically smaller gamma.
bool better(double value, const std::vector<double>& x, double best_value,
            const std::vector<double>& best_x) {
  if (value != best_value) return value > best_value;
  return x < best_x;
}

}  // namespace

GameTable GameTable::make(Eigen::MatrixXd u1, Eigen::MatrixXd u2) {
  const auto n = u1.rows();
  if (n < 2 || u1.cols() != n || u2.rows() != n || u2.cols() != n) {
    throw std::invalid_argument("game table: payoff grids must both be N x N with N >= 2");
  }
  if (!u1.allFinite() || !u2.allFinite()) {
    throw std::invalid_argument("game table: payoffs must be finite");
  }
  return GameTable{static_cast<int>(n), std::move(u1), std::move(u2)};
}

GameTable GameTable::prisoners_dilemma() {
  Eigen::MatrixXd u1(2, 2), u2(2, 2);
  u1 << 3, 0,
        5, 1;
  u2 << 3, 5,
        0, 1;
  return make(std::move(u1), std::move(u2));
}

GameTable GameTable::constant(int n, double value) {
  return make(Eigen::MatrixXd::Constant(n, n, value), Eigen::MatrixXd::Constant(n, n, value));
}

PairState final_state(const ComplexMatrix& j_beta, const ComplexMatrix& u1,
                      const ComplexMatrix& u2, const PairState& initial) {
  const auto n = static_cast<Eigen::Index>(initial.n());
  if (u1.rows() != n || u1.cols() != n || u2.rows() != n || u2.cols() != n ||
      j_beta.rows() != n * n || j_beta.cols() != n * n) {
    throw std::invalid_argument("final_state: dimension mismatch");
  }
  const PairState prepared = PairState::from_vector(j_beta * initial.to_vector());
  const ComplexMatrix played = u1 * prepared.coeffs() * u2.transpose();
  return PairState::from_vector(j_beta.adjoint() * PairState(played).to_vector());
}

PairState final_state(const ComplexMatrix& j_beta, const StrategyParams& p1,
                      const StrategyParams& p2, const PairState& initial) {
  return final_state(j_beta, strategy_unitary(p1), strategy_unitary(p2), initial);
}

Payoffs payoffs(const GameTable& t, const PairState& s) {
  if (s.n() != t.n) throw std::invalid_argument("payoffs: table and state dimensions differ");
  const Eigen::MatrixXd weights = s.coeffs().cwiseAbs2();
  return {t.u1.cwiseProduct(weights).sum(), t.u2.cwiseProduct(weights).sum()};
}

double commensurability_residual(const ComplexMatrix& j_beta, const ComplexMatrix& s1,
                                 const ComplexMatrix& s2) {
  const ComplexMatrix s = kron(s1, s2);
  if (s.rows() != j_beta.rows() || j_beta.rows() != j_beta.cols()) {
    throw std::invalid_argument("commensurability_residual: dimension mismatch");
  }
  return (j_beta * s - s * j_beta).norm();
}

QuantumGame::QuantumGame(GameTable table, ComplexMatrix j_beta, std::optional<PairState> initial)
    : table_(std::move(table)), j_(std::move(j_beta)), basis_(table_.n) {
  const auto n = static_cast<Eigen::Index>(table_.n);
  if (j_.rows() != n * n || j_.cols() != n * n) {
    throw std::invalid_argument("QuantumGame: entangler must be N^2 x N^2");
  }
  if (!is_unitary(j_)) throw std::invalid_argument("QuantumGame: entangler is not unitary");
  const PairState start = initial ? *initial : PairState::basis(table_.n, 0, 0);
  if (start.n() != table_.n) throw std::invalid_argument("QuantumGame: initial state dimension");
  j_adjoint_ = j_.adjoint();
  prepared_ = PairState::from_vector(j_ * start.to_vector()).coeffs();
}

Payoffs QuantumGame::evaluate(const ComplexMatrix& u1, const ComplexMatrix& u2) const {
  const ComplexMatrix played = u1 * prepared_ * u2.transpose();
  const StateVector out = j_adjoint_ * PairState(played).to_vector();
  Payoffs p{0.0, 0.0};
  const int n = table_.n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double w = std::norm(out(static_cast<Eigen::Index>(i) * n + j));
      p.p1 += table_.u1(i, j) * w;
      p.p2 += table_.u2(i, j) * w;
    }
  }
  return p;
}

Payoffs QuantumGame::evaluate(const StrategyParams& p1, const StrategyParams& p2) const {
  return evaluate(strategy_unitary(p1, basis_), strategy_unitary(p2, basis_));
}

double QuantumGame::payoff_of(Player who, const StrategyParams& mine,
                              const StrategyParams& theirs) const {
  return who == Player::One ? evaluate(mine, theirs).p1 : evaluate(theirs, mine).p2;
}

StrategyParams QuantumGame::best_response(Player who, const StrategyParams& opponent,
                                          std::uint64_t seed, int restarts,
                                          const std::optional<StrategyParams>& warm,
                                          const NelderMeadOptions& local) const {
  if (restarts < 1) throw std::invalid_argument("best_response: restarts must be >= 1");
  const int n = table_.n;
  const ComplexMatrix fixed = strategy_unitary(opponent, basis_);
  const auto objective = [&](const std::vector<double>& g) {
    const ComplexMatrix mine = strategy_unitary(StrategyParams{n, g}, basis_);
    const Payoffs p = who == Player::One ? evaluate(mine, fixed) : evaluate(fixed, mine);
    return -(who == Player::One ? p.p1 : p.p2);
  };

  const std::size_t dim = basis_.size();
  std::vector<std::vector<double>> starts{std::vector<double>(dim, 0.0)};
  if (warm) starts.push_back(warm->gamma);
  for (int r = 0; r + 1 < restarts; ++r) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    starts.push_back(random_gamma(rng, dim));
  }

  std::vector<double> best_x;
  double best_value = -std::numeric_limits<double>::infinity();
  for (auto& start : starts) {
    const NelderMeadResult r = nelder_mead_minimize(objective, std::move(start), local);
    if (best_x.empty() || better(-r.value, r.x, best_value, best_x)) {
      best_value = -r.value;
      best_x = r.x;
    }
  }
  return StrategyParams{n, std::move(best_x)};
}

double QuantumGame::certify(const StrategyParams& g1, const StrategyParams& g2, int probes,
                            std::uint64_t seed, const NelderMeadOptions& local) const {
  const Payoffs at = evaluate(g1, g2);
  double epsilon = 0.0;
  for (Player who : {Player::One, Player::Two}) {
    const StrategyParams& mine = who == Player::One ? g1 : g2;
    const StrategyParams& theirs = who == Player::One ? g2 : g1;
    const double base = who == Player::One ? at.p1 : at.p2;

    std::mt19937_64 rng(derive_seed(seed, who == Player::One ? 1 : 2));
    std::vector<double> best_probe = mine.gamma;
    double best_gain = 0.0;
    for (int k = 0; k < probes; ++k) {
      std::vector<double> g = random_gamma(rng, basis_.size());
      const double gain = payoff_of(who, StrategyParams{n(), g}, theirs) - base;
      if (gain > best_gain) {
        best_gain = gain;
        best_probe = std::move(g);
      }
    }

    const auto objective = [&](const std::vector<double>& g) {
      return -payoff_of(who, StrategyParams{n(), g}, theirs);
    };
    for (const auto& start : {best_probe, mine.gamma}) {
      const NelderMeadResult r = nelder_mead_minimize(objective, start, local);
      best_gain = std::max(best_gain, -r.value - base);
    }
    epsilon = std::max(epsilon, best_gain);
  }
  return epsilon;
}

StrategyParams best_response(const GameTable& t, const ComplexMatrix& j_beta,
                             const StrategyParams& opponent, Player which, std::uint64_t seed) {
  return QuantumGame(t, j_beta).best_response(which, opponent, seed);
}

NESearchReport find_ne(const GameTable& t, const ComplexMatrix& j_beta,
                       const SearchOptions& options) {
  return find_ne(QuantumGame(t, j_beta), options);
}

NESearchReport find_ne(const QuantumGame& game, const SearchOptions& options) {
  if (options.restarts < 1) throw std::invalid_argument("find_ne: restarts must be >= 1");
  if (options.max_rounds < 1) throw std::invalid_argument("find_ne: max_rounds must be >= 1");
  const int n = game.n();
  StrategyParams g1 = StrategyParams::identity(n);
  StrategyParams g2 = StrategyParams::identity(n);

  bool converged = false;
  int rounds = 0;
  for (int round = 1; round <= options.max_rounds; ++round) {
    rounds = round;
    const auto r = static_cast<std::uint64_t>(round);

    const StrategyParams r1 = game.best_response(Player::One, g2, derive_seed(options.seed, r, 1),
                                                 options.restarts, g1, options.local);
    const double gain1 = game.payoff_of(Player::One, r1, g2) - game.payoff_of(Player::One, g1, g2);
    if (gain1 > 0.0) g1 = r1;

    const StrategyParams r2 = game.best_response(Player::Two, g1, derive_seed(options.seed, r, 2),
                                                 options.restarts, g2, options.local);
    const double gain2 = game.payoff_of(Player::Two, r2, g1) - game.payoff_of(Player::Two, g2, g1);
    if (gain2 > 0.0) g2 = r2;

    if (gain1 < options.tol && gain2 < options.tol) {
      converged = true;
      break;
    }
  }

  const double epsilon =
      game.certify(g1, g2, options.probes, derive_seed(options.seed, 0, 0xce57), options.local);
  NEResult result{g1, g2, game.evaluate(g1, g2), epsilon, 2 * options.probes};
  return {std::move(result), converged, rounds};
}

}  // namespace qentangle
