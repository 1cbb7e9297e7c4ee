#pragma once

// The two-player, N-strategy quantum game.
//
// The referee prepares J|initial>, the players apply U(gamma1) (x) U(gamma2),
// the referee applies J^dagger, and player k collects
//   P_k = sum_ij u_k(i, j) |v_ij|^2.
// Equilibria are searched by iterated multistart best response and reported
// with an epsilon certificate: the largest unilateral gain found over a seeded
// probe set plus a local polish. They are never claimed to be exact.

#include <cstdint>
#include <optional>
#include <vector>

#include "qentangle/nelder_mead.hpp"
#include "qentangle/pair_state.hpp"
#include "qentangle/strategy.hpp"

namespace qentangle {

/// Classical payoffs; row = player 1's option i, column = player 2's option j.
struct GameTable {
  int n;
  Eigen::MatrixXd u1;
  Eigen::MatrixXd u2;

  /// Throws std::invalid_argument on shape mismatch, n < 2, or non-finite entries.
  static GameTable make(Eigen::MatrixXd u1, Eigen::MatrixXd u2);
  /// (C, D) with payoffs (3,3) (0,5) / (5,0) (1,1).
  static GameTable prisoners_dilemma();
  static GameTable constant(int n, double value);
};

struct Payoffs {
  double p1;
  double p2;
};

enum class Player { One, Two };

/// J^dagger (u1 (x) u2) J |initial>. Throws std::invalid_argument on dimension mismatch.
PairState final_state(const ComplexMatrix& j_beta, const ComplexMatrix& u1,
                      const ComplexMatrix& u2, const PairState& initial);
PairState final_state(const ComplexMatrix& j_beta, const StrategyParams& p1,
                      const StrategyParams& p2, const PairState& initial);

Payoffs payoffs(const GameTable& t, const PairState& s);

/// Frobenius norm of [J, s1 (x) s2].
double commensurability_residual(const ComplexMatrix& j_beta, const ComplexMatrix& s1,
                                 const ComplexMatrix& s2);

struct SearchOptions {
  int restarts = 16;
  int max_rounds = 50;
  double tol = 1e-6;
  int probes = 2000;  // deviations per player in the certificate
  std::uint64_t seed = 0;
  NelderMeadOptions local{};
};

/// Payoff evaluation for a fixed table, entangler and initial state.
class QuantumGame {
 public:
  /// Throws std::invalid_argument if the dimensions disagree or J is not unitary.
  QuantumGame(GameTable table, ComplexMatrix j_beta,
              std::optional<PairState> initial = std::nullopt);

  int n() const { return table_.n; }
  const GameTable& table() const { return table_; }
  const ComplexMatrix& entangler() const { return j_; }

  Payoffs evaluate(const ComplexMatrix& u1, const ComplexMatrix& u2) const;
  Payoffs evaluate(const StrategyParams& p1, const StrategyParams& p2) const;
  double payoff_of(Player who, const StrategyParams& mine, const StrategyParams& theirs) const;

  /// Multistart Nelder-Mead maximization of `who`'s payoff with the opponent
  /// fixed. Starts: identity, the optional warm start, then random gamma in
  /// [-pi, pi]^(N^2-1) drawn from `seed`.
  StrategyParams best_response(Player who, const StrategyParams& opponent, std::uint64_t seed,
                               int restarts = 16,
                               const std::optional<StrategyParams>& warm = std::nullopt,
                               const NelderMeadOptions& local = {}) const;

  /// Largest unilateral payoff gain over `probes` seeded random deviations
  /// per player, followed by a local polish from the best probe. Never negative.
  double certify(const StrategyParams& g1, const StrategyParams& g2, int probes,
                 std::uint64_t seed, const NelderMeadOptions& local = {}) const;

 private:
  GameTable table_;
  ComplexMatrix j_;
  ComplexMatrix j_adjoint_;
  ComplexMatrix prepared_;  // J|initial> as an N x N grid
  StrategyBasis basis_;
};

struct NEResult {
  StrategyParams gamma1;
  StrategyParams gamma2;
  Payoffs payoffs;
  double epsilon;
  int probes;
};

struct NESearchReport {
  NEResult result;  // last iterate, certified either way
  bool converged;
  int rounds;
};

StrategyParams best_response(const GameTable& t, const ComplexMatrix& j_beta,
                             const StrategyParams& opponent, Player which, std::uint64_t seed);

/// Iterated best response until neither player improves by tol or max_rounds
/// is exhausted. Throws std::invalid_argument for restarts < 1.
NESearchReport find_ne(const GameTable& t, const ComplexMatrix& j_beta,
                       const SearchOptions& options = {});
NESearchReport find_ne(const QuantumGame& game, const SearchOptions& options = {});

}  // namespace qentangle
