#include <algorithm>
#include <cmath>
#include <numbers>

#include "qentangle/cli.hpp"
#include "qentangle/permrep.hpp"

namespace qentangle::cli {

namespace {

constexpr double pi = std::numbers::pi;

std::string label(const char* check, const char* method, int n) {
  return std::string(check) + "/" + method + "/N=" + std::to_string(n);
}

CheckResult at_most(std::string name, double value, double limit) {
  return {std::move(name), value <= limit, value, "<= " + format_number(limit)};
}

CheckResult at_least(std::string name, double value, double limit) {
  return {std::move(name), value >= limit, value, ">= " + format_number(limit)};
}

// Largest step between neighbours and how far the sampled range falls short
// of [0, ln n].
struct Sweep {
  double max_step = 0.0;
  double coverage_gap = 0.0;
};

Sweep sweep(const EntropyCurve& c) {
  Sweep s;
  double lo = c.samples.front().entropy, hi = lo;
  for (std::size_t k = 1; k < c.samples.size(); ++k) {
    s.max_step = std::max(s.max_step, std::abs(c.samples[k].entropy - c.samples[k - 1].entropy));
    lo = std::min(lo, c.samples[k].entropy);
    hi = std::max(hi, c.samples[k].entropy);
  }
  s.coverage_gap = std::max(lo, std::log(static_cast<double>(c.n)) - hi);
  return s;
}

std::vector<double> sample_betas(int n) {
  const double period = 4.0 * pi / n;
  std::vector<double> betas;
  for (int k = 0; k < 25; ++k) betas.push_back(-period + 3.0 * period * (k + 0.5) / 25.0);
  return betas;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyConfig& config) {
  const auto tol = [&](double fallback) { return config.tol.value_or(fallback); };
  std::vector<CheckResult> out;

  for (int n : config.n_list) {
    if (n < 2) throw UsageError("verify: every n must be >= 2");
    const double log_n = std::log(static_cast<double>(n));
    const double period = 4.0 * pi / n;

    double unitarity = 0.0, oracle = 0.0, periodic = 0.0;
    for (double beta : sample_betas(n)) {
      const auto e = PermExpEntangler::make(n, beta);
      const ComplexMatrix j = perm_entangler_matrix(e);
      unitarity = std::max(unitarity, unitarity_residual(j));
      const StateVector diff = j.col(0) - perm_entangled_state(e).to_vector();
      oracle = std::max(oracle, diff.cwiseAbs().maxCoeff());

      const double s = von_neumann_entropy(perm_entangled_state(e));
      const double shifted = von_neumann_entropy(perm_entangled_state(PermExpEntangler::make(n, beta + period)));
      const double mirrored = von_neumann_entropy(perm_entangled_state(PermExpEntangler::make(n, period - beta)));
      periodic = std::max({periodic, std::abs(s - shifted), std::abs(s - mirrored)});
    }
    out.push_back(at_most(label("unitarity", "perm", n), unitarity, tol(1e-10)));
    out.push_back(at_most(label("oracle", "perm", n), oracle, tol(1e-10)));
    out.push_back(at_most(label("periodicity", "perm", n), periodic, tol(1e-10)));

    if (n <= 4) {
      double roots = 0.0;
      for (double beta : max_entanglement_betas(n)) {
        const auto p = coefficient_pair(n, beta);
        roots = std::max({roots, std::abs(p.f1 - 1.0 / n), std::abs(p.f2 - 1.0 / n)});
      }
      out.push_back(at_most(label("roots", "perm", n), roots, tol(1e-12)));
      const Sweep s = sweep(entropy_curve(EntanglerMethod::PermExp, n, 0.0, period, 2001));
      out.push_back(at_most(label("continuity", "perm", n), s.max_step, 0.01));
      out.push_back(at_most(label("completeness", "perm", n), s.coverage_gap, 0.01));
    } else {
      const auto c = entropy_curve(EntanglerMethod::PermExp, n, 0.0, period, 10000);
      double top = 0.0;
      for (const auto& s : c.samples) top = std::max(top, s.entropy);
      out.push_back(at_least(label("entropy-gap", "perm", n), log_n - top, 0.05));
    }

    const FracPowEntangler fp = build_fracpow(n);
    double fp_unitarity = 0.0;
    for (double beta : {-0.5, 0.0, 0.37, 0.5, 1.0, 1.7}) {
      fp_unitarity = std::max(fp_unitarity, unitarity_residual(fracpow_matrix(fp, beta)));
    }
    out.push_back(at_most(label("unitarity", "fracpow", n), fp_unitarity, tol(1e-10)));
    const double ends = std::max(std::abs(von_neumann_entropy(fracpow_state(fp, 0.0))),
                                 std::abs(von_neumann_entropy(fracpow_state(fp, 1.0)) - log_n));
    out.push_back(at_most(label("endpoints", "fracpow", n), ends, tol(1e-9)));
    const Sweep s = sweep(entropy_curve(fp, 0.0, 1.0, 2001));
    out.push_back(at_most(label("continuity", "fracpow", n), s.max_step, 0.01));
    out.push_back(at_most(label("completeness", "fracpow", n), s.coverage_gap, 0.01));
  }

  const auto table = verify_group_table();
  out.push_back(at_most("group-table", table.max_residual(), tol(1e-14)));
  double det = 0.0;
  for (auto l : kAllSU3Labels) {
    const ComplexMatrix m = su3_classical(l).matrix;
    det = std::max({det, std::abs(m.determinant() - 1.0), unitarity_residual(m)});
  }
  out.push_back(at_most("su3-unit-determinant", det, tol(1e-12)));

  const auto has = [&](int n) {
    return std::find(config.n_list.begin(), config.n_list.end(), n) != config.n_list.end();
  };
  if (has(2)) {
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const double beta = -pi + 2.0 * pi * (k + 0.5) / 20.0;
      worst = std::max({worst,
                        commensurability_residual(sigma_y_entangler(beta), flip_strategy(), flip_strategy()),
                        commensurability_residual(perm_entangler_matrix(PermExpEntangler::make(2, beta)),
                                                  flip_strategy(), flip_strategy())});
    }
    out.push_back(at_most("commensurability/N=2", worst, tol(1e-12)));
  }
  if (has(3)) {
    const ComplexMatrix s12 = su3_classical(SU3Label::S12).matrix;
    const ComplexMatrix s13 = su3_classical(SU3Label::S13).matrix;
    double least = 1e300;
    for (int k = 0; k < 20; ++k) {
      const double beta = 4.0 * pi / 3.0 * (k + 0.5) / 20.0;
      const ComplexMatrix j = perm_entangler_matrix(PermExpEntangler::make(3, beta));
      least = std::min({least, commensurability_residual(j, s12, s13),
                        commensurability_residual(j, s13, s12)});
    }
    out.push_back(at_least("non-commensurability/N=3", least, 1e-3));
  }
  return out;
}

}  // namespace qentangle::cli
