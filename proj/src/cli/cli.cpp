#include "qentangle/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>

#include "CLI11.hpp"
#include "qentangle/entangler.hpp"

namespace qentangle::cli {

using nlohmann::json;

namespace {

void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open output file: " + path);
  write(file);
  if (!file) throw UsageError("failed writing output file: " + path);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON in " + path + ": " + e.what());
  }
}

void require_n(int n) {
  if (n < 2) throw UsageError("--n must be at least 2");
}

double resolve_beta(const RunConfig& cfg) {
  if (cfg.beta && cfg.beta_frac) throw UsageError("give either --beta or --beta-frac, not both");
  if (cfg.beta_frac) {
    if (cfg.method != EntanglerMethod::PermExp) {
      throw UsageError("--beta-frac is defined only for the perm method");
    }
    return *cfg.beta_frac * 4.0 * std::numbers::pi / cfg.n;
  }
  if (!cfg.beta) throw UsageError("--beta or --beta-frac is required");
  return *cfg.beta;
}

FracPowEntangler fracpow_from(const RunConfig& cfg) {
  if (cfg.seed_path.empty()) return build_fracpow(cfg.n);
  return build_fracpow(cfg.n, parse_complex_matrix(read_json_file(cfg.seed_path)));
}

ComplexMatrix entangler_matrix(const RunConfig& cfg, double beta) {
  if (cfg.method == EntanglerMethod::PermExp) {
    return perm_entangler_matrix(PermExpEntangler::make(cfg.n, beta));
  }
  return fracpow_matrix(fracpow_from(cfg), beta);
}

json state_coefficients(const PairState& s) {
  json arr = json::array();
  for (int i = 0; i < s.n(); ++i) arr.push_back({round15(s(i, i).real()), round15(s(i, i).imag())});
  return arr;
}

int cmd_entropy_curve(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg.n);
  if (cfg.steps < 2) throw UsageError("--steps must be at least 2");
  if (!(cfg.beta_min < cfg.beta_max)) throw UsageError("--beta-min must be below --beta-max");
  const EntropyCurve curve =
      cfg.method == EntanglerMethod::FracPow
          ? entropy_curve(fracpow_from(cfg), cfg.beta_min, cfg.beta_max, cfg.steps)
          : entropy_curve(EntanglerMethod::PermExp, cfg.n, cfg.beta_min, cfg.beta_max, cfg.steps);
  emit(cfg.out_path, out, [&](std::ostream& os) { write_entropy_csv(curve, os); });
  return kOk;
}

int cmd_max_entanglement(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg.n);
  json roots = json::array();
  for (double r : max_entanglement_betas(cfg.n)) roots.push_back(round15(r));
  const json doc = {{"n", cfg.n}, {"method", "perm"}, {"roots", roots}};
  emit(cfg.out_path, out, [&](std::ostream& os) { os << doc.dump() << '\n'; });
  return kOk;
}

int cmd_design(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg.n);
  const double beta = resolve_beta(cfg);
  json doc = {{"n", cfg.n}, {"method", std::string(to_string(cfg.method))}, {"beta", round15(beta)}};
  if (cfg.method == EntanglerMethod::PermExp) {
    doc["basis"] = "diagonal kets |ii>, i = 1..n";
    doc["coefficients"] = state_coefficients(perm_entangled_state(PermExpEntangler::make(cfg.n, beta)));
  } else {
    const FracPowEntangler e = fracpow_from(cfg);
    doc["seed_pattern"] = e.default_seed() ? "default" : "custom";
    doc["seed_matrix"] = complex_matrix_json(e.seed_matrix());
    json phases = json::array();
    for (double p : e.eigenphases()) phases.push_back(round15(p));
    doc["eigenphases"] = phases;
    doc["block"] = complex_matrix_json(e.block(beta));
    doc["coefficients"] = state_coefficients(fracpow_state(e, beta));
  }
  emit(cfg.out_path, out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyConfig vc{cfg.n_list, cfg.tol};
  if (vc.tol && !(*vc.tol >= 0.0)) throw UsageError("--tol must be non-negative");
  const auto results = run_verification(vc);
  int failed = 0;
  emit(cfg.out_path, out, [&](std::ostream& os) {
    for (const auto& r : results) {
      os << (r.passed ? "PASS " : "FAIL ") << r.name << "  value=" << format_number(r.value)
         << "  required " << r.detail << '\n';
      failed += r.passed ? 0 : 1;
    }
    os << (failed ? "verification FAILED: " : "verification passed: ") << results.size() - failed
       << "/" << results.size() << " checks\n";
  });
  return failed ? kVerifyFailed : kOk;
}

int cmd_ne_search(RunConfig cfg, std::ostream& out) {
  const GameTable table = parse_game_table(read_json_file(cfg.table_path));
  cfg.n = table.n;
  const double beta = resolve_beta(cfg);
  if (cfg.restarts < 1) throw UsageError("--restarts must be at least 1");
  if (cfg.max_rounds < 1) throw UsageError("--max-rounds must be at least 1");
  if (cfg.probes < 0) throw UsageError("--probes must be non-negative");

  SearchOptions opt;
  opt.restarts = cfg.restarts;
  opt.max_rounds = cfg.max_rounds;
  opt.probes = cfg.probes;
  opt.seed = cfg.seed;
  if (cfg.tol) opt.tol = *cfg.tol;
  const NESearchReport report = find_ne(table, entangler_matrix(cfg, beta), opt);
  const json doc = ne_report_json(report, cfg.method, beta, cfg.seed);
  emit(cfg.out_path, out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  return kOk;
}

int cmd_plot(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg.n);
  std::ifstream in(cfg.in_path);
  if (!in) throw UsageError("cannot open CSV: " + cfg.in_path);
  const auto samples = read_entropy_csv(in);
  const std::string svg = render_svg(samples, cfg.n);
  emit(cfg.out_path, out, [&](std::ostream& os) { os << svg; });
  return kOk;
}

}  // namespace

GameTable parse_game_table(const json& j) {
  try {
    if (!j.is_object()) throw UsageError("game table must be a JSON object");
    const int n = j.at("n").get<int>();
    const auto grid = [&](const char* key) {
      const json& rows = j.at(key);
      if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
        throw UsageError(std::string("game table: '") + key + "' must have n rows");
      }
      Eigen::MatrixXd m(n, n);
      for (int r = 0; r < n; ++r) {
        if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != n) {
          throw UsageError(std::string("game table: '") + key + "' rows must have n entries");
        }
        for (int c = 0; c < n; ++c) {
          if (!rows[r][c].is_number()) throw UsageError("game table: payoffs must be numbers");
          m(r, c) = rows[r][c].get<double>();
        }
      }
      return m;
    };
    if (n < 2) throw UsageError("game table: n must be at least 2");
    return GameTable::make(grid("u1"), grid("u2"));
  } catch (const json::exception& e) {
    throw UsageError(std::string("game table: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ComplexMatrix parse_complex_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw UsageError("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = j[0].is_array() ? static_cast<Eigen::Index>(j[0].size()) : 0;
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols || cols == 0) {
      throw UsageError("matrix rows must be arrays of equal length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& v = j[r][c];
      if (v.is_number()) {
        m(r, c) = v.get<double>();
      } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        m(r, c) = Complex(v[0].get<double>(), v[1].get<double>());
      } else {
        throw UsageError("matrix entries must be numbers or [re, im] pairs");
      }
    }
  }
  return m;
}

json complex_matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({round15(m(r, c).real()), round15(m(r, c).imag())});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json ne_report_json(const NESearchReport& report, EntanglerMethod method, double beta,
                    std::uint64_t seed) {
  const auto vec = [](const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(round15(x));
    return a;
  };
  const NEResult& r = report.result;
  return {{"n", r.gamma1.n},
          {"method", std::string(to_string(method))},
          {"beta", round15(beta)},
          {"seed", seed},
          {"converged", report.converged},
          {"rounds", report.rounds},
          {"gamma1", vec(r.gamma1.gamma)},
          {"gamma2", vec(r.gamma2.gamma)},
          {"payoffs", {round15(r.payoffs.p1), round15(r.payoffs.p2)}},
          {"epsilon", round15(r.epsilon)},
          {"probes", r.probes}};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string method = "perm";

  CLI::App app{"Single-parameter entanglers for two-player N-strategy quantum games"};
  app.name("qentangle");
  app.require_subcommand(1);

  const auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", method, "perm | fracpow")
        ->check(CLI::IsMember({"perm", "perm-exp", "fracpow", "frac-pow"}));
  };
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "output path (default: standard output)");
  };
  const auto add_beta = [&](CLI::App* sub) {
    sub->add_option("--beta", cfg.beta, "entangler parameter");
    sub->add_option("--beta-frac", cfg.beta_frac, "beta as a fraction of the period 4 pi / n (perm)");
  };

  auto* curve = app.add_subcommand("entropy-curve", "entropy of J(beta)|11> on a uniform grid (CSV)");
  add_method(curve);
  curve->add_option("--n", cfg.n, "strategies per player")->required();
  curve->add_option("--beta-min", cfg.beta_min)->required();
  curve->add_option("--beta-max", cfg.beta_max)->required();
  curve->add_option("--steps", cfg.steps, "grid points, >= 2")->required();
  curve->add_option("--seed-file", cfg.seed_path, "JSON seed matrix for fracpow");
  add_out(curve);

  auto* roots = app.add_subcommand("max-entanglement", "betas where the perm entangler reaches ln n (JSON)");
  roots->add_option("--n", cfg.n)->required();
  add_out(roots);

  auto* design = app.add_subcommand("design", "emit the entangler at one beta (JSON)");
  add_method(design);
  design->add_option("--n", cfg.n)->required();
  add_beta(design);
  design->add_option("--seed-file", cfg.seed_path, "JSON seed matrix for fracpow");
  add_out(design);

  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--n-list", cfg.n_list, "comma-separated n values")->delimiter(',');
  verify->add_option("--tol", cfg.tol, "override every numerical tolerance");
  add_out(verify);

  auto* ne = app.add_subcommand("ne-search", "epsilon-Nash equilibrium search (JSON)");
  ne->add_option("--table", cfg.table_path, "game table JSON")->required();
  add_method(ne);
  add_beta(ne);
  ne->add_option("--seed", cfg.seed);
  ne->add_option("--restarts", cfg.restarts);
  ne->add_option("--max-rounds", cfg.max_rounds);
  ne->add_option("--probes", cfg.probes, "certificate deviations per player");
  ne->add_option("--tol", cfg.tol, "best-response improvement threshold");
  ne->add_option("--seed-file", cfg.seed_path, "JSON seed matrix for fracpow");
  add_out(ne);

  auto* plot = app.add_subcommand("plot", "SVG plot of an entropy-curve CSV");
  plot->add_option("--in", cfg.in_path, "CSV from entropy-curve")->required();
  plot->add_option("--n", cfg.n, "strategies per player (reference line at ln n)")->required();
  add_out(plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    cfg.method = parse_entangler_method(method);
    if (*curve) return cmd_entropy_curve(cfg, out);
    if (*roots) return cmd_max_entanglement(cfg, out);
    if (*design) return cmd_design(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*ne) return cmd_ne_search(cfg, out);
    if (*plot) return cmd_plot(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericalError& e) {
    err << "construction failed: " << e.what() << '\n';
    return kConstruction;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace qentangle::cli
