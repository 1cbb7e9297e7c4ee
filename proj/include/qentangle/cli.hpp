#pragma once

// Command-line front end: entropy sweeps, root solving, entangler design,
// invariant verification, equilibrium search and SVG plotting.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation
// error, 3 construction failure (e.g. a singular seed matrix).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qentangle/entanglement.hpp"
#include "qentangle/game.hpp"

namespace qentangle::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kConstruction = 3 };

/// Bad flags, files or values; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int n = 0;
  EntanglerMethod method = EntanglerMethod::PermExp;
  double beta_min = 0.0;
  double beta_max = 0.0;
  int steps = 0;
  std::optional<double> beta;
  std::optional<double> beta_frac;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::vector<int> n_list{2, 3, 4, 5};
  int restarts = 16;
  int max_rounds = 50;
  int probes = 2000;
  std::string in_path;
  std::string out_path;    // empty = standard output
  std::string table_path;
  std::string seed_path;   // optional seed matrix for the fractional power
};

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// %.15g.
std::string format_number(double x);
/// x rounded to 15 significant digits, for JSON emission.
double round15(double x);

void write_entropy_csv(const EntropyCurve& curve, std::ostream& out);
/// Throws UsageError on a missing header, malformed row, or no rows.
std::vector<EntropySample> read_entropy_csv(std::istream& in);

struct PlotGeometry {
  double width = 640.0;
  double height = 400.0;
  double margin = 60.0;
  double beta_min = 0.0;
  double beta_max = 1.0;
  double entropy_max = 1.0;

  double x(double beta) const;
  double y(double entropy) const;
};

PlotGeometry plot_geometry(const std::vector<EntropySample>& samples, int n);
/// One polyline, a dashed horizontal reference line at ln n, axis labels.
std::string render_svg(const std::vector<EntropySample>& samples, int n);

/// Table schema: {"n": N, "u1": [[...]], "u2": [[...]]}. Throws UsageError.
GameTable parse_game_table(const nlohmann::json& j);

/// Accepts nested arrays of reals or of [re, im] pairs. Throws UsageError.
ComplexMatrix parse_complex_matrix(const nlohmann::json& j);
nlohmann::json complex_matrix_json(const ComplexMatrix& m);

nlohmann::json ne_report_json(const NESearchReport& report, EntanglerMethod method, double beta,
                              std::uint64_t seed);

struct CheckResult {
  std::string name;
  bool passed;
  double value;
  std::string detail;
};

struct VerifyConfig {
  std::vector<int> n_list{2, 3, 4, 5};
  std::optional<double> tol;  // replaces every numerical tolerance when set
};

std::vector<CheckResult> run_verification(const VerifyConfig& config);

}  // namespace qentangle::cli
