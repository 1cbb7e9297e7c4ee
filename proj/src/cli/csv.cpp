#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "qentangle/cli.hpp"

namespace qentangle::cli {

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

double round15(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(format_number(x));
}

void write_entropy_csv(const EntropyCurve& curve, std::ostream& out) {
  out << "beta,entropy_nats\n";
  for (const auto& s : curve.samples) {
    out << format_number(s.beta) << ',' << format_number(s.entropy) << '\n';
  }
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_field(const std::string& text, int line) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(value)) {
    throw UsageError("CSV line " + std::to_string(line) + ": not a number: '" + text + "'");
  }
  return value;
}

}  // namespace

std::vector<EntropySample> read_entropy_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "beta,entropy_nats") {
    throw UsageError("CSV must start with the header 'beta,entropy_nats'");
  }
  std::vector<EntropySample> samples;
  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw UsageError("CSV line " + std::to_string(number) + ": expected two fields");
    }
    samples.push_back({parse_field(trim(line.substr(0, comma)), number),
                       parse_field(trim(line.substr(comma + 1)), number)});
  }
  if (samples.empty()) throw UsageError("CSV has no data rows");
  return samples;
}

}  // namespace qentangle::cli
