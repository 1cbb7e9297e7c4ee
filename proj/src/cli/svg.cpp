#include <algorithm>
#include <cmath>
#include <sstream>

#include "qentangle/cli.hpp"

namespace qentangle::cli {

double PlotGeometry::x(double beta) const {
  const double span = beta_max > beta_min ? beta_max - beta_min : 1.0;
  return margin + (beta - beta_min) / span * (width - 2 * margin);
}

double PlotGeometry::y(double entropy) const {
  const double top = entropy_max > 0.0 ? entropy_max : 1.0;
  return height - margin - entropy / top * (height - 2 * margin);
}

PlotGeometry plot_geometry(const std::vector<EntropySample>& samples, int n) {
  PlotGeometry g;
  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end(),
                                            [](auto a, auto b) { return a.beta < b.beta; });
  g.beta_min = lo->beta;
  g.beta_max = hi->beta;
  double top = std::log(static_cast<double>(n));
  for (const auto& s : samples) top = std::max(top, s.entropy);
  g.entropy_max = 1.05 * top;
  return g;
}

std::string render_svg(const std::vector<EntropySample>& samples, int n) {
  const PlotGeometry g = plot_geometry(samples, n);
  const double left = g.margin, right = g.width - g.margin;
  const double bottom = g.height - g.margin, top = g.margin;
  const double ref = g.y(std::log(static_cast<double>(n)));

  std::ostringstream svg;
  svg << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n'
      << R"(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width=")" << g.width
      << R"(" height=")" << g.height << R"(">)" << '\n'
      << R"(  <rect width="100%" height="100%" fill="white"/>)" << '\n'
      << R"(  <line id="x-axis" x1=")" << format_number(left) << R"(" y1=")" << format_number(bottom)
      << R"(" x2=")" << format_number(right) << R"(" y2=")" << format_number(bottom)
      << R"(" stroke="black"/>)" << '\n'
      << R"(  <line id="y-axis" x1=")" << format_number(left) << R"(" y1=")" << format_number(bottom)
      << R"(" x2=")" << format_number(left) << R"(" y2=")" << format_number(top)
      << R"(" stroke="black"/>)" << '\n'
      << R"(  <line id="reference" x1=")" << format_number(left) << R"(" y1=")" << format_number(ref)
      << R"(" x2=")" << format_number(right) << R"(" y2=")" << format_number(ref)
      << R"(" stroke="gray" stroke-dasharray="6,4"/>)" << '\n'
      << R"(  <text x=")" << format_number(right + 4) << R"(" y=")" << format_number(ref + 4)
      << R"(" font-size="12">ln )" << n << "</text>\n";

  svg << R"(  <polyline id="curve" fill="none" stroke="steelblue" stroke-width="1.5" points=")";
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (k) svg << ' ';
    svg << format_number(g.x(samples[k].beta)) << ',' << format_number(g.y(samples[k].entropy));
  }
  svg << R"("/>)" << '\n';

  svg << R"(  <text x=")" << format_number(g.width / 2) << R"(" y=")" << format_number(g.height - 15)
      << R"(" font-size="14" text-anchor="middle">beta</text>)" << '\n'
      << R"(  <text x="18" y=")" << format_number(g.height / 2)
      << R"(" font-size="14" text-anchor="middle" transform="rotate(-90 18 )"
      << format_number(g.height / 2) << R"lit()">entropy (nats)</text>)lit" << '\n'
      << R"(  <text x=")" << format_number(left) << R"(" y=")" << format_number(bottom + 18)
      << R"(" font-size="11" text-anchor="middle">)" << format_number(g.beta_min) << "</text>\n"
      << R"(  <text x=")" << format_number(right) << R"(" y=")" << format_number(bottom + 18)
      << R"(" font-size="11" text-anchor="middle">)" << format_number(g.beta_max) << "</text>\n"
      << "</svg>\n";
  return svg.str();
}

}  // namespace qentangle::cli
