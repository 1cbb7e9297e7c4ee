#include "qentangle/permrep.hpp"

#include <algorithm>
#include <stdexcept>

namespace qentangle {

Transposition Transposition::make(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("transposition indices must differ");
  if (i < 1 || j < 1 || i > n || j > n) {
    throw std::invalid_argument("transposition index out of range");
  }
  return Transposition{n, std::min(i, j), std::max(i, j)};
}

ComplexMatrix plain_transposition(const Transposition& t) {
  ComplexMatrix m = ComplexMatrix::Identity(t.n, t.n);
  m.row(t.i - 1).swap(m.row(t.j - 1));
  return m;
}

ComplexMatrix plain_transposition(int n, int i, int j) {
  return plain_transposition(Transposition::make(n, i, j));
}

std::string_view to_string(SU3Label label) {
  switch (label) {
    case SU3Label::Identity: return "1";
    case SU3Label::S12: return "S12";
    case SU3Label::S13: return "S13";
    case SU3Label::S23: return "S23";
    case SU3Label::S312: return "S312";
    case SU3Label::S231: return "S231";
  }
  throw std::invalid_argument("unknown SU(3) label");
}

SU3Label parse_su3_label(std::string_view text) {
  if (text == "I") return SU3Label::Identity;
  for (auto label : kAllSU3Labels) {
    if (text == to_string(label)) return label;
  }
  throw std::invalid_argument("unknown SU(3) label: " + std::string(text));
}

SU3Classical su3_classical(SU3Label label) {
  Eigen::Matrix3d m;
  switch (label) {
    case SU3Label::Identity:
      m << 1, 0, 0,
           0, 1, 0,
           0, 0, 1;
      break;
    case SU3Label::S12:
      m << 0, -1, 0,
          -1, 0, 0,
           0, 0, -1;
      break;
    case SU3Label::S13:
      m << 0, 0, -1,
           0, -1, 0,
          -1, 0, 0;
      break;
    case SU3Label::S23:
      m << -1, 0, 0,
            0, 0, -1,
            0, -1, 0;
      break;
    case SU3Label::S312:
      m << 0, 0, 1,
           1, 0, 0,
           0, 1, 0;
      break;
    case SU3Label::S231:
      m << 0, 1, 0,
           0, 0, 1,
           1, 0, 0;
      break;
    default:
      throw std::invalid_argument("unknown SU(3) label");
  }
  return SU3Classical{label, m.cast<Complex>()};
}

double GroupTableReport::max_residual() const {
  double worst = 0.0;
  for (const auto& r : relations) worst = std::max(worst, r.residual);
  return worst;
}

GroupTableReport verify_group_table() {
  const auto get = [](SU3Label l) { return su3_classical(l).matrix; };
  const ComplexMatrix one = get(SU3Label::Identity);
  const ComplexMatrix s12 = get(SU3Label::S12);
  const ComplexMatrix s13 = get(SU3Label::S13);

  GroupTableReport report;
  const auto add = [&](std::string name, const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    report.relations.push_back({std::move(name), (lhs - rhs).norm()});
  };
  add("1*S12 = S12", one * s12, s12);
  add("S12*S12 = 1", s12 * s12, one);
  add("S13*S13 = 1", s13 * s13, one);
  add("S13*S12*S13 = S23", s13 * s12 * s13, get(SU3Label::S23));
  add("S13*S12 = S312", s13 * s12, get(SU3Label::S312));
  add("S12*S13 = S231", s12 * s13, get(SU3Label::S231));
  return report;
}

}  // namespace qentangle
