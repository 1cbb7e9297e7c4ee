#pragma once

// Transposition matrices and the signed unit-determinant representation of
// the permutation group on three letters.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qentangle/tensorlin.hpp"

namespace qentangle {

/// The swap i <-> j on n letters. Indices are 1-based, stored with i < j.
struct Transposition {
  int n;
  int i;
  int j;

  /// Throws std::invalid_argument if i == j or either index is outside [1, n].
  static Transposition make(int n, int i, int j);
};

/// Unsigned permutation matrix for the transposition: I with rows i and j swapped.
ComplexMatrix plain_transposition(const Transposition& t);
ComplexMatrix plain_transposition(int n, int i, int j);

enum class SU3Label { Identity, S12, S13, S23, S312, S231 };

inline constexpr std::array<SU3Label, 6> kAllSU3Labels = {
    SU3Label::Identity, SU3Label::S12,  SU3Label::S13,
    SU3Label::S23,      SU3Label::S312, SU3Label::S231};

struct SU3Classical {
  SU3Label label;
  ComplexMatrix matrix;  // 3x3, entries in {0, +1, -1}, det = +1
};

std::string_view to_string(SU3Label label);

/// Accepts "1", "I", "S12", "S13", "S23", "S312", "S231".
/// Throws std::invalid_argument on anything else.
SU3Label parse_su3_label(std::string_view text);

SU3Classical su3_classical(SU3Label label);

struct GroupRelation {
  std::string name;
  double residual;  // Frobenius norm of lhs - rhs
};

struct GroupTableReport {
  std::vector<GroupRelation> relations;

  double max_residual() const;
  bool holds(double tol = 1e-14) const { return max_residual() <= tol; }
};

/// Checks the defining products of the signed S3 representation:
/// 1*S12 = S12, S12^2 = 1, S13^2 = 1, S13 S12 S13 = S23, S13 S12 = S312,
/// S12 S13 = S231.
GroupTableReport verify_group_table();

}  // namespace qentangle
