#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace matchstat {

/// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

Rational make_rational(long long numerator, long long denominator);
std::string to_string(const Rational& q);

/// Exact first and second moments of descent statistics over the uniform
/// matching of {1..2n}. Joint probabilities are per pair of positions.
struct MomentReport {
  int n = 0;
  Rational mean_d, var_d, second_moment_d;
  Rational mean_maj, var_maj, second_moment_maj;
  Rational p_descent, p_joint_adjacent, p_joint_nonadjacent;

  // Fields a closed form produces below its proven range are kept but
  // flagged, so they are not compared against enumeration.
  bool joint_adjacent_valid = true;     // n >= 3
  bool joint_nonadjacent_valid = true;  // n >= 4
  bool variance_valid = true;           // n >= 4; both variances and second moments
};

struct MomentField {
  std::string_view name;
  Rational MomentReport::*value;
  bool MomentReport::*valid;  // nullptr: always valid
};

/// The nine rational fields in a fixed display order.
const std::vector<MomentField>& moment_fields();

bool field_valid(const MomentReport& report, const MomentField& field);

MomentReport closed_form_moments(int n);

/// Exhaustive enumeration with exact averaging. Joint probabilities are
/// averaged over all position pairs of the given kind; a kind with no pairs
/// at this n is reported as 0 and flagged invalid.
MomentReport brute_force_moments(int n);

/// Largest n accepted by brute_force_moments.
inline constexpr int kEnumerationBudget = 8;

}  // namespace matchstat
