#pragma once

// Oracles shared by the unit tests and the acceptance suite.

#include <random>
#include <string>
#include <vector>

#include "matchstat/matching.hpp"
#include "matchstat/sundaram.hpp"
#include "matchstat/tableau.hpp"

namespace matchstat::testing {

/// Empty string when the two routes and new boxes of inserting x then
/// x_next into t satisfy the row bumping relations; otherwise a description.
inline std::string row_bumping_violation(const Tableau& t, int x, int x_next) {
  const auto first = row_insert(t, x);
  const auto second = row_insert(first.tableau, x_next);
  const auto& r1 = first.route;
  const auto& r2 = second.route;
  const Box b1 = r1.new_box;
  const Box b2 = r2.new_box;
  const std::size_t shared = std::min(r1.boxes.size(), r2.boxes.size());
  if (x <= x_next) {
    // R strictly left of R'; B strictly left of and weakly below B'.
    if (r2.boxes.size() > r1.boxes.size()) return "second route extends below the first";
    for (std::size_t k = 0; k < shared; ++k) {
      if (!(r1.boxes[k].col < r2.boxes[k].col)) {
        return "row " + std::to_string(k + 1) + ": first route not strictly left";
      }
    }
    if (!(b1.col < b2.col && b1.row >= b2.row)) return "new boxes violate x <= x'";
  } else {
    // R' weakly left of R; B' weakly left of and strictly below B.
    if (r2.boxes.size() <= r1.boxes.size()) return "second route does not pass below";
    for (std::size_t k = 0; k < shared; ++k) {
      if (!(r2.boxes[k].col <= r1.boxes[k].col)) {
        return "row " + std::to_string(k + 1) + ": second route not weakly left";
      }
    }
    if (!(b2.col <= b1.col && b2.row > b1.row)) return "new boxes violate x > x'";
  }
  return {};
}

/// Random semistandard tableau with entries in 1..max_value (repeats allowed).
inline Tableau random_tableau(std::mt19937_64& rng, int size, int max_value) {
  std::uniform_int_distribution<int> value(1, max_value);
  Tableau t;
  for (int i = 0; i < size; ++i) t = row_insert(t, value(rng)).tableau;
  return t;
}

struct CaseTally {
  bool descent_iff_case = true;
  bool conjugation_swaps = true;
  long long updown_minus_downup = 0;
  long long weighted = 0;  // sum of i over case 1 minus case 2
};

/// Checks the six-case relations at every position of one matching.
inline CaseTally tally_cases(const Matching& m) {
  const auto t = matching_to_oscillating(m).first;
  const auto tc = conjugate_oscillating(t);
  const auto stats = descent_stats(m);
  std::vector<char> is_descent(m.size() + 1, 0);
  for (int i : stats.des_set) is_descent[i] = 1;

  CaseTally tally;
  for (int i = 1; i < m.size(); ++i) {
    const auto c = classify_position(t, i);
    const auto cc = classify_position(tc, i);
    if (is_descent_case(c) != static_cast<bool>(is_descent[i])) tally.descent_iff_case = false;
    int expected = static_cast<int>(c);
    if (expected >= 3) expected = expected % 2 == 1 ? expected + 1 : expected - 1;
    if (static_cast<int>(cc) != expected) tally.conjugation_swaps = false;
    if (c == PositionCase::kUpDown) {
      ++tally.updown_minus_downup;
      tally.weighted += i;
    } else if (c == PositionCase::kDownUp) {
      --tally.updown_minus_downup;
      tally.weighted -= i;
    }
  }
  return tally;
}

}  // namespace matchstat::testing
