#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchstat/matching.hpp"
#include "matchstat/tableau.hpp"

namespace matchstat {

/// A walk on Young's lattice from the empty partition back to the empty
/// partition, one box added or removed per step.
class OscillatingTableau {
 public:
  /// Throws ValidationError for any malformed sequence.
  explicit OscillatingTableau(std::vector<Partition> shapes);

  /// Parses "();(1);(1,1);(1);()".
  static OscillatingTableau parse(std::string_view text);

  const std::vector<Partition>& shapes() const noexcept { return shapes_; }
  /// Number of steps, 2n.
  int length() const noexcept { return static_cast<int>(shapes_.size()) - 1; }
  const Partition& operator[](int i) const { return shapes_.at(i); }

  std::string to_string() const;

  friend bool operator==(const OscillatingTableau&,
                         const OscillatingTableau&) = default;

 private:
  std::vector<Partition> shapes_;
};

struct BijectionStep {
  Box box;
  bool insertion = true;
};

/// The tableaux P_0 .. P_2n visited by the forward map, and the box each step
/// added or removed.
struct BijectionTrace {
  std::vector<Tableau> tableaux;
  std::vector<BijectionStep> steps;
};

std::pair<OscillatingTableau, BijectionTrace> matching_to_oscillating(const Matching& m);

Matching oscillating_to_matching(const OscillatingTableau& t);

OscillatingTableau conjugate_oscillating(const OscillatingTableau& t);

/// T^{-1}(T(m)'), the involution that exchanges descents and ascents
/// away from the up-down and down-up positions.
Matching conjugate_matching(const Matching& m);

/// Shape pattern at position i, read from lambda_{i-1}, lambda_i, lambda_{i+1}.
enum class PositionCase : int {
  kUpDown = 1,
  kDownUp = 2,
  kUpUpLower = 3,     // second added box in a strictly lower row
  kUpUpHigher = 4,    // second added box weakly higher
  kDownDownLower = 5, // first removed box in a strictly lower row
  kDownDownHigher = 6,
};

PositionCase classify_position(const OscillatingTableau& t, int i);

/// Cases 1, 3 and 5 are exactly the descent positions.
inline bool is_descent_case(PositionCase c) {
  return c == PositionCase::kUpDown || c == PositionCase::kUpUpLower ||
         c == PositionCase::kDownDownLower;
}

}  // namespace matchstat
