#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace matchstat {

using BigInt = mpz_class;

/// A fixed-point-free involution of {1, ..., 2n}.
///
/// Positions and values are 1-indexed on every public accessor. Instances
/// are always valid: construction goes through a validating factory.
class Matching {
 public:
  using Pair = std::pair<int, int>;

  /// Builds a matching from its blocks. Pairs may appear in any order and
  /// with either orientation; a == b, repeats, gaps and out-of-range values
  /// raise ValidationError naming the offending element.
  static Matching from_pairs(std::span<const Pair> pairs);

  /// Builds a matching from one-line notation (partner of 1, 2, ..., 2n).
  static Matching from_one_line(std::span<const int> one_line);

  /// Parses the canonical text form "a-b,c-d,...". Unsorted input is accepted.
  static Matching parse(std::string_view text);

  int n() const noexcept { return static_cast<int>(partner_.size() / 2); }
  int size() const noexcept { return static_cast<int>(partner_.size()); }

  int partner(int position) const { return partner_.at(position - 1); }
  const std::vector<int>& one_line() const noexcept { return partner_; }

  /// Blocks (a, b) with a < b, sorted by a.
  std::vector<Pair> pairs() const;

  /// Canonical text form, e.g. "1-4,2-3,5-6".
  std::string to_string() const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  friend class MatchingSampler;
  explicit Matching(std::vector<int> partner) : partner_(std::move(partner)) {}

  std::vector<int> partner_;
};

struct DescentStats {
  std::vector<int> des_set;
  int descent_count = 0;
  int descent_number = 0;  // descent_count + 1
  std::int64_t major_index = 0;
};

DescentStats descent_stats(const Matching& m);

/// Calls `visit` once per matching of {1..2n}. Order: the smallest unmatched
/// element is paired with each larger unmatched element in increasing order,
/// recursively.
void for_each_matching(int n, const std::function<void(const Matching&)>& visit);

std::vector<Matching> enumerate_matchings(int n);

/// Draws uniform matchings of {1..2n} from a single (seed, stream) sequence.
/// The smallest unmatched element is paired with a uniformly chosen other
/// unmatched element until none remain.
class MatchingSampler {
 public:
  MatchingSampler(int n, std::uint64_t seed, std::uint64_t stream);

  Matching next();

 private:
  void draw();

  int n_;
  std::mt19937_64 engine_;
  std::vector<int> partner_;
  std::vector<int> pool_;
  std::vector<int> slot_;
};

/// First draw of MatchingSampler(n, seed, stream).
Matching sample_uniform(int n, std::uint64_t seed, std::uint64_t stream);

/// Product of odd integers from m down to 1, with (-1)!! = 1.
BigInt double_factorial(long long m);

}  // namespace matchstat
