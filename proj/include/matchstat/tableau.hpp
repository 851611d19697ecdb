#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace matchstat {

/// Integer partition as a weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws ValidationError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Parses "(a,b,...)" or "()".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  /// Length of 1-indexed row r; 0 past the last row.
  int row_length(int r) const noexcept {
    return r >= 1 && r <= rows() ? parts_[r - 1] : 0;
  }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate_partition(const Partition& p);

/// A cell of a Young diagram; row 1 is the top row, column 1 the leftmost.
struct Box {
  int row = 1;
  int col = 1;
  friend bool operator==(const Box&, const Box&) = default;
};

/// If `larger` is `smaller` plus one box, returns that box; otherwise throws
/// ValidationError.
Box added_box(const Partition& smaller, const Partition& larger);

/// Rows weakly increasing, columns strictly increasing, row lengths weakly
/// decreasing.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  bool empty() const noexcept { return rows_.empty(); }
  int size() const noexcept;
  Partition shape() const;
  /// Entry at a 1-indexed box; the box must lie in the shape.
  int at(Box b) const { return rows_.at(b.row - 1).at(b.col - 1); }

  /// One row per line, entries separated by single spaces.
  std::string to_string() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  friend struct TableauEditor;
  std::vector<std::vector<int>> rows_;
};

struct BumpingRoute {
  std::vector<Box> boxes;  // one per row touched, rows 1, 2, ...
  Box new_box;
};

struct InsertResult {
  Tableau tableau;
  BumpingRoute route;
};

struct EjectResult {
  Tableau tableau;
  int ejected = 0;
};

struct SlideResult {
  Tableau tableau;
  Box vacated;
};

InsertResult row_insert(const Tableau& t, int x);

/// Inverse of row_insert. `corner` must be a removable corner of t's shape.
EjectResult reverse_row_insert(const Tableau& t, Box corner);

/// Removes the entry at (1,1) and slides the hole out to an outer corner.
SlideResult delete_min_and_slide(const Tableau& t);

/// Inverse of delete_min_and_slide: opens a hole at the addable `corner`,
/// slides it back to (1,1) and writes `v` there. `v` must be strictly smaller
/// than every entry of t.
Tableau reverse_slide_and_place_min(const Tableau& t, Box corner, int v);

}  // namespace matchstat
