#include "matchstat/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>

#include "matchstat/errors.hpp"

namespace matchstat {

namespace {

std::string box_string(Box b) {
  return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

bool is_removable_corner(const Partition& shape, Box b) {
  return b.row >= 1 && b.row <= shape.rows() && b.col == shape.row_length(b.row) &&
         shape.row_length(b.row + 1) < b.col;
}

bool is_addable_corner(const Partition& shape, Box b) {
  if (b.row < 1 || b.col < 1) return false;
  if (shape.row_length(b.row) != b.col - 1) return false;
  return b.row == 1 || shape.row_length(b.row - 1) >= b.col;
}

}  // namespace

// Unchecked row access for the algorithms in this file.
struct TableauEditor {
  static std::vector<std::vector<int>>& rows(Tableau& t) { return t.rows_; }
};

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) {
      throw ValidationError("partition parts must be positive; got " +
                            std::to_string(parts_[k]));
    }
    if (k > 0 && parts_[k] > parts_[k - 1]) {
      throw ValidationError("partition parts must be weakly decreasing: " +
                            to_string());
    }
  }
}

Partition Partition::parse(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  if (trimmed.size() < 2 || trimmed.front() != '(' || trimmed.back() != ')') {
    throw ValidationError("malformed partition '" + std::string(text) + "'");
  }
  trimmed = trimmed.substr(1, trimmed.size() - 2);
  std::vector<int> parts;
  while (!trimmed.empty()) {
    const auto comma = trimmed.find(',');
    const auto token = trimmed.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ValidationError("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    trimmed.remove_prefix(comma + 1);
    if (trimmed.empty()) {
      throw ValidationError("malformed partition '" + std::string(text) + "'");
    }
  }
  return Partition(std::move(parts));
}

int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out + ")";
}

Partition conjugate_partition(const Partition& p) {
  std::vector<int> parts;
  const int width = p.row_length(1);
  for (int c = 1; c <= width; ++c) {
    int height = 0;
    while (p.row_length(height + 1) >= c) ++height;
    parts.push_back(height);
  }
  return Partition(std::move(parts));
}

Box added_box(const Partition& smaller, const Partition& larger) {
  if (larger.size() != smaller.size() + 1) {
    throw ValidationError("shapes " + smaller.to_string() + " and " +
                          larger.to_string() + " do not differ by one box");
  }
  const int rows = std::max(smaller.rows(), larger.rows());
  std::optional<Box> found;
  for (int r = 1; r <= rows; ++r) {
    const int diff = larger.row_length(r) - smaller.row_length(r);
    if (diff == 0) continue;
    if (diff != 1 || found) {
      throw ValidationError("shape " + smaller.to_string() + " is not contained in " +
                            larger.to_string());
    }
    found = Box{r, larger.row_length(r)};
  }
  return *found;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw ValidationError("tableau rows must be nonempty");
    if (r > 0 && row.size() > rows_[r - 1].size()) {
      throw ValidationError("tableau row lengths must be weakly decreasing");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1) throw ValidationError("tableau entries must be positive");
      if (c > 0 && row[c] < row[c - 1]) {
        throw ValidationError("tableau rows must be weakly increasing");
      }
      if (r > 0 && row[c] <= rows_[r - 1][c]) {
        throw ValidationError("tableau columns must be strictly increasing");
      }
    }
  }
}

int Tableau::size() const noexcept {
  int total = 0;
  for (const auto& row : rows_) total += static_cast<int>(row.size());
  return total;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

std::string Tableau::to_string() const {
  std::ostringstream out;
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ' ';
      out << row[c];
    }
    out << '\n';
  }
  return out.str();
}

InsertResult row_insert(const Tableau& t, int x) {
  if (x < 1) throw DomainError("inserted value must be positive");
  InsertResult result{t, {}};
  auto& rows = TableauEditor::rows(result.tableau);
  int carry = x;
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) rows.emplace_back();
    auto& row = rows[r];
    const auto it = std::upper_bound(row.begin(), row.end(), carry);
    const Box here{static_cast<int>(r) + 1, static_cast<int>(it - row.begin()) + 1};
    result.route.boxes.push_back(here);
    if (it == row.end()) {
      row.push_back(carry);
      result.route.new_box = here;
      return result;
    }
    std::swap(*it, carry);
  }
}

EjectResult reverse_row_insert(const Tableau& t, Box corner) {
  if (!is_removable_corner(t.shape(), corner)) {
    throw DomainError("box " + box_string(corner) + " is not a removable corner");
  }
  EjectResult result{t, 0};
  auto& rows = TableauEditor::rows(result.tableau);
  auto& last = rows[corner.row - 1];
  int carry = last.back();
  last.pop_back();
  if (last.empty()) rows.pop_back();
  for (int r = corner.row - 1; r >= 1; --r) {
    auto& row = rows[r - 1];
    // Rightmost entry strictly smaller than the carried value.
    auto it = std::lower_bound(row.begin(), row.end(), carry);
    std::swap(*std::prev(it), carry);
  }
  result.ejected = carry;
  return result;
}

SlideResult delete_min_and_slide(const Tableau& t) {
  if (t.empty()) throw DomainError("cannot delete from an empty tableau");
  SlideResult result{t, {}};
  auto& rows = TableauEditor::rows(result.tableau);
  auto length = [&](int r) {
    return r <= static_cast<int>(rows.size()) ? static_cast<int>(rows[r - 1].size())
                                              : 0;
  };
  Box hole{1, 1};
  while (true) {
    const bool has_right = hole.col + 1 <= length(hole.row);
    const bool has_below = hole.col <= length(hole.row + 1);
    if (!has_right && !has_below) break;
    bool take_below = has_below;
    if (has_right && has_below) {
      // Ties go to the box below.
      take_below = rows[hole.row][hole.col - 1] <= rows[hole.row - 1][hole.col];
    }
    const Box from = take_below ? Box{hole.row + 1, hole.col} : Box{hole.row, hole.col + 1};
    rows[hole.row - 1][hole.col - 1] = rows[from.row - 1][from.col - 1];
    hole = from;
  }
  rows[hole.row - 1].pop_back();
  if (rows[hole.row - 1].empty()) rows.pop_back();
  result.vacated = hole;
  return result;
}

Tableau reverse_slide_and_place_min(const Tableau& t, Box corner, int v) {
  if (!is_addable_corner(t.shape(), corner)) {
    throw DomainError("box " + box_string(corner) + " is not an addable corner");
  }
  for (const auto& row : t.rows()) {
    for (int entry : row) {
      if (entry <= v) {
        throw DomainError("value " + std::to_string(v) +
                          " is not strictly below entry " + std::to_string(entry));
      }
    }
  }
  Tableau result = t;
  auto& rows = TableauEditor::rows(result);
  if (corner.row > static_cast<int>(rows.size())) rows.emplace_back();
  rows[corner.row - 1].push_back(0);
  Box hole = corner;
  while (hole.row > 1 || hole.col > 1) {
    const bool has_up = hole.row > 1;
    const bool has_left = hole.col > 1;
    bool take_up = has_up;
    if (has_up && has_left) {
      // Ties go to the box above, mirroring the forward rule.
      take_up = rows[hole.row - 2][hole.col - 1] >= rows[hole.row - 1][hole.col - 2];
    }
    const Box from = take_up ? Box{hole.row - 1, hole.col} : Box{hole.row, hole.col - 1};
    rows[hole.row - 1][hole.col - 1] = rows[from.row - 1][from.col - 1];
    hole = from;
  }
  rows[0][0] = v;
  return result;
}

}  // namespace matchstat
