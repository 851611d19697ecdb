#include "matchstat/sundaram.hpp"

#include <stdexcept>

#include "matchstat/errors.hpp"

namespace matchstat {

OscillatingTableau::OscillatingTableau(std::vector<Partition> shapes)
    : shapes_(std::move(shapes)) {
  if (shapes_.size() < 3) {
    throw ValidationError("oscillating tableau needs at least two steps");
  }
  if (!shapes_.front().empty() || !shapes_.back().empty()) {
    throw ValidationError("oscillating tableau must start and end at ()");
  }
  for (std::size_t i = 1; i < shapes_.size(); ++i) {
    const auto& prev = shapes_[i - 1];
    const auto& cur = shapes_[i];
    try {
      if (cur.size() > prev.size()) {
        added_box(prev, cur);
      } else {
        added_box(cur, prev);
      }
    } catch (const ValidationError& e) {
      throw ValidationError("step " + std::to_string(i) + ": " + e.what());
    }
  }
}

OscillatingTableau OscillatingTableau::parse(std::string_view text) {
  std::vector<Partition> shapes;
  while (true) {
    const auto semi = text.find(';');
    shapes.push_back(Partition::parse(text.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return OscillatingTableau(std::move(shapes));
}

std::string OscillatingTableau::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < shapes_.size(); ++i) {
    if (i > 0) out += ';';
    out += shapes_[i].to_string();
  }
  return out;
}

std::pair<OscillatingTableau, BijectionTrace> matching_to_oscillating(const Matching& m) {
  BijectionTrace trace;
  trace.tableaux.reserve(m.size() + 1);
  trace.steps.reserve(m.size());
  trace.tableaux.emplace_back();
  std::vector<Partition> shapes{Partition{}};

  for (int i = 1; i <= m.size(); ++i) {
    const Tableau& prev = trace.tableaux.back();
    const int j = m.partner(i);
    if (i < j) {
      auto inserted = row_insert(prev, j);
      trace.steps.push_back({inserted.route.new_box, true});
      trace.tableaux.push_back(std::move(inserted.tableau));
    } else {
      // Pending arcs are keyed by their larger endpoint, so i must be the
      // minimum of P_{i-1}.
      if (prev.empty() || prev.at({1, 1}) != i) {
        throw std::logic_error("element " + std::to_string(i) +
                               " is not the minimum of the tableau before its removal");
      }
      auto slid = delete_min_and_slide(prev);
      trace.steps.push_back({slid.vacated, false});
      trace.tableaux.push_back(std::move(slid.tableau));
    }
    shapes.push_back(trace.tableaux.back().shape());
  }
  return {OscillatingTableau(std::move(shapes)), std::move(trace)};
}

Matching oscillating_to_matching(const OscillatingTableau& t) {
  const int steps = t.length();
  if (steps % 2 != 0) {
    throw ValidationError("oscillating tableau of empty shape must have even length");
  }
  std::vector<int> partner(steps, 0);
  Tableau current;
  for (int i = steps; i >= 1; --i) {
    const Partition& before = t[i - 1];
    const Partition& after = t[i];
    if (after.size() > before.size()) {
      // Step i inserted i's partner; undo the insertion at the new box.
      auto ejected = reverse_row_insert(current, added_box(before, after));
      const int j = ejected.ejected;
      if (j <= i || j > steps || partner[j - 1] != 0) {
        throw std::logic_error("inverse bijection ejected an inconsistent value " +
                               std::to_string(j) + " at step " + std::to_string(i));
      }
      partner[i - 1] = j;
      partner[j - 1] = i;
      current = std::move(ejected.tableau);
    } else {
      // Step i removed i itself; slide it back in from the vacated box.
      current = reverse_slide_and_place_min(current, added_box(after, before), i);
    }
  }
  return Matching::from_one_line(partner);
}

OscillatingTableau conjugate_oscillating(const OscillatingTableau& t) {
  std::vector<Partition> shapes;
  shapes.reserve(t.shapes().size());
  for (const auto& p : t.shapes()) shapes.push_back(conjugate_partition(p));
  return OscillatingTableau(std::move(shapes));
}

Matching conjugate_matching(const Matching& m) {
  return oscillating_to_matching(conjugate_oscillating(matching_to_oscillating(m).first));
}

PositionCase classify_position(const OscillatingTableau& t, int i) {
  if (i < 1 || i >= t.length()) {
    throw DomainError("position " + std::to_string(i) + " outside 1.." +
                      std::to_string(t.length() - 1));
  }
  const Partition& a = t[i - 1];
  const Partition& b = t[i];
  const Partition& c = t[i + 1];
  const bool first_up = b.size() > a.size();
  const bool second_up = c.size() > b.size();
  if (first_up && !second_up) return PositionCase::kUpDown;
  if (!first_up && second_up) return PositionCase::kDownUp;
  if (first_up) {
    return added_box(b, c).row > added_box(a, b).row ? PositionCase::kUpUpLower
                                                     : PositionCase::kUpUpHigher;
  }
  return added_box(b, a).row > added_box(c, b).row ? PositionCase::kDownDownLower
                                                   : PositionCase::kDownDownHigher;
}

}  // namespace matchstat
