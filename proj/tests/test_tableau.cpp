#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "matchstat/errors.hpp"
#include "matchstat/tableau.hpp"

using namespace matchstat;

namespace {

using Rows = std::vector<std::vector<int>>;

// Standard tableau built by inserting a random permutation of {lo..lo+size-1}.
Tableau random_distinct_tableau(std::mt19937& rng, int size, int lo) {
  std::vector<int> values(size);
  std::iota(values.begin(), values.end(), lo);
  std::shuffle(values.begin(), values.end(), rng);
  Tableau t;
  for (int v : values) t = row_insert(t, v).tableau;
  return t;
}

std::vector<Box> removable_corners(const Partition& p) {
  std::vector<Box> out;
  for (int r = 1; r <= p.rows(); ++r) {
    if (p.row_length(r + 1) < p.row_length(r)) out.push_back({r, p.row_length(r)});
  }
  return out;
}

std::vector<Box> addable_corners(const Partition& p) {
  std::vector<Box> out;
  for (int r = 1; r <= p.rows() + 1; ++r) {
    if (r == 1 || p.row_length(r - 1) > p.row_length(r)) {
      out.push_back({r, p.row_length(r) + 1});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("partition validation, parsing and rendering") {
  CHECK(Partition{}.to_string() == "()");
  CHECK(Partition({2, 1}).to_string() == "(2,1)");
  CHECK(Partition::parse("(3,1,1)") == Partition({3, 1, 1}));
  CHECK(Partition::parse("()") == Partition{});
  CHECK_THROWS_AS(Partition({1, 2}), ValidationError);
  CHECK_THROWS_AS(Partition({2, 0}), ValidationError);
  CHECK_THROWS_AS(Partition::parse("(1,)"), ValidationError);
  CHECK_THROWS_AS(Partition::parse("1,1"), ValidationError);
}

TEST_CASE("conjugate_partition") {
  CHECK(conjugate_partition(Partition{}) == Partition{});
  CHECK(conjugate_partition(Partition({1, 1})) == Partition({2}));
  CHECK(conjugate_partition(Partition({2, 1})) == Partition({2, 1}));
  CHECK(conjugate_partition(Partition({4, 2, 1})) == Partition({3, 2, 1, 1}));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> len(0, 8), part(1, 9);
    std::vector<int> parts(len(rng));
    for (int& p : parts) p = part(rng);
    std::sort(parts.rbegin(), parts.rend());
    const Partition p(parts);
    const auto c = conjugate_partition(p);
    CHECK(conjugate_partition(c) == p);
    CHECK(c.size() == p.size());
  }
}

TEST_CASE("tableau validation") {
  CHECK_NOTHROW(Tableau(Rows{{1, 1, 2}, {2, 3}}));
  CHECK_THROWS_AS(Tableau(Rows{{2, 1}}), ValidationError);
  CHECK_THROWS_AS(Tableau(Rows{{1, 2}, {2, 3}, {3, 3}}), ValidationError);
  CHECK_THROWS_AS(Tableau(Rows{{1, 2}, {1}}), ValidationError);
  CHECK_THROWS_AS(Tableau(Rows{{1}, {2, 3}}), ValidationError);
  CHECK(Tableau(Rows{{3, 5}, {4}}).to_string() == "3 5\n4\n");
}

TEST_CASE("row_insert worked examples") {
  auto first = row_insert(Tableau{}, 4);
  CHECK(first.tableau == Tableau(Rows{{4}}));
  CHECK(first.route.new_box == Box{1, 1});

  auto second = row_insert(first.tableau, 3);
  CHECK(second.tableau == Tableau(Rows{{3}, {4}}));
  CHECK(second.route.boxes == std::vector<Box>{{1, 1}, {2, 1}});
  CHECK(second.route.new_box == Box{2, 1});

  auto third = row_insert(second.tableau, 5);
  CHECK(third.tableau == Tableau(Rows{{3, 5}, {4}}));
  CHECK(third.route.new_box == Box{1, 2});

  // Equal entries are not bumped: 2 lands after the existing 2.
  auto weak = row_insert(Tableau(Rows{{1, 2, 3}}), 2);
  CHECK(weak.tableau == Tableau(Rows{{1, 2, 2}, {3}}));
}

TEST_CASE("reverse_row_insert worked examples") {
  auto a = reverse_row_insert(Tableau(Rows{{3}, {4}}), {2, 1});
  CHECK(a.tableau == Tableau(Rows{{4}}));
  CHECK(a.ejected == 3);

  auto b = reverse_row_insert(Tableau(Rows{{4}}), {1, 1});
  CHECK(b.tableau.empty());
  CHECK(b.ejected == 4);

  auto c = reverse_row_insert(Tableau(Rows{{3, 5}, {4}}), {1, 2});
  CHECK(c.tableau == Tableau(Rows{{3}, {4}}));
  CHECK(c.ejected == 5);

  CHECK_THROWS_AS(reverse_row_insert(Tableau(Rows{{3, 5}, {4}}), {1, 1}), DomainError);
  CHECK_THROWS_AS(reverse_row_insert(Tableau(Rows{{3, 5}, {4}}), {3, 1}), DomainError);
}

TEST_CASE("delete_min_and_slide worked examples") {
  auto a = delete_min_and_slide(Tableau(Rows{{3}, {4}}));
  CHECK(a.tableau == Tableau(Rows{{4}}));
  CHECK(a.vacated == Box{2, 1});

  auto b = delete_min_and_slide(Tableau(Rows{{4}}));
  CHECK(b.tableau.empty());
  CHECK(b.vacated == Box{1, 1});

  // 5 (right) beats 6 (below) into the hole; the hole then exits at (1,2).
  // Frozen after the round-trip property below passed.
  auto c = delete_min_and_slide(Tableau(Rows{{2, 5}, {6}}));
  CHECK(c.tableau == Tableau(Rows{{5}, {6}}));
  CHECK(c.vacated == Box{1, 2});
  CHECK(reverse_slide_and_place_min(c.tableau, c.vacated, 2) == Tableau(Rows{{2, 5}, {6}}));

  CHECK_THROWS_AS(delete_min_and_slide(Tableau{}), DomainError);
}

TEST_CASE("slide tie goes to the box below") {
  // Right and below neighbours are both 3.
  auto r = delete_min_and_slide(Tableau(Rows{{1, 3}, {3}}));
  CHECK(r.tableau == Tableau(Rows{{3, 3}}));
  CHECK(r.vacated == Box{2, 1});
}

TEST_CASE("reverse_slide_and_place_min worked examples") {
  CHECK(reverse_slide_and_place_min(Tableau(Rows{{4}}), {2, 1}, 3) ==
        Tableau(Rows{{3}, {4}}));
  CHECK(reverse_slide_and_place_min(Tableau{}, {1, 1}, 4) == Tableau(Rows{{4}}));
  CHECK(reverse_slide_and_place_min(Tableau(Rows{{4}}), {1, 2}, 3) ==
        Tableau(Rows{{3, 4}}));

  CHECK_THROWS_AS(reverse_slide_and_place_min(Tableau(Rows{{4}}), {2, 2}, 3), DomainError);
  CHECK_THROWS_AS(reverse_slide_and_place_min(Tableau(Rows{{4}}), {1, 1}, 3), DomainError);
  CHECK_THROWS_AS(reverse_slide_and_place_min(Tableau(Rows{{4}}), {2, 1}, 4), DomainError);
}

TEST_CASE("row_insert keeps tableau invariants and grows by one box") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> value(1, 12);
  for (int trial = 0; trial < 300; ++trial) {
    Tableau t;
    for (int step = 0; step < 25; ++step) {
      const auto before = t.shape();
      auto r = row_insert(t, value(rng));
      REQUIRE_NOTHROW(Tableau(r.tableau.rows()));
      CHECK(added_box(before, r.tableau.shape()) == r.route.new_box);
      CHECK(r.route.boxes.back() == r.route.new_box);
      for (std::size_t k = 0; k < r.route.boxes.size(); ++k) {
        CHECK(r.route.boxes[k].row == static_cast<int>(k) + 1);
      }
      t = std::move(r.tableau);
    }
  }
}

TEST_CASE("row insertion round trips") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> value(1, 15);
  for (int trial = 0; trial < 400; ++trial) {
    Tableau t;
    const int size = std::uniform_int_distribution<int>(0, 20)(rng);
    for (int i = 0; i < size; ++i) t = row_insert(t, value(rng)).tableau;

    const int x = value(rng);
    const auto inserted = row_insert(t, x);
    const auto back = reverse_row_insert(inserted.tableau, inserted.route.new_box);
    CHECK(back.tableau == t);
    CHECK(back.ejected == x);

    if (t.empty()) continue;
    const auto corners = removable_corners(t.shape());
    const Box corner = corners[rng() % corners.size()];
    const auto ejected = reverse_row_insert(t, corner);
    const auto again = row_insert(ejected.tableau, ejected.ejected);
    CHECK(again.tableau == t);
    CHECK(again.route.new_box == corner);
  }
}

TEST_CASE("sliding round trips on tableaux with distinct entries") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const int size = std::uniform_int_distribution<int>(1, 30)(rng);
    const Tableau t = random_distinct_tableau(rng, size, 10);
    const auto slid = delete_min_and_slide(t);
    REQUIRE_NOTHROW(Tableau(slid.tableau.rows()));
    CHECK(slid.tableau.size() == t.size() - 1);
    CHECK(reverse_slide_and_place_min(slid.tableau, slid.vacated, 10) == t);

    const auto corners = addable_corners(slid.tableau.shape());
    const Box corner = corners[rng() % corners.size()];
    const auto placed = reverse_slide_and_place_min(slid.tableau, corner, 5);
    REQUIRE_NOTHROW(Tableau(placed.rows()));
    const auto undone = delete_min_and_slide(placed);
    CHECK(undone.tableau == slid.tableau);
    CHECK(undone.vacated == corner);
  }
}

TEST_CASE("added_box rejects shapes that are not one box apart") {
  CHECK(added_box(Partition({1}), Partition({1, 1})) == Box{2, 1});
  CHECK_THROWS_AS(added_box(Partition({2}), Partition({1, 1, 1})), ValidationError);
  CHECK_THROWS_AS(added_box(Partition({1}), Partition({3})), ValidationError);
}
