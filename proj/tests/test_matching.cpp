#include <map>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "matchstat/errors.hpp"
#include "matchstat/matching.hpp"

using namespace matchstat;

namespace {

Matching from(std::initializer_list<Matching::Pair> pairs) {
  std::vector<Matching::Pair> v(pairs);
  return Matching::from_pairs(v);
}

}  // namespace

TEST_CASE("from_pairs builds one-line notation") {
  CHECK(from({{1, 2}}).one_line() == std::vector<int>{2, 1});
  CHECK(from({{1, 4}, {2, 3}, {5, 6}}).one_line() == std::vector<int>{4, 3, 2, 1, 6, 5});
  // Orientation and order of pairs do not matter.
  CHECK(from({{6, 5}, {3, 2}, {1, 4}}) == from({{1, 4}, {2, 3}, {5, 6}}));
}

TEST_CASE("from_pairs rejects malformed blocks and names the element") {
  CHECK_THROWS_WITH_AS(from({{1, 3}, {2, 3}}), doctest::Contains("element 3 repeated"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(from({{1, 1}}), doctest::Contains("element 1"), ValidationError);
  CHECK_THROWS_WITH_AS(from({{1, 2}, {3, 5}}), doctest::Contains("element 5"),
                       ValidationError);
  CHECK_THROWS_AS(from({{0, 1}}), ValidationError);
  CHECK_THROWS_AS(Matching::from_pairs(std::vector<Matching::Pair>{}), ValidationError);
}

TEST_CASE("from_one_line validates the involution") {
  CHECK_NOTHROW(Matching::from_one_line(std::vector<int>{2, 1, 4, 3}));
  CHECK_THROWS_AS(Matching::from_one_line(std::vector<int>{1, 2}), ValidationError);
  CHECK_THROWS_AS(Matching::from_one_line(std::vector<int>{2, 3, 1, 4}), ValidationError);
  CHECK_THROWS_AS(Matching::from_one_line(std::vector<int>{2, 1, 3}), ValidationError);
}

TEST_CASE("text format parses unsorted input and emits canonically") {
  const auto m = Matching::parse("5-6,3-2,1-4");
  CHECK(m.to_string() == "1-4,2-3,5-6");
  CHECK(Matching::parse("1-2").to_string() == "1-2");
  CHECK_THROWS_WITH_AS(Matching::parse("1-1"), doctest::Contains("element 1"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(Matching::parse("1-x"), doctest::Contains("'x'"), ValidationError);
  CHECK_THROWS_WITH_AS(Matching::parse("1-2,34"), doctest::Contains("'34'"),
                       ValidationError);
  CHECK_THROWS_AS(Matching::parse(""), ValidationError);
}

TEST_CASE("text format round-trips random matchings") {
  for (std::uint64_t stream = 0; stream < 200; ++stream) {
    const auto m = sample_uniform(1 + static_cast<int>(stream % 40), 11, stream);
    CHECK(Matching::parse(m.to_string()) == m);
  }
}

TEST_CASE("descent_stats on worked examples") {
  auto s = descent_stats(from({{1, 4}, {2, 3}, {5, 6}}));
  CHECK(s.des_set == std::vector<int>{1, 2, 3, 5});
  CHECK(s.descent_count == 4);
  CHECK(s.descent_number == 5);
  CHECK(s.major_index == 11);

  s = descent_stats(from({{1, 3}, {2, 4}, {5, 6}}));
  CHECK(s.des_set == std::vector<int>{2, 5});
  CHECK(s.descent_number == 3);
  CHECK(s.major_index == 7);

  s = descent_stats(from({{1, 2}}));
  CHECK(s.des_set == std::vector<int>{1});
  CHECK(s.descent_number == 2);
  CHECK(s.major_index == 1);
}

TEST_CASE("descent set matches the pointwise definition") {
  for (std::uint64_t stream = 0; stream < 300; ++stream) {
    const auto m = sample_uniform(1 + static_cast<int>(stream % 25), 5, stream);
    const auto s = descent_stats(m);
    std::set<int> des(s.des_set.begin(), s.des_set.end());
    long long maj = 0;
    for (int i = 1; i < m.size(); ++i) {
      CHECK((des.count(i) == 1) == (m.partner(i) > m.partner(i + 1)));
      if (m.partner(i) > m.partner(i + 1)) maj += i;
    }
    CHECK(s.descent_number == s.descent_count + 1);
    CHECK(s.major_index == maj);
  }
}

TEST_CASE("enumeration of S_4 in the fixed order") {
  const auto all = enumerate_matchings(2);
  REQUIRE(all.size() == 3);
  CHECK(all[0].to_string() == "1-2,3-4");
  CHECK(all[1].to_string() == "1-3,2-4");
  CHECK(all[2].to_string() == "1-4,2-3");
  CHECK(enumerate_matchings(1).size() == 1);
  CHECK(enumerate_matchings(4).size() == 105);
}

TEST_CASE("enumeration counts equal (2n-1)!! and are distinct") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_matchings(n);
    CHECK(BigInt(static_cast<unsigned long>(all.size())) == double_factorial(2 * n - 1));
    std::set<std::vector<int>> distinct;
    for (const auto& m : all) distinct.insert(m.one_line());
    CHECK(distinct.size() == all.size());
    CHECK(std::is_sorted(all.begin(), all.end(), [](const Matching& a, const Matching& b) {
      return a.pairs() < b.pairs();
    }));
  }
}

TEST_CASE("descent number and major index are symmetric over all matchings") {
  for (int n = 1; n <= 5; ++n) {
    std::map<int, long> by_d;
    std::map<long long, long> by_maj;
    for_each_matching(n, [&](const Matching& m) {
      const auto s = descent_stats(m);
      ++by_d[s.descent_number];
      ++by_maj[s.major_index];
    });
    for (auto [d, count] : by_d) CHECK(by_d[2 * (n + 1) - d] == count);
    for (auto [maj, count] : by_maj) {
      CHECK(by_maj[2LL * n * n - maj] == count);
    }
  }
}

TEST_CASE("double_factorial") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(11) == 10395);
  CHECK_THROWS_AS(double_factorial(4), DomainError);
  CHECK_THROWS_AS(double_factorial(0), DomainError);
  CHECK_THROWS_AS(double_factorial(-3), DomainError);
}

TEST_CASE("sample_uniform determinism and streams") {
  CHECK(sample_uniform(1, 12345, 0).to_string() == "1-2");
  CHECK(sample_uniform(1, 999, 3).to_string() == "1-2");

  MatchingSampler a(2, 42, 0), b(2, 42, 0), c(2, 42, 1);
  std::vector<std::string> seq_a, seq_b, seq_c;
  for (int i = 0; i < 64; ++i) {
    seq_a.push_back(a.next().to_string());
    seq_b.push_back(b.next().to_string());
    seq_c.push_back(c.next().to_string());
  }
  CHECK(seq_a == seq_b);
  CHECK(seq_a != seq_c);
  CHECK(sample_uniform(30, 7, 2) == sample_uniform(30, 7, 2));
}

TEST_CASE("sample_uniform is uniform over S_6 matchings") {
  std::map<std::string, long> freq;
  MatchingSampler sampler(3, 20240601, 0);
  const long draws = 150000;
  for (long i = 0; i < draws; ++i) ++freq[sampler.next().to_string()];
  REQUIRE(freq.size() == 15);
  for (const auto& [m, count] : freq) {
    const double relative = static_cast<double>(count) / draws * 15.0;
    CHECK_MESSAGE(std::abs(relative - 1.0) <= 0.05, m << " relative " << relative);
  }
}
