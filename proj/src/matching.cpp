#include "matchstat/matching.hpp"

#include <algorithm>
#include <charconv>

#include "matchstat/errors.hpp"

namespace matchstat {

namespace {

std::vector<int> validated_partners(std::vector<int> partner) {
  const int size = static_cast<int>(partner.size());
  if (size == 0 || size % 2 != 0) {
    throw ValidationError("matching must cover an even, nonempty set; got " +
                          std::to_string(size) + " elements");
  }
  for (int i = 1; i <= size; ++i) {
    const int p = partner[i - 1];
    if (p < 1 || p > size) {
      throw ValidationError("element " + std::to_string(p) +
                            " out of range 1.." + std::to_string(size));
    }
    if (p == i) {
      throw ValidationError("element " + std::to_string(i) +
                            " is matched with itself");
    }
    if (partner[p - 1] != i) {
      throw ValidationError("element " + std::to_string(p) +
                            " is not an involution partner of " +
                            std::to_string(i));
    }
  }
  return partner;
}

int parse_element(std::string_view token, std::string_view whole) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw ValidationError("malformed token '" + std::string(token) +
                          "' in matching '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Matching Matching::from_pairs(std::span<const Pair> pairs) {
  const int size = static_cast<int>(pairs.size()) * 2;
  if (size == 0) throw ValidationError("matching must contain at least one pair");
  std::vector<int> partner(size, 0);
  for (auto [a, b] : pairs) {
    if (a == b) {
      throw ValidationError("element " + std::to_string(a) +
                            " is paired with itself");
    }
    for (int e : {a, b}) {
      if (e < 1 || e > size) {
        throw ValidationError("element " + std::to_string(e) +
                              " out of range 1.." + std::to_string(size));
      }
      if (partner[e - 1] != 0) {
        throw ValidationError("element " + std::to_string(e) + " repeated");
      }
    }
    partner[a - 1] = b;
    partner[b - 1] = a;
  }
  // size/2 pairs of distinct elements in 1..size cover the range exactly.
  return Matching(std::move(partner));
}

Matching Matching::from_one_line(std::span<const int> one_line) {
  return Matching(validated_partners({one_line.begin(), one_line.end()}));
}

Matching Matching::parse(std::string_view text) {
  std::vector<Pair> pairs;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    const auto dash = token.find('-');
    if (dash == std::string_view::npos) {
      throw ValidationError("malformed token '" + std::string(token) +
                            "' in matching '" + std::string(text) +
                            "' (expected a-b)");
    }
    pairs.emplace_back(parse_element(token.substr(0, dash), text),
                       parse_element(token.substr(dash + 1), text));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return from_pairs(pairs);
}

std::vector<Matching::Pair> Matching::pairs() const {
  std::vector<Pair> out;
  out.reserve(partner_.size() / 2);
  for (int i = 1; i <= size(); ++i) {
    if (i < partner_[i - 1]) out.emplace_back(i, partner_[i - 1]);
  }
  return out;
}

std::string Matching::to_string() const {
  std::string out;
  for (auto [a, b] : pairs()) {
    if (!out.empty()) out += ',';
    out += std::to_string(a);
    out += '-';
    out += std::to_string(b);
  }
  return out;
}

DescentStats descent_stats(const Matching& m) {
  DescentStats stats;
  const auto& w = m.one_line();
  for (int i = 1; i < m.size(); ++i) {
    if (w[i - 1] > w[i]) {
      stats.des_set.push_back(i);
      stats.major_index += i;
    }
  }
  stats.descent_count = static_cast<int>(stats.des_set.size());
  stats.descent_number = stats.descent_count + 1;
  return stats;
}

void for_each_matching(int n, const std::function<void(const Matching&)>& visit) {
  if (n < 1) throw DomainError("n must be positive");
  std::vector<int> partner(2 * n, 0);

  // Pairs the smallest unmatched element with each larger unmatched one.
  auto recurse = [&](auto& self, int first_free) -> void {
    while (first_free <= 2 * n && partner[first_free - 1] != 0) ++first_free;
    if (first_free > 2 * n) {
      visit(Matching::from_one_line(partner));
      return;
    }
    for (int j = first_free + 1; j <= 2 * n; ++j) {
      if (partner[j - 1] != 0) continue;
      partner[first_free - 1] = j;
      partner[j - 1] = first_free;
      self(self, first_free + 1);
      partner[first_free - 1] = 0;
      partner[j - 1] = 0;
    }
  };
  recurse(recurse, 1);
}

std::vector<Matching> enumerate_matchings(int n) {
  std::vector<Matching> out;
  for_each_matching(n, [&](const Matching& m) { out.push_back(m); });
  return out;
}

MatchingSampler::MatchingSampler(int n, std::uint64_t seed, std::uint64_t stream)
    : n_(n) {
  if (n < 1) throw DomainError("n must be positive");
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
  partner_.resize(2 * n);
  pool_.resize(2 * n);
  slot_.resize(2 * n + 1);
}

void MatchingSampler::draw() {
  const int size = 2 * n_;
  std::fill(partner_.begin(), partner_.end(), 0);
  for (int v = 1; v <= size; ++v) {
    pool_[v - 1] = v;
    slot_[v] = v - 1;
  }
  int live = size;
  auto remove = [&](int v) {
    const int at = slot_[v];
    const int last = pool_[live - 1];
    pool_[at] = last;
    slot_[last] = at;
    --live;
  };
  for (int i = 1; i <= size; ++i) {
    if (partner_[i - 1] != 0) continue;
    remove(i);
    std::uniform_int_distribution<int> pick(0, live - 1);
    const int j = pool_[pick(engine_)];
    remove(j);
    partner_[i - 1] = j;
    partner_[j - 1] = i;
  }
}

Matching MatchingSampler::next() {
  draw();
  return Matching(partner_);
}

Matching sample_uniform(int n, std::uint64_t seed, std::uint64_t stream) {
  return MatchingSampler(n, seed, stream).next();
}

BigInt double_factorial(long long m) {
  if (m < -1 || (m >= 0 && m % 2 == 0)) {
    throw DomainError("double_factorial expects an odd m >= -1; got " +
                      std::to_string(m));
  }
  BigInt result = 1;
  for (long long k = 3; k <= m; k += 2) result *= static_cast<unsigned long>(k);
  return result;
}

}  // namespace matchstat
