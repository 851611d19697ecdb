#include "matchstat/moments.hpp"

#include "matchstat/errors.hpp"
#include "matchstat/matching.hpp"

namespace matchstat {

Rational make_rational(long long numerator, long long denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  Rational q(mpz_class(std::to_string(numerator)),
             mpz_class(std::to_string(denominator)));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

const std::vector<MomentField>& moment_fields() {
  static const std::vector<MomentField> fields = {
      {"p_descent", &MomentReport::p_descent, nullptr},
      {"p_joint_adjacent", &MomentReport::p_joint_adjacent,
       &MomentReport::joint_adjacent_valid},
      {"p_joint_nonadjacent", &MomentReport::p_joint_nonadjacent,
       &MomentReport::joint_nonadjacent_valid},
      {"mean_d", &MomentReport::mean_d, nullptr},
      {"second_moment_d", &MomentReport::second_moment_d,
       &MomentReport::variance_valid},
      {"var_d", &MomentReport::var_d, &MomentReport::variance_valid},
      {"mean_maj", &MomentReport::mean_maj, nullptr},
      {"second_moment_maj", &MomentReport::second_moment_maj,
       &MomentReport::variance_valid},
      {"var_maj", &MomentReport::var_maj, &MomentReport::variance_valid},
  };
  return fields;
}

bool field_valid(const MomentReport& report, const MomentField& field) {
  return field.valid == nullptr || report.*field.valid;
}

MomentReport closed_form_moments(int n) {
  if (n < 1) throw DomainError("n must be positive");
  const long long m = n;
  MomentReport r;
  r.n = n;
  r.p_descent = make_rational(m, 2 * m - 1);
  r.p_joint_adjacent = make_rational(m + 1, 3 * (2 * m - 1));
  // 2n - 3 vanishes only at n = 3/2, so this is defined for every n >= 1.
  r.p_joint_nonadjacent = make_rational(m * (m - 1), (2 * m - 1) * (2 * m - 3));
  r.mean_d = make_rational(m + 1, 1);
  r.second_moment_d =
      make_rational(6 * m * m * m + 10 * m * m + 3 * m - 7, 3 * (2 * m - 1));
  r.var_d = make_rational((m + 4) * (m - 1), 3 * (2 * m - 1));
  r.mean_maj = make_rational(m * m, 1);
  r.second_moment_maj =
      make_rational(9 * m * m * m * m + 2 * m * m * m + 6 * m * m - 8 * m, 9);
  r.var_maj = make_rational(2 * m * (m + 4) * (m - 1), 9);
  r.joint_adjacent_valid = n >= 3;
  r.joint_nonadjacent_valid = n >= 4;
  r.variance_valid = n >= 4;
  return r;
}

MomentReport brute_force_moments(int n) {
  if (n < 1) throw DomainError("n must be positive");
  if (n > kEnumerationBudget) throw BudgetExceeded("n", n, kEnumerationBudget);

  const int positions = 2 * n - 1;
  mpz_class count = 0;
  mpz_class sum_d = 0, sum_d2 = 0, sum_maj = 0, sum_maj2 = 0;
  mpz_class descents = 0, adjacent_hits = 0, nonadjacent_hits = 0;

  for_each_matching(n, [&](const Matching& m) {
    const DescentStats s = descent_stats(m);
    std::vector<char> is_descent(positions + 2, 0);
    for (int i : s.des_set) is_descent[i] = 1;

    count += 1;
    sum_d += s.descent_number;
    sum_d2 += static_cast<long>(s.descent_number) * s.descent_number;
    sum_maj += static_cast<long>(s.major_index);
    sum_maj2 += static_cast<long>(s.major_index * s.major_index);
    descents += s.descent_count;
    for (int i = 1; i <= positions; ++i) {
      if (!is_descent[i]) continue;
      if (is_descent[i + 1]) adjacent_hits += 1;
      for (int j = i + 2; j <= positions; ++j) {
        if (is_descent[j]) nonadjacent_hits += 1;
      }
    }
  });

  const long adjacent_pairs = positions - 1;
  const long nonadjacent_pairs =
      static_cast<long>(positions) * (positions - 1) / 2 - adjacent_pairs;

  MomentReport r;
  r.n = n;
  r.mean_d = Rational(sum_d, count);
  r.second_moment_d = Rational(sum_d2, count);
  r.mean_maj = Rational(sum_maj, count);
  r.second_moment_maj = Rational(sum_maj2, count);
  r.p_descent = Rational(descents, count * positions);
  for (Rational* q : {&r.mean_d, &r.second_moment_d, &r.mean_maj,
                      &r.second_moment_maj, &r.p_descent}) {
    q->canonicalize();
  }
  r.var_d = r.second_moment_d - r.mean_d * r.mean_d;
  r.var_maj = r.second_moment_maj - r.mean_maj * r.mean_maj;

  r.joint_adjacent_valid = adjacent_pairs > 0;
  if (r.joint_adjacent_valid) {
    r.p_joint_adjacent = Rational(adjacent_hits, count * adjacent_pairs);
    r.p_joint_adjacent.canonicalize();
  }
  r.joint_nonadjacent_valid = nonadjacent_pairs > 0;
  if (r.joint_nonadjacent_valid) {
    r.p_joint_nonadjacent = Rational(nonadjacent_hits, count * nonadjacent_pairs);
    r.p_joint_nonadjacent.canonicalize();
  }
  return r;
}

}  // namespace matchstat
