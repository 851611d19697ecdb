#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "matchstat/matching.hpp"
#include "matchstat/moments.hpp"

namespace matchstat {

/// Largest n for the exact-coefficient pipelines (generating function,
/// exact distribution, MGF, exact KS).
inline constexpr int kExactBudget = 1000;
/// Largest n accepted by lemma41_lhs.
inline constexpr int kLemmaBudget = 1000;

BigInt binomial(const BigInt& a, unsigned long b);

/// coeffs[m] = number of matchings of {1..2n} with exactly m descents,
/// for m = 0 .. 2n-1.
struct DescentPolynomial {
  int n = 0;
  std::vector<BigInt> coeffs;

  BigInt total() const;
  friend bool operator==(const DescentPolynomial&, const DescentPolynomial&) = default;
};

DescentPolynomial polynomial_by_enumeration(int n);

/// Coefficients of t^0 .. t^max_degree in
///   (1-t)^(2n+1) * sum_k C(k(k+1)/2 + n - 1, n) t^k.
/// Exposed separately so the vanishing of degrees 2n and 2n+1 can be checked.
std::vector<BigInt> gf_coefficients(int n, int max_degree);

/// Descent polynomial from the generating function; asserts that the
/// coefficients of t^(2n) and t^(2n+1) vanish.
DescentPolynomial polynomial_by_gf(int n);

/// (m, c_m / (2n-1)!!) for every m with c_m > 0, increasing in m.
std::vector<std::pair<int, Rational>> exact_distribution(int n);

/// Moment generating function of W_n = (D_n - n) / sqrt(n) at s.
double mgf_Wn(int n, double s);

struct MgfEntry {
  int n = 0;
  double s = 0;
  double mgf_value = 0;
  double target = 0;  // exp(s^2 / 12)
  double abs_error = 0;
};

struct MgfReport {
  std::vector<MgfEntry> entries;
  /// max over entries of |M(s) - M(-s)|.
  double max_evenness_gap = 0;
  /// Every gap within kEvennessTolerance * max(1, M(s)).
  bool evenness_ok = true;
};

inline constexpr double kEvennessTolerance = 1e-12;

MgfReport mgf_convergence_report(const std::vector<int>& n_list,
                                 const std::vector<double>& s_list);

/// (s/sqrt n)^(2n+1)/(2n)! * sum_{k>=0} prod_{j<n}(k^2+k+2j) e^{-ks/sqrt n},
/// summed in log space. The sum starts with k_max terms and doubles until the
/// last term is past the peak with scaled log-magnitude below -40.
double lemma41_lhs(int n, double s, long long k_max = 64);

struct CltReport {
  int n = 0;
  long long num_samples = 0;
  std::uint64_t seed = 0;
  double sample_mean_W = 0;
  double sample_var_W = 0;  // unbiased; 0 for a single sample
  double ks_distance = 0;
  double target_var = 1.0 / 6.0;
};

/// Samples per RNG stream in clt_experiment; chunk c uses stream c, so the
/// result does not depend on the worker count.
inline constexpr long long kSamplesPerStream = 4096;

/// `workers` = 0 picks worker_count().
CltReport clt_experiment(int n, long long num_samples, std::uint64_t seed,
                         int workers = 0);

/// Kolmogorov-Smirnov distance from the exact law of W_n to N(0, 1/6).
double exact_ks_distance(int n);

/// CDF of N(0, variance) at x.
double normal_cdf(double x, double variance);

/// Hardware concurrency, capped by MATCHSTAT_THREADS when set and positive.
int worker_count();

}  // namespace matchstat
