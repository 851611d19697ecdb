#include "matchstat/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "matchstat/errors.hpp"

namespace matchstat {

namespace {

constexpr double kLn2 = 0.69314718055994530942;
// Largest argument for which exp() is finite in double precision.
constexpr double kMaxExpArgument = 709.78;

void require_positive(int n) {
  if (n < 1) throw DomainError("n must be positive; got " + std::to_string(n));
}

void require_exact_budget(int n) {
  require_positive(n);
  if (n > kExactBudget) throw BudgetExceeded("n", n, kExactBudget);
}

double log_of(const BigInt& x) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * kLn2;
}

}  // namespace

BigInt binomial(const BigInt& a, unsigned long b) {
  if (a < 0) throw DomainError("binomial expects a non-negative top argument");
  if (a < b) return 0;
  BigInt result = 1;
  const BigInt base = a - b;
  for (unsigned long i = 1; i <= b; ++i) {
    // result holds C(base + i - 1, i - 1) on entry.
    result *= base + i;
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
  }
  return result;
}

BigInt DescentPolynomial::total() const {
  BigInt sum = 0;
  for (const auto& c : coeffs) sum += c;
  return sum;
}

DescentPolynomial polynomial_by_enumeration(int n) {
  require_positive(n);
  if (n > kEnumerationBudget) throw BudgetExceeded("n", n, kEnumerationBudget);
  std::vector<long long> counts(2 * n, 0);
  for_each_matching(n, [&](const Matching& m) {
    ++counts[descent_stats(m).descent_count];
  });
  DescentPolynomial poly{n, {}};
  for (long long c : counts) poly.coeffs.emplace_back(std::to_string(c));
  return poly;
}

std::vector<BigInt> gf_coefficients(int n, int max_degree) {
  require_exact_budget(n);
  if (max_degree < 0) throw DomainError("max_degree must be non-negative");

  // (1-t)^(2n+1) = sum_j (-1)^j C(2n+1, j) t^j
  std::vector<BigInt> expansion(max_degree + 1);
  for (int j = 0; j <= max_degree; ++j) {
    expansion[j] = binomial(2 * n + 1, j);
    if (j % 2 == 1) expansion[j] = -expansion[j];
  }
  std::vector<BigInt> series(max_degree + 1);
  for (int k = 0; k <= max_degree; ++k) {
    const BigInt top = BigInt(k) * (k + 1) / 2 + n - 1;
    series[k] = binomial(top, static_cast<unsigned long>(n));
  }
  std::vector<BigInt> coeffs(max_degree + 1);
  for (int m = 0; m <= max_degree; ++m) {
    BigInt c = 0;
    for (int k = 0; k <= m; ++k) c += expansion[m - k] * series[k];
    coeffs[m] = std::move(c);
  }
  return coeffs;
}

DescentPolynomial polynomial_by_gf(int n) {
  auto coeffs = gf_coefficients(n, 2 * n + 1);
  if (coeffs[2 * n] != 0 || coeffs[2 * n + 1] != 0) {
    throw std::logic_error("generating function has nonzero coefficient beyond t^" +
                           std::to_string(2 * n - 1));
  }
  coeffs.resize(2 * n);
  return {n, std::move(coeffs)};
}

std::vector<std::pair<int, Rational>> exact_distribution(int n) {
  const auto poly = polynomial_by_gf(n);
  const BigInt total = double_factorial(2 * n - 1);
  std::vector<std::pair<int, Rational>> out;
  for (int m = 0; m < static_cast<int>(poly.coeffs.size()); ++m) {
    if (poly.coeffs[m] == 0) continue;
    Rational p(poly.coeffs[m], total);
    p.canonicalize();
    out.emplace_back(m, std::move(p));
  }
  return out;
}

double mgf_Wn(int n, double s) {
  require_exact_budget(n);
  const auto poly = polynomial_by_gf(n);
  const double log_total = log_of(double_factorial(2 * n - 1));
  const double scale = s / std::sqrt(static_cast<double>(n));
  std::vector<double> terms;
  terms.reserve(poly.coeffs.size());
  for (int m = 0; m < static_cast<int>(poly.coeffs.size()); ++m) {
    if (poly.coeffs[m] == 0) continue;
    const double log_term = log_of(poly.coeffs[m]) - log_total + scale * (m - n);
    if (log_term > kMaxExpArgument) {
      throw RangeError("mgf_Wn overflows at n=" + std::to_string(n) +
                       ", s=" + std::to_string(s) + " (log-term " +
                       std::to_string(log_term) + ")");
    }
    terms.push_back(std::exp(log_term));
  }
  std::sort(terms.begin(), terms.end());
  double sum = 0;
  for (double t : terms) sum += t;
  if (!std::isfinite(sum)) {
    throw RangeError("mgf_Wn overflows at n=" + std::to_string(n) +
                     ", s=" + std::to_string(s));
  }
  return sum;
}

MgfReport mgf_convergence_report(const std::vector<int>& n_list,
                                 const std::vector<double>& s_list) {
  MgfReport report;
  for (int n : n_list) {
    for (double s : s_list) {
      MgfEntry e;
      e.n = n;
      e.s = s;
      e.mgf_value = mgf_Wn(n, s);
      e.target = std::exp(s * s / 12.0);
      e.abs_error = std::abs(e.mgf_value - e.target);
      const double gap = std::abs(e.mgf_value - mgf_Wn(n, -s));
      if (gap > kEvennessTolerance * std::max(1.0, e.mgf_value)) {
        report.evenness_ok = false;
      }
      report.max_evenness_gap = std::max(report.max_evenness_gap, gap);
      report.entries.push_back(e);
    }
  }
  return report;
}

double lemma41_lhs(int n, double s, long long k_max) {
  require_positive(n);
  if (n > kLemmaBudget) throw BudgetExceeded("n", n, kLemmaBudget);
  if (!(s > 0)) throw DomainError("lemma41_lhs requires s > 0");
  if (k_max < 1) k_max = 1;

  const double step = s / std::sqrt(static_cast<double>(n));
  double log_factorial = 0;  // log (2n)!
  for (int j = 2; j <= 2 * n; ++j) log_factorial += std::log(static_cast<double>(j));
  const double log_prefactor = (2 * n + 1) * std::log(step) - log_factorial;

  auto scaled_log_term = [&](long long k) {
    const double kk = static_cast<double>(k) * static_cast<double>(k + 1);
    double log_product = 0;
    for (int j = 0; j < n; ++j) log_product += std::log(kk + 2.0 * j);
    return log_prefactor + log_product - static_cast<double>(k) * step;
  };

  // Streaming log-sum-exp; k = 0 contributes nothing (the j = 0 factor is 0).
  double running_max = -std::numeric_limits<double>::infinity();
  double running_sum = 0;
  double last = running_max;
  double before_last = running_max;
  long long k = 1;
  while (true) {
    for (; k <= k_max; ++k) {
      before_last = last;
      last = scaled_log_term(k);
      if (last > running_max) {
        running_sum = running_sum * std::exp(running_max - last) + 1.0;
        running_max = last;
      } else {
        running_sum += std::exp(last - running_max);
      }
    }
    if (last < before_last && last < -40.0) break;
    k_max *= 2;
  }
  return std::exp(running_max + std::log(running_sum));
}

double normal_cdf(double x, double variance) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0 * variance));
}

namespace {

// Largest one-sided gap between a lattice CDF and N(0, 1/6). `cdf_before[i]`
// and `cdf_at[i]` are the CDF just below and at atom `atoms[i]`.
double lattice_ks(const std::vector<double>& atoms, const std::vector<double>& cdf_before,
                  const std::vector<double>& cdf_at) {
  double worst = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const double phi = normal_cdf(atoms[i], 1.0 / 6.0);
    worst = std::max({worst, std::abs(phi - cdf_before[i]), std::abs(phi - cdf_at[i])});
  }
  return std::min(worst, 1.0);
}

}  // namespace

CltReport clt_experiment(int n, long long num_samples, std::uint64_t seed, int workers) {
  require_positive(n);
  if (num_samples < 1) throw DomainError("num_samples must be positive");
  if (workers <= 0) workers = worker_count();

  const long long chunks = (num_samples + kSamplesPerStream - 1) / kSamplesPerStream;
  workers = static_cast<int>(std::min<long long>(workers, chunks));

  // Per-worker histograms of the descent count; summed afterwards.
  std::vector<std::vector<long long>> histograms(workers,
                                                 std::vector<long long>(2 * n, 0));
  auto run = [&](int worker) {
    auto& hist = histograms[worker];
    for (long long c = worker; c < chunks; c += workers) {
      MatchingSampler sampler(n, seed, static_cast<std::uint64_t>(c));
      const long long begin = c * kSamplesPerStream;
      const long long end = std::min(num_samples, begin + kSamplesPerStream);
      for (long long i = begin; i < end; ++i) {
        const Matching m = sampler.next();
        const auto& w = m.one_line();
        int descents = 0;
        for (std::size_t p = 1; p < w.size(); ++p) descents += w[p - 1] > w[p];
        ++hist[descents];
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  std::vector<long long> hist(2 * n, 0);
  for (const auto& h : histograms) {
    for (int m = 0; m < 2 * n; ++m) hist[m] += h[m];
  }

  const double root_n = std::sqrt(static_cast<double>(n));
  const double total = static_cast<double>(num_samples);
  double mean = 0;
  for (int m = 0; m < 2 * n; ++m) mean += hist[m] * ((m - n) / root_n);
  mean /= total;
  double sq = 0;
  for (int m = 0; m < 2 * n; ++m) {
    const double d = (m - n) / root_n - mean;
    sq += hist[m] * d * d;
  }

  std::vector<double> atoms, before, at;
  long long cumulative = 0;
  for (int m = 0; m < 2 * n; ++m) {
    if (hist[m] == 0) continue;
    atoms.push_back((m - n) / root_n);
    before.push_back(cumulative / total);
    cumulative += hist[m];
    at.push_back(cumulative / total);
  }

  CltReport report;
  report.n = n;
  report.num_samples = num_samples;
  report.seed = seed;
  report.sample_mean_W = mean;
  report.sample_var_W = num_samples > 1 ? sq / (total - 1) : 0.0;
  report.ks_distance = lattice_ks(atoms, before, at);
  return report;
}

double exact_ks_distance(int n) {
  require_exact_budget(n);
  const auto poly = polynomial_by_gf(n);
  const BigInt total = double_factorial(2 * n - 1);
  const double root_n = std::sqrt(static_cast<double>(n));
  std::vector<double> atoms, before, at;
  BigInt cumulative = 0;
  for (int m = 0; m < static_cast<int>(poly.coeffs.size()); ++m) {
    if (poly.coeffs[m] == 0) continue;
    atoms.push_back((m - n) / root_n);
    before.push_back(Rational(cumulative, total).get_d());
    cumulative += poly.coeffs[m];
    at.push_back(Rational(cumulative, total).get_d());
  }
  return lattice_ks(atoms, before, at);
}

int worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  const int available = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* env = std::getenv("MATCHSTAT_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) return std::min(cap, available);
  }
  return available;
}

}  // namespace matchstat
