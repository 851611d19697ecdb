// matchstat: verification CLI for descent statistics of matchings.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 budget exceeded.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matchstat/distribution.hpp"
#include "matchstat/errors.hpp"
#include "matchstat/matching.hpp"
#include "matchstat/moments.hpp"
#include "matchstat/report_io.hpp"
#include "matchstat/sundaram.hpp"

namespace {

using matchstat::BudgetExceeded;
using nlohmann::json;

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

constexpr int kStatsBruteForceLimit = 6;
constexpr int kPolyEnumerationLimit = 6;
constexpr int kClosedFormBudget = 10000;
constexpr int kCltBudgetN = 1000000;
constexpr long long kCltBudgetSamples = 100000000;
constexpr int kTableauBudgetN = 100000;

struct RunConfig {
  int n = 1;
  long long samples = 1;
  std::uint64_t seed = 0;
  std::vector<int> n_values;
  std::vector<double> s_values;
  std::string matching;
  int random_count = 0;
  std::string format = "text";
  std::string out_path;
};

std::string fmt12(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

void require_budget(const char* parameter, long long value, long long limit) {
  if (value > limit) throw BudgetExceeded(parameter, value, limit);
}

int cmd_stats(const RunConfig& cfg, std::ostream& out) {
  require_budget("n", cfg.n, kClosedFormBudget);
  const auto closed = matchstat::closed_form_moments(cfg.n);
  std::optional<matchstat::MomentReport> brute;
  if (cfg.n <= kStatsBruteForceLimit) brute = matchstat::brute_force_moments(cfg.n);

  bool all_match = true;
  json rows = json::array();
  for (const auto& field : matchstat::moment_fields()) {
    const bool comparable = brute && matchstat::field_valid(closed, field) &&
                            matchstat::field_valid(*brute, field);
    std::string status = "SKIP";
    if (comparable) {
      const bool match = closed.*field.value == (*brute).*field.value;
      all_match = all_match && match;
      status = match ? "MATCH" : "DIFF";
    }
    rows.push_back({
        {"field", field.name},
        {"closed_form", matchstat::field_valid(closed, field)
                            ? json(matchstat::to_string(closed.*field.value))
                            : json(nullptr)},
        {"brute_force", brute && matchstat::field_valid(*brute, field)
                            ? json(matchstat::to_string((*brute).*field.value))
                            : json(nullptr)},
        {"status", status},
    });
  }
  const std::string overall = !brute ? "CLOSED-FORM ONLY" : all_match ? "MATCH" : "DIFF";

  if (cfg.format == "json") {
    json doc{{"n", cfg.n},
             {"closed_form", matchstat::to_json(closed)},
             {"brute_force", brute ? matchstat::to_json(*brute) : json(nullptr)},
             {"fields", rows},
             {"verdict", overall}};
    out << doc.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "field,closed_form,brute_force,status\n";
    for (const auto& r : rows) {
      auto cell = [](const json& v) { return v.is_null() ? std::string() : v.get<std::string>(); };
      out << r["field"].get<std::string>() << ',' << cell(r["closed_form"]) << ','
          << cell(r["brute_force"]) << ',' << r["status"].get<std::string>() << '\n';
    }
  } else {
    out << "n = " << cfg.n << '\n';
    out << std::left << std::setw(22) << "field" << std::setw(26) << "closed_form"
        << std::setw(26) << "brute_force" << "status\n";
    for (const auto& r : rows) {
      auto cell = [](const json& v) { return v.is_null() ? std::string("-") : v.get<std::string>(); };
      out << std::setw(22) << r["field"].get<std::string>() << std::setw(26)
          << cell(r["closed_form"]) << std::setw(26) << cell(r["brute_force"])
          << r["status"].get<std::string>() << '\n';
    }
    out << "verdict: " << overall << '\n';
  }
  return all_match ? kPass : kFail;
}

int cmd_poly(const RunConfig& cfg, std::ostream& out) {
  require_budget("n", cfg.n, matchstat::kExactBudget);
  const auto gf = matchstat::polynomial_by_gf(cfg.n);
  std::optional<matchstat::DescentPolynomial> enumerated;
  if (cfg.n <= kPolyEnumerationLimit) {
    enumerated = matchstat::polynomial_by_enumeration(cfg.n);
  }
  std::vector<int> mismatches;
  if (enumerated) {
    for (std::size_t m = 0; m < gf.coeffs.size(); ++m) {
      if (gf.coeffs[m] != enumerated->coeffs[m]) mismatches.push_back(static_cast<int>(m));
    }
  }
  const bool ok = mismatches.empty();

  if (cfg.format == "csv") {
    out << matchstat::to_csv(gf);
  } else if (cfg.format == "json") {
    json doc{{"n", cfg.n},
             {"generating_function", matchstat::to_json(gf)},
             {"enumeration", enumerated ? matchstat::to_json(*enumerated) : json(nullptr)},
             {"total", gf.total().get_str()},
             {"mismatches", mismatches},
             {"verdict", enumerated ? verdict(ok) : "GF ONLY"}};
    out << doc.dump(2) << '\n';
  } else {
    out << "m,count" << (enumerated ? ",enumeration" : "") << '\n';
    for (std::size_t m = 1; m < gf.coeffs.size(); ++m) {
      out << m << ',' << gf.coeffs[m].get_str();
      if (enumerated) out << ',' << enumerated->coeffs[m].get_str();
      out << '\n';
    }
    out << "total: " << gf.total().get_str() << '\n';
    out << "verdict: " << (enumerated ? verdict(ok) : "GF ONLY") << '\n';
  }
  return ok ? kPass : kFail;
}

int cmd_conjugate(const RunConfig& cfg, std::ostream& out) {
  const auto m = matchstat::Matching::parse(cfg.matching);
  const auto mc = matchstat::conjugate_matching(m);
  const auto s = matchstat::descent_stats(m);
  const auto sc = matchstat::descent_stats(mc);
  const long long n = m.n();
  const bool d_ok = s.descent_number + sc.descent_number == 2 * (n + 1);
  const bool maj_ok = s.major_index + sc.major_index == 2 * n * n;

  if (cfg.format == "json") {
    json doc{{"matching", m.to_string()},
             {"conjugate", mc.to_string()},
             {"d", s.descent_number},
             {"d_conjugate", sc.descent_number},
             {"maj", s.major_index},
             {"maj_conjugate", sc.major_index},
             {"descent_identity", verdict(d_ok)},
             {"major_index_identity", verdict(maj_ok)}};
    out << doc.dump(2) << '\n';
  } else {
    out << "matching:  " << m.to_string() << '\n';
    out << "conjugate: " << mc.to_string() << '\n';
    out << "d:   " << s.descent_number << " + " << sc.descent_number << " = "
        << s.descent_number + sc.descent_number << " (2(n+1) = " << 2 * (n + 1) << ") "
        << verdict(d_ok) << '\n';
    out << "maj: " << s.major_index << " + " << sc.major_index << " = "
        << s.major_index + sc.major_index << " (2n^2 = " << 2 * n * n << ") "
        << verdict(maj_ok) << '\n';
  }
  return d_ok && maj_ok ? kPass : kFail;
}

int cmd_tableau(const RunConfig& cfg, std::ostream& out) {
  if (cfg.random_count > 0) {
    require_budget("n", cfg.n, kTableauBudgetN);
    matchstat::MatchingSampler sampler(cfg.n, cfg.seed, 0);
    int passed = 0;
    for (int k = 0; k < cfg.random_count; ++k) {
      const auto m = sampler.next();
      const auto t = matchstat::matching_to_oscillating(m).first;
      if (matchstat::oscillating_to_matching(t) == m) ++passed;
    }
    const bool ok = passed == cfg.random_count;
    if (cfg.format == "json") {
      out << json{{"n", cfg.n}, {"seed", cfg.seed}, {"cases", cfg.random_count},
                  {"passed", passed}, {"round_trip", verdict(ok)}}
                 .dump(2)
          << '\n';
    } else {
      out << "round-trip: " << verdict(ok) << " (" << passed << "/" << cfg.random_count
          << " random matchings, n=" << cfg.n << ", seed=" << cfg.seed << ")\n";
    }
    return ok ? kPass : kFail;
  }

  const auto m = matchstat::Matching::parse(cfg.matching);
  const auto [t, trace] = matchstat::matching_to_oscillating(m);
  const bool ok = matchstat::oscillating_to_matching(t) == m;
  if (cfg.format == "json") {
    json tableaux = json::array();
    for (const auto& p : trace.tableaux) tableaux.push_back(p.rows());
    out << json{{"matching", m.to_string()},
                {"oscillating_tableau", t.to_string()},
                {"tableaux", tableaux},
                {"round_trip", verdict(ok)}}
               .dump(2)
        << '\n';
  } else {
    out << "matching:    " << m.to_string() << '\n';
    out << "oscillating: " << t.to_string() << '\n';
    for (std::size_t i = 0; i < trace.tableaux.size(); ++i) {
      out << "P_" << i << ":\n";
      const auto text = trace.tableaux[i].to_string();
      out << (text.empty() ? std::string("(empty)\n") : text);
    }
    out << "round-trip: " << verdict(ok) << '\n';
  }
  return ok ? kPass : kFail;
}

int cmd_clt(const RunConfig& cfg, std::ostream& out) {
  require_budget("n", cfg.n, kCltBudgetN);
  require_budget("samples", cfg.samples, kCltBudgetSamples);
  const auto report = matchstat::clt_experiment(cfg.n, cfg.samples, cfg.seed);
  const bool mean_ok = std::abs(report.sample_mean_W) <= 0.01;
  const bool var_ok = std::abs(report.sample_var_W - 1.0 / 6.0) <= 0.005;
  const bool ks_ok = report.ks_distance <= 0.05;
  const bool ok = mean_ok && var_ok && ks_ok;
  if (cfg.format == "json") {
    auto doc = matchstat::to_json(report);
    doc["verdict"] = verdict(ok);
    out << doc.dump(2) << '\n';
  } else {
    out << "n: " << report.n << '\n'
        << "num_samples: " << report.num_samples << '\n'
        << "seed: " << report.seed << '\n'
        << "sample_mean_W: " << fmt12(report.sample_mean_W) << " (|.| <= 0.01 "
        << verdict(mean_ok) << ")\n"
        << "sample_var_W: " << fmt12(report.sample_var_W) << " (|. - 1/6| <= 0.005 "
        << verdict(var_ok) << ")\n"
        << "ks_distance: " << fmt12(report.ks_distance) << " (<= 0.05 " << verdict(ks_ok)
        << ")\n"
        << "target_var: " << fmt12(report.target_var) << '\n'
        << "verdict: " << verdict(ok) << '\n';
  }
  return ok ? kPass : kFail;
}

int cmd_mgf(const RunConfig& cfg, std::ostream& out) {
  for (int n : cfg.n_values) require_budget("n", n, matchstat::kExactBudget);
  const auto report = matchstat::mgf_convergence_report(cfg.n_values, cfg.s_values);
  // Entries are grouped by n, then s.
  bool decreasing = true;
  const std::size_t per_n = cfg.s_values.size();
  for (std::size_t i = per_n; i < report.entries.size(); ++i) {
    if (report.entries[i - per_n].s == 0.0) continue;
    if (!(report.entries[i].abs_error < report.entries[i - per_n].abs_error)) {
      decreasing = false;
    }
  }
  const bool ok = decreasing && report.evenness_ok;
  if (cfg.format == "json") {
    auto doc = matchstat::to_json(report);
    doc["abs_error_decreasing"] = decreasing;
    doc["verdict"] = verdict(ok);
    out << doc.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "n,s,mgf_value,target,abs_error\n";
    for (const auto& e : report.entries) {
      out << e.n << ',' << fmt12(e.s) << ',' << fmt12(e.mgf_value) << ','
          << fmt12(e.target) << ',' << fmt12(e.abs_error) << '\n';
    }
  } else {
    out << std::left << std::setw(8) << "n" << std::setw(10) << "s" << std::setw(20)
        << "mgf_value" << std::setw(20) << "target" << "abs_error\n";
    for (const auto& e : report.entries) {
      out << std::setw(8) << e.n << std::setw(10) << fmt12(e.s) << std::setw(20)
          << fmt12(e.mgf_value) << std::setw(20) << fmt12(e.target) << fmt12(e.abs_error)
          << '\n';
    }
    out << "max_evenness_gap: " << fmt12(report.max_evenness_gap) << " "
        << verdict(report.evenness_ok) << '\n';
    out << "abs_error strictly decreasing in n: " << verdict(decreasing) << '\n';
    out << "verdict: " << verdict(ok) << '\n';
  }
  return ok ? kPass : kFail;
}

int cmd_lemma41(const RunConfig& cfg, std::ostream& out) {
  for (int n : cfg.n_values) require_budget("n", n, matchstat::kLemmaBudget);
  const double s = cfg.s_values.front();
  json entries = json::array();
  bool bounds_ok = true;
  bool decreasing = true;
  double previous_gap = INFINITY;
  for (int n : cfg.n_values) {
    const double value = matchstat::lemma41_lhs(n, s);
    const double bound = std::exp(-s / std::sqrt(static_cast<double>(n)));
    const bool bound_ok = value >= bound - 1e-9;
    const double gap = std::abs(value - 1.0);
    bounds_ok = bounds_ok && bound_ok;
    decreasing = decreasing && gap < previous_gap;
    previous_gap = gap;
    entries.push_back({{"n", n},
                       {"s", matchstat::round12(s)},
                       {"value", matchstat::round12(value)},
                       {"abs_deviation", matchstat::round12(gap)},
                       {"lower_bound", matchstat::round12(bound)},
                       {"lower_bound_ok", bound_ok}});
  }
  const bool ok = bounds_ok && decreasing;
  if (cfg.format == "json") {
    out << json{{"entries", entries}, {"deviation_decreasing", decreasing},
                {"verdict", verdict(ok)}}
               .dump(2)
        << '\n';
  } else if (cfg.format == "csv") {
    out << "n,s,value,abs_deviation,lower_bound\n";
    for (const auto& e : entries) {
      out << e["n"] << ',' << e["s"] << ',' << e["value"] << ',' << e["abs_deviation"]
          << ',' << e["lower_bound"] << '\n';
    }
  } else {
    out << std::left << std::setw(8) << "n" << std::setw(20) << "value" << std::setw(20)
        << "|value-1|" << "lower_bound\n";
    for (const auto& e : entries) {
      out << std::setw(8) << e["n"].get<int>() << std::setw(20)
          << fmt12(e["value"].get<double>()) << std::setw(20)
          << fmt12(e["abs_deviation"].get<double>())
          << fmt12(e["lower_bound"].get<double>()) << ' '
          << verdict(e["lower_bound_ok"].get<bool>()) << '\n';
    }
    out << "|value-1| strictly decreasing: " << verdict(decreasing) << '\n';
    out << "verdict: " << verdict(ok) << '\n';
  }
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Descent statistics of matchings: exact moments, Sundaram's bijection, "
               "descent polynomials and CLT checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", cfg.out_path, "Write output to a file instead of stdout");
  };

  auto* stats = app.add_subcommand("stats", "Closed-form vs brute-force moments");
  stats->add_option("--n", cfg.n, "Half-size n")->required()->check(CLI::PositiveNumber);
  add_common(stats);

  auto* poly = app.add_subcommand("poly", "Descent polynomial from the generating function");
  poly->add_option("--n", cfg.n, "Half-size n")->required()->check(CLI::PositiveNumber);
  add_common(poly);

  auto* conjugate = app.add_subcommand("conjugate", "Conjugate matching and symmetry identities");
  conjugate->add_option("--matching", cfg.matching, "Matching, e.g. 1-4,2-3,5-6")->required();
  add_common(conjugate);

  auto* tableau = app.add_subcommand("tableau", "Oscillating tableau of a matching");
  auto* matching_opt = tableau->add_option("--matching", cfg.matching, "Matching");
  auto* random_opt = tableau->add_option("--random", cfg.random_count,
                                         "Round-trip this many random matchings")
                         ->check(CLI::PositiveNumber);
  tableau->add_option("--n", cfg.n, "Half-size for --random")->check(CLI::PositiveNumber);
  tableau->add_option("--seed", cfg.seed, "Seed for --random");
  matching_opt->excludes(random_opt);
  add_common(tableau);

  auto* clt = app.add_subcommand("clt", "Monte Carlo CLT experiment for W_n");
  clt->add_option("--n", cfg.n, "Half-size n")->required()->check(CLI::PositiveNumber);
  clt->add_option("--samples", cfg.samples, "Number of samples")
      ->required()
      ->check(CLI::PositiveNumber);
  clt->add_option("--seed", cfg.seed, "RNG seed")->required();
  add_common(clt);

  auto* mgf = app.add_subcommand("mgf", "MGF of W_n against exp(s^2/12)");
  mgf->add_option("--n", cfg.n_values, "Comma-separated n values")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  mgf->add_option("--s", cfg.s_values, "Comma-separated s values")->required()->delimiter(',');
  add_common(mgf);

  auto* lemma = app.add_subcommand("lemma41", "Numerical limit of the MGF remainder sum");
  lemma->add_option("--n", cfg.n_values, "Comma-separated n values")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  lemma->add_option("--s", cfg.s_values, "s > 0")
      ->required()
      ->expected(1)
      ->check(CLI::PositiveNumber);
  add_common(lemma);

  try {
    app.parse(argc, argv);
    if (tableau->parsed() && cfg.matching.empty() && cfg.random_count == 0) {
      throw CLI::ValidationError("tableau", "one of --matching or --random is required");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      std::cerr << "cannot open " << cfg.out_path << " for writing\n";
      return kUsage;
    }
  }
  std::ostream& out = cfg.out_path.empty() ? std::cout : file;

  try {
    if (stats->parsed()) return cmd_stats(cfg, out);
    if (poly->parsed()) return cmd_poly(cfg, out);
    if (conjugate->parsed()) return cmd_conjugate(cfg, out);
    if (tableau->parsed()) return cmd_tableau(cfg, out);
    if (clt->parsed()) return cmd_clt(cfg, out);
    if (mgf->parsed()) return cmd_mgf(cfg, out);
    if (lemma->parsed()) return cmd_lemma41(cfg, out);
  } catch (const matchstat::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const matchstat::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const matchstat::RangeError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  }
  return kUsage;
}
