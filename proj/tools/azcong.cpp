#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "azcong/binomial.hpp"
#include "azcong/cache.hpp"
#include "azcong/congruence.hpp"
#include "azcong/errors.hpp"
#include "azcong/identities.hpp"
#include "azcong/primes.hpp"
#include "azcong/report_io.hpp"
#include "azcong/sequences.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string seq = "a0";
  unsigned long p_min = 5;
  unsigned long p_max = 31;
  unsigned long n_max = 8;
  unsigned long m_max = 200;
  std::string format = "text";
  std::string cache_path;
  bool allow_small = false;
  unsigned jobs = 1;
  std::string report_path;
};

/// Stdout plus the optional --report copy; the two byte streams are
/// identical.
void emit_output(const std::string& payload, const std::string& report_path) {
  std::cout << payload << std::flush;
  if (report_path.empty()) return;
  std::ofstream out(report_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw azcong::Error("report path " + report_path + " is not writable");
  }
  out << payload;
  out.flush();
  if (!out) {
    throw azcong::Error("error while writing report file " + report_path);
  }
}

void emit_warnings(const std::vector<std::string>& warnings) {
  for (const auto& warning : warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
}

bool range_has_small_prime(unsigned long p_min, unsigned long p_max) {
  return (p_min <= 2 && p_max >= 2) || (p_min <= 3 && p_max >= 3);
}

void note_empty_grid(const Options& opt, std::vector<std::string>& warnings) {
  if (azcong::primes_in_range(opt.p_min, opt.p_max).empty()) {
    warnings.push_back("no primes in range [" + std::to_string(opt.p_min) +
                       ", " + std::to_string(opt.p_max) + "]");
  }
  if (opt.n_max == 0) warnings.push_back("n-max is 0: nothing to check");
}

int run_compute(const Options& opt) {
  const auto seq = azcong::parse_sequence_tag(opt.seq);
  if (!seq) {
    std::cerr << "error: unknown sequence \"" << opt.seq << "\"\n";
    return kExitUsage;
  }
  std::set<std::pair<unsigned, unsigned long>> cached;
  if (!opt.cache_path.empty()) {
    azcong::ensure_cache_writable(opt.cache_path);
    for (const auto& record : azcong::read_cache(opt.cache_path)) {
      cached.emplace(azcong::sequence_index(record.seq), record.n);
    }
  }
  std::vector<azcong::ComputedRow> rows;
  rows.reserve(opt.n_max + 1);
  for (unsigned long n = 0; n <= opt.n_max; ++n) {
    rows.push_back({*seq, n, azcong::az(*seq, n)});
  }
  if (!opt.cache_path.empty()) {
    std::vector<azcong::CacheRecord> fresh;
    for (const auto& row : rows) {
      if (!cached.count({azcong::sequence_index(row.seq), row.n})) {
        fresh.push_back({row.seq, row.n, row.value});
      }
    }
    azcong::append_cache(opt.cache_path, fresh);
  }
  const auto format = *azcong::parse_output_format(opt.format);
  emit_output(azcong::format_compute(rows, format), opt.report_path);
  return kExitPass;
}

int run_verify_theorems(const Options& opt) {
  if (!opt.allow_small && range_has_small_prime(opt.p_min, opt.p_max)) {
    std::cerr << "error: the prime range includes p < 5, where the checked "
                 "congruences are not stated; pass --allow-small-primes to "
                 "record raw valuations for p = 2, 3\n";
    return kExitUsage;
  }
  auto outcome = azcong::verify_theorems_grid(opt.p_min, opt.p_max, opt.n_max,
                                              opt.jobs, opt.allow_small);
  note_empty_grid(opt, outcome.warnings);
  emit_warnings(outcome.warnings);
  const auto format = *azcong::parse_output_format(opt.format);
  emit_output(azcong::format_congruence("verify-theorems", outcome, false,
                                        format),
              opt.report_path);
  return azcong::all_reports_pass(outcome.reports) ? kExitPass : kExitFail;
}

int run_scan_conjecture(const Options& opt) {
  auto outcome = azcong::scan_conjecture(opt.p_min, opt.p_max, opt.n_max,
                                         opt.jobs, opt.allow_small);
  note_empty_grid(opt, outcome.warnings);
  emit_warnings(outcome.warnings);
  const auto format = *azcong::parse_output_format(opt.format);
  if (format == azcong::OutputFormat::Csv) {
    std::cerr << azcong::histogram_line(outcome.reports) << "\n";
  }
  emit_output(azcong::format_congruence("scan-conjecture", outcome,
                                        format != azcong::OutputFormat::Csv,
                                        format),
              opt.report_path);
  return azcong::all_reports_pass(outcome.reports) ? kExitPass : kExitFail;
}

int run_verify_identities(const Options& opt) {
  std::vector<std::string> warnings;
  azcong::IdentityGrid grid;
  grid.p_min = opt.p_min;
  grid.p_max = opt.p_max;
  grid.m_max = opt.m_max;
  grid.n_max = opt.n_max;
  if (opt.p_min < 5) {
    warnings.push_back("identity checks require p >= 5; raising p-min to 5");
  }
  if (opt.m_max == 0) {
    grid.vandermonde_max = 0;
    grid.harmonic_alternating_max = 0;
    grid.mortenson_max = 0;
  }
  auto results = azcong::run_all_identities(grid, opt.jobs);
  if (results.empty()) warnings.push_back("empty grid: nothing to check");
  emit_warnings(warnings);
  const auto format = *azcong::parse_output_format(opt.format);
  emit_output(azcong::format_identities(results, warnings, format),
              opt.report_path);
  return azcong::all_results_pass(results) ? kExitPass : kExitFail;
}

void add_common_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--cache", opt.cache_path,
                  "Sequence value cache file (JSON lines); empty disables")
      ->envname("AZCONG_CACHE");
  cmd->add_option("--report", opt.report_path,
                  "Write a byte-identical copy of stdout to this file");
  cmd->add_option("--jobs", opt.jobs, "Worker threads for grid evaluation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_prime_range_options(CLI::App* cmd, Options& opt,
                             bool with_small_prime_flag = true) {
  cmd->add_option("--p-min", opt.p_min, "Smallest prime considered")
      ->capture_default_str();
  cmd->add_option("--p-max", opt.p_max, "Largest prime considered")
      ->capture_default_str();
  // The identity suite requires p >= 5 outright, so it gets no opt-in flag.
  if (with_small_prime_flag) {
    cmd->add_flag("--allow-small-primes", opt.allow_small,
                  "Include p = 2, 3 as raw-valuation entries without "
                  "pass/fail judgment");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "azcong: exact computation of the Almkvist-Zudilin numbers and "
      "mechanical verification of their congruences"};
  app.require_subcommand(1);

  Options compute_opt;
  compute_opt.n_max = 10;
  CLI::App* compute =
      app.add_subcommand("compute", "Print a table of a_i(0..n-max)");
  compute->add_option("--seq", compute_opt.seq, "Sequence: a0, a1, or a2")
      ->required()
      ->check(CLI::IsMember({"a0", "a1", "a2"}));
  compute->add_option("--n-max", compute_opt.n_max, "Largest index computed")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common_options(compute, compute_opt);

  Options theorems_opt;
  CLI::App* theorems = app.add_subcommand(
      "verify-theorems",
      "Check a1(pn) = a2(pn) = 0 and a0(pn) = a0(n) modulo p^2 over a "
      "prime grid");
  add_prime_range_options(theorems, theorems_opt);
  theorems->add_option("--n-max", theorems_opt.n_max, "Largest multiplier n")
      ->capture_default_str();
  add_common_options(theorems, theorems_opt);

  Options identities_opt;
  identities_opt.p_max = 199;
  identities_opt.n_max = 10;
  CLI::App* identities = app.add_subcommand(
      "verify-identities",
      "Check the binomial-sum identities and auxiliary congruences");
  add_prime_range_options(identities, identities_opt,
                          /*with_small_prime_flag=*/false);
  identities->add_option("--n-max", identities_opt.n_max,
                         "Largest exponent n for the prime-power families")
      ->capture_default_str();
  identities->add_option("--m-max", identities_opt.m_max,
                         "Largest m for the exact partial-sum families "
                         "(0 disables all non-prime families)")
      ->capture_default_str();
  add_common_options(identities, identities_opt);

  Options scan_opt;
  CLI::App* scan = app.add_subcommand(
      "scan-conjecture",
      "Measure v_p(a0(pn) - a0(n)) against the conjectured exponent 3");
  add_prime_range_options(scan, scan_opt);
  scan->add_option("--n-max", scan_opt.n_max, "Largest multiplier n")
      ->capture_default_str();
  add_common_options(scan, scan_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    Options* opt = nullptr;
    if (compute->parsed()) opt = &compute_opt;
    if (theorems->parsed()) opt = &theorems_opt;
    if (identities->parsed()) opt = &identities_opt;
    if (scan->parsed()) opt = &scan_opt;
    if (opt == nullptr) {
      std::cerr << "error: no command given\n";
      return kExitUsage;
    }
    if (!compute->parsed() && opt->p_min < 2) {
      std::cerr << "error: --p-min must be at least 2\n";
      return kExitUsage;
    }
    // Seed the in-process memo from the cache so warm runs skip
    // recomputation; only the compute command ever appends.
    if (!opt->cache_path.empty()) {
      for (const auto& record : azcong::read_cache(opt->cache_path)) {
        azcong::seed_az_value(record.seq, record.n, record.value);
      }
    }
    // Factorial table sized to the largest binomial argument the run can
    // need (n + k <= 4n/3 + 2 inside the sequence sum), capped so a huge
    // grid degrades to the multiplicative formula instead of exhausting
    // memory.
    unsigned long top_index = opt->n_max;
    if (!compute->parsed() && opt->p_max < 100000 && opt->n_max < 100000) {
      top_index = opt->p_max * opt->n_max;
    }
    azcong::init_factorial_cache(
        std::min<unsigned long>(top_index + top_index / 3 + 2, 5000));
    if (compute->parsed()) return run_compute(*opt);
    if (theorems->parsed()) return run_verify_theorems(*opt);
    if (identities->parsed()) return run_verify_identities(*opt);
    return run_scan_conjecture(*opt);
  } catch (const azcong::CacheError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
