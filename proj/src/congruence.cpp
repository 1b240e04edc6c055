#include "azcong/congruence.hpp"

#include <tuple>
#include <utility>

#include "azcong/binomial.hpp"
#include "azcong/errors.hpp"
#include "azcong/parallel.hpp"
#include "azcong/primes.hpp"

namespace azcong {

namespace {

void require_prime(unsigned long p) {
  if (!is_prime(p)) {
    throw UnsupportedPrime("p = " + std::to_string(p) + " is not prime");
  }
}

void require_large_prime(unsigned long p) {
  require_prime(p);
  if (p < 5) {
    throw UnsupportedPrime("p = " + std::to_string(p) +
                           ": supercongruence checks require p >= 5");
  }
}

void require_positive_n(unsigned long n) {
  if (n == 0) throw Error("n must be positive");
}

/// Builds the report for a_seq(p*n) ?= rhs mod p^claimed.  Callers have
/// already validated p; judged is false exactly when p < 5.
CongruenceReport make_report(SequenceId seq, unsigned long p, unsigned long n,
                             unsigned long claimed) {
  CongruenceReport report;
  report.seq = seq;
  report.p = p;
  report.n = n;
  report.claimed_exponent = claimed;
  report.lhs = az(seq, p * n);
  report.rhs = seq == SequenceId::A0 ? az(SequenceId::A0, n) : Integer(0);
  report.observed_exponent =
      padic_split(report.lhs - report.rhs, Integer(p)).valuation;
  report.judged = p >= 5;
  report.pass = report.observed_exponent.at_least(claimed);
  return report;
}

/// Shared range walk for the grid runners: splits [p_min, p_max] into kept
/// primes and warning lines for the small primes excluded without
/// allow_small.
std::pair<std::vector<unsigned long>, std::vector<std::string>> grid_primes(
    unsigned long p_min, unsigned long p_max, bool allow_small) {
  std::vector<unsigned long> kept;
  std::vector<std::string> warnings;
  for (unsigned long p : primes_in_range(p_min, p_max)) {
    if (p < 5 && !allow_small) {
      warnings.push_back("p = " + std::to_string(p) +
                         " skipped: supercongruence checks assume p >= 5 "
                         "(pass --allow-small-primes to record raw "
                         "valuations)");
      continue;
    }
    kept.push_back(p);
  }
  return {std::move(kept), std::move(warnings)};
}

}  // namespace

bool check_congruence(const Integer& lhs, const Integer& rhs, unsigned long p,
                      unsigned long t) {
  if (t == 0) throw Error("check_congruence: t must be positive");
  return padic_split(lhs - rhs, Integer(p)).valuation.at_least(t);
}

Valuation observed_exponent(SequenceId seq, unsigned long p, unsigned long n,
                            bool allow_small) {
  require_prime(p);
  if (p < 5 && !allow_small) {
    throw UnsupportedPrime("p = " + std::to_string(p) +
                           ": supercongruence checks require p >= 5");
  }
  require_positive_n(n);
  Integer lhs = az(seq, p * n);
  Integer rhs = seq == SequenceId::A0 ? az(SequenceId::A0, n) : Integer(0);
  return padic_split(lhs - rhs, Integer(p)).valuation;
}

CongruenceReport verify_theorem_a1(unsigned long p, unsigned long n) {
  require_large_prime(p);
  require_positive_n(n);
  return make_report(SequenceId::A1, p, n, 2);
}

CongruenceReport verify_theorem_a2(unsigned long p, unsigned long n) {
  require_large_prime(p);
  require_positive_n(n);
  return make_report(SequenceId::A2, p, n, 2);
}

CongruenceReport verify_theorem_a0(unsigned long p, unsigned long n) {
  require_large_prime(p);
  require_positive_n(n);
  return make_report(SequenceId::A0, p, n, 2);
}

ScanOutcome scan_conjecture(unsigned long p_min, unsigned long p_max,
                            unsigned long n_max, unsigned jobs,
                            bool allow_small) {
  auto [primes, warnings] = grid_primes(p_min, p_max, allow_small);
  std::vector<std::pair<unsigned long, unsigned long>> points;
  points.reserve(primes.size() * n_max);
  for (unsigned long p : primes) {
    for (unsigned long n = 1; n <= n_max; ++n) points.emplace_back(p, n);
  }
  ScanOutcome outcome;
  outcome.warnings = std::move(warnings);
  outcome.reports.resize(points.size());
  parallel_for(points.size(), jobs, [&](std::size_t idx) {
    const auto [p, n] = points[idx];
    outcome.reports[idx] = make_report(SequenceId::A0, p, n, 3);
  });
  return outcome;
}

ScanOutcome verify_theorems_grid(unsigned long p_min, unsigned long p_max,
                                 unsigned long n_max, unsigned jobs,
                                 bool allow_small) {
  static constexpr SequenceId kOrder[] = {SequenceId::A0, SequenceId::A1,
                                          SequenceId::A2};
  auto [primes, warnings] = grid_primes(p_min, p_max, allow_small);
  std::vector<std::tuple<unsigned long, unsigned long, SequenceId>> points;
  points.reserve(primes.size() * n_max * 3);
  for (unsigned long p : primes) {
    for (unsigned long n = 1; n <= n_max; ++n) {
      for (SequenceId seq : kOrder) points.emplace_back(p, n, seq);
    }
  }
  ScanOutcome outcome;
  outcome.warnings = std::move(warnings);
  outcome.reports.resize(points.size());
  parallel_for(points.size(), jobs, [&](std::size_t idx) {
    const auto [p, n, seq] = points[idx];
    outcome.reports[idx] = make_report(seq, p, n, 2);
  });
  return outcome;
}

bool lucas_check(unsigned long p, unsigned long b, unsigned long c,
                 unsigned long d, unsigned long e) {
  require_prime(p);
  if (c >= p || e >= p) {
    throw Error("lucas_check: digits c, e must lie in [0, p)");
  }
  Integer lhs = binomial(Integer(p) * b + c, Integer(p) * d + e);
  Integer rhs = binomial(b, d) * binomial(c, e);
  return check_congruence(lhs, rhs, p, 1);
}

bool gessel_first_form(unsigned long p, unsigned long i) {
  require_large_prime(p);
  if (i == 0 || i >= p) throw Error("gessel: i must lie in (0, p)");
  Integer lhs = Integer(i) * binomial(p, i);
  Integer rhs(p);
  if (i % 2 == 0) rhs = -rhs;
  return check_congruence(lhs, rhs, p, 2);
}

bool gessel_second_form(unsigned long p, unsigned long i) {
  require_large_prime(p);
  if (i == 0 || i >= p) throw Error("gessel: i must lie in (0, p)");
  Integer lhs = binomial(p - 1, i);
  Integer rhs = (i % 2 == 0) ? Integer(1) : Integer(-1);
  return check_congruence(lhs, rhs, p, 2);
}

bool gessel_check(unsigned long p, unsigned long i) {
  return gessel_first_form(p, i) && gessel_second_form(p, i);
}

bool wolstenholme_check(unsigned long p, unsigned long b, unsigned long c) {
  require_large_prime(p);
  Integer lhs = binomial(Integer(p) * b, Integer(p) * c);
  Integer rhs = binomial(b, c);
  return check_congruence(lhs, rhs, p, 3);
}

}  // namespace azcong
