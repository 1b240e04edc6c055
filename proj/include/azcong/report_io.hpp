#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "azcong/congruence.hpp"
#include "azcong/identities.hpp"
#include "azcong/sequences.hpp"

namespace azcong {

enum class OutputFormat { Json, Csv, Text };

std::optional<OutputFormat> parse_output_format(std::string_view text);

/// One row of a computed sequence table.
struct ComputedRow {
  SequenceId seq = SequenceId::A0;
  unsigned long n = 0;
  Integer value;
};

/// Sequence table in the chosen format.  JSON documents and CSV tables are
/// stability-guaranteed; text is human-oriented.  All outputs end with a
/// final LF and contain no other trailing whitespace.
std::string format_compute(const std::vector<ComputedRow>& rows,
                           OutputFormat format);

/// Congruence reports for the named command ("verify-theorems" or
/// "scan-conjecture").  CSV columns are exactly
/// seq,p,n,claimed_exponent,observed_exponent,pass with "inf" for infinite
/// valuations and "na" for unjudged entries.  with_histogram adds the
/// observed-exponent histogram (JSON object / text section; CSV callers
/// get it separately via histogram_line since the columns are fixed).
std::string format_congruence(std::string_view command,
                              const ScanOutcome& outcome, bool with_histogram,
                              OutputFormat format);

/// "histogram: 3:52 4:3 inf:1" summary of observed exponents, finite keys
/// ascending, "inf" last; empty counts are omitted.
std::string histogram_line(const std::vector<CongruenceReport>& reports);

/// Identity results.  CSV columns: identity,parameters,pass,lhs,rhs with
/// parameters joined as name=value;name=value.
std::string format_identities(const std::vector<IdentityResult>& results,
                              const std::vector<std::string>& warnings,
                              OutputFormat format);

/// True when every judged report passes (unjudged entries are ignored).
bool all_reports_pass(const std::vector<CongruenceReport>& reports);

/// True when every result passes.
bool all_results_pass(const std::vector<IdentityResult>& results);

}  // namespace azcong
