#include "azcong/report_io.hpp"

#include <map>

#include <json.hpp>

namespace azcong {

namespace {

using OrderedJson = nlohmann::ordered_json;

/// RFC 4180 quoting: only fields containing a comma, quote, or newline are
/// wrapped (the fixed congruence columns never are; identity detail fields
/// can be).
std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string pass_text(const CongruenceReport& report) {
  if (!report.judged) return "na";
  return report.pass ? "true" : "false";
}

OrderedJson report_json(const CongruenceReport& report) {
  OrderedJson j;
  j["seq"] = std::string(sequence_tag(report.seq));
  j["p"] = report.p;
  j["n"] = report.n;
  j["claimed_exponent"] = report.claimed_exponent;
  if (report.observed_exponent.is_infinite()) {
    j["observed_exponent"] = "inf";
  } else {
    j["observed_exponent"] = report.observed_exponent.value();
  }
  if (report.judged) {
    j["pass"] = report.pass;
  } else {
    j["pass"] = nullptr;
  }
  j["lhs"] = render_integer(report.lhs);
  j["rhs"] = render_integer(report.rhs);
  return j;
}

/// Finite counts keyed ascending, then the infinite bucket.
std::pair<std::map<unsigned long, std::size_t>, std::size_t> histogram_counts(
    const std::vector<CongruenceReport>& reports) {
  std::map<unsigned long, std::size_t> finite;
  std::size_t infinite = 0;
  for (const auto& report : reports) {
    if (report.observed_exponent.is_infinite()) {
      ++infinite;
    } else {
      ++finite[report.observed_exponent.value()];
    }
  }
  return {std::move(finite), infinite};
}

std::string params_text(const IdentityResult& result, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < result.parameters.size(); ++i) {
    if (i > 0) out += sep;
    out += result.parameters[i].first;
    out += '=';
    out += result.parameters[i].second;
  }
  return out;
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "text") return OutputFormat::Text;
  return std::nullopt;
}

std::string format_compute(const std::vector<ComputedRow>& rows,
                           OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      OrderedJson doc;
      doc["command"] = "compute";
      doc["rows"] = OrderedJson::array();
      for (const auto& row : rows) {
        OrderedJson j;
        j["seq"] = std::string(sequence_tag(row.seq));
        j["n"] = row.n;
        j["value"] = render_integer(row.value);
        doc["rows"].push_back(std::move(j));
      }
      return doc.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = "seq,n,value\n";
      for (const auto& row : rows) {
        out += std::string(sequence_tag(row.seq)) + "," +
               std::to_string(row.n) + "," + render_integer(row.value) + "\n";
      }
      return out;
    }
    case OutputFormat::Text: {
      std::string out;
      for (const auto& row : rows) {
        out += std::string(sequence_tag(row.seq)) + "(" +
               std::to_string(row.n) + ") = " + render_integer(row.value) +
               "\n";
      }
      return out;
    }
  }
  return {};
}

std::string format_congruence(std::string_view command,
                              const ScanOutcome& outcome, bool with_histogram,
                              OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      OrderedJson doc;
      doc["command"] = std::string(command);
      doc["reports"] = OrderedJson::array();
      for (const auto& report : outcome.reports) {
        doc["reports"].push_back(report_json(report));
      }
      if (with_histogram) {
        auto [finite, infinite] = histogram_counts(outcome.reports);
        OrderedJson hist;
        for (const auto& [exponent, count] : finite) {
          hist[std::to_string(exponent)] = count;
        }
        if (infinite > 0) hist["inf"] = infinite;
        doc["histogram"] = std::move(hist);
      }
      doc["warnings"] = outcome.warnings;
      doc["all_pass"] = all_reports_pass(outcome.reports);
      return doc.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = "seq,p,n,claimed_exponent,observed_exponent,pass\n";
      for (const auto& report : outcome.reports) {
        out += std::string(sequence_tag(report.seq)) + "," +
               std::to_string(report.p) + "," + std::to_string(report.n) +
               "," + std::to_string(report.claimed_exponent) + "," +
               report.observed_exponent.to_string() + "," +
               pass_text(report) + "\n";
      }
      return out;
    }
    case OutputFormat::Text: {
      std::string out;
      std::size_t judged = 0;
      std::size_t failed = 0;
      for (const auto& report : outcome.reports) {
        out += std::string(sequence_tag(report.seq)) +
               "(p=" + std::to_string(report.p) +
               ", n=" + std::to_string(report.n) + "): claimed " +
               std::to_string(report.claimed_exponent) + ", observed " +
               report.observed_exponent.to_string();
        if (!report.judged) {
          out += " (no judgment)\n";
          continue;
        }
        ++judged;
        if (report.pass) {
          out += ", pass\n";
        } else {
          ++failed;
          out += ", FAIL\n";
        }
      }
      if (with_histogram) {
        out += "observed exponent histogram:\n";
        auto [finite, infinite] = histogram_counts(outcome.reports);
        for (const auto& [exponent, count] : finite) {
          out += "  " + std::to_string(exponent) + ": " +
                 std::to_string(count) + "\n";
        }
        if (infinite > 0) out += "  inf: " + std::to_string(infinite) + "\n";
      }
      if (failed == 0) {
        out += "all " + std::to_string(judged) + " judged checks passed\n";
      } else {
        out += std::to_string(failed) + " of " + std::to_string(judged) +
               " judged checks FAILED\n";
      }
      return out;
    }
  }
  return {};
}

std::string histogram_line(const std::vector<CongruenceReport>& reports) {
  auto [finite, infinite] = histogram_counts(reports);
  std::string out = "histogram:";
  for (const auto& [exponent, count] : finite) {
    out += " " + std::to_string(exponent) + ":" + std::to_string(count);
  }
  if (infinite > 0) out += " inf:" + std::to_string(infinite);
  return out;
}

std::string format_identities(const std::vector<IdentityResult>& results,
                              const std::vector<std::string>& warnings,
                              OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      OrderedJson doc;
      doc["command"] = "verify-identities";
      doc["results"] = OrderedJson::array();
      for (const auto& result : results) {
        OrderedJson j;
        j["identity"] = std::string(identity_tag(result.id));
        OrderedJson params = OrderedJson::object();
        for (const auto& [name, value] : result.parameters) {
          params[name] = value;
        }
        j["parameters"] = std::move(params);
        j["pass"] = result.pass;
        j["lhs"] = result.lhs;
        j["rhs"] = result.rhs;
        doc["results"].push_back(std::move(j));
      }
      doc["warnings"] = warnings;
      doc["all_pass"] = all_results_pass(results);
      return doc.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = "identity,parameters,pass,lhs,rhs\n";
      for (const auto& result : results) {
        out += csv_field(std::string(identity_tag(result.id))) + "," +
               csv_field(params_text(result, ";")) + "," +
               (result.pass ? "true" : "false") + "," +
               csv_field(result.lhs) + "," + csv_field(result.rhs) + "\n";
      }
      return out;
    }
    case OutputFormat::Text: {
      std::string out;
      std::size_t failed = 0;
      for (const auto& result : results) {
        out += std::string(identity_tag(result.id)) + "(" +
               params_text(result, ", ") + ")";
        if (result.pass) {
          out += ": pass\n";
        } else {
          ++failed;
          out += ": FAIL\n  lhs = " + result.lhs + "\n  rhs = " + result.rhs +
                 "\n";
        }
      }
      if (failed == 0) {
        out += "all " + std::to_string(results.size()) + " checks passed\n";
      } else {
        out += std::to_string(failed) + " of " +
               std::to_string(results.size()) + " checks FAILED\n";
      }
      return out;
    }
  }
  return {};
}

bool all_reports_pass(const std::vector<CongruenceReport>& reports) {
  for (const auto& report : reports) {
    if (report.judged && !report.pass) return false;
  }
  return true;
}

bool all_results_pass(const std::vector<IdentityResult>& results) {
  for (const auto& result : results) {
    if (!result.pass) return false;
  }
  return true;
}

}  // namespace azcong
