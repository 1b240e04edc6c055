#include "azcong/cache.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <utility>

#include <json.hpp>

#include "azcong/errors.hpp"

namespace azcong {

namespace {

CacheRecord parse_record(const std::string& line, std::size_t line_no) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw CacheError("cache line " + std::to_string(line_no) +
                         " is not valid JSON: " + e.what(),
                     line_no);
  }
  if (!j.is_object() || j.size() != 3 || !j.contains("seq") ||
      !j.contains("n") || !j.contains("value")) {
    throw CacheError("cache line " + std::to_string(line_no) +
                         " must be an object with exactly the keys "
                         "seq, n, value",
                     line_no);
  }
  if (!j["seq"].is_string() || !j["n"].is_number_unsigned() ||
      !j["value"].is_string()) {
    throw CacheError("cache line " + std::to_string(line_no) +
                         " has wrong field types (seq: string, n: "
                         "nonnegative integer, value: string)",
                     line_no);
  }
  const auto seq = parse_sequence_tag(j["seq"].get<std::string>());
  if (!seq) {
    throw CacheError("cache line " + std::to_string(line_no) +
                         " names unknown sequence \"" +
                         j["seq"].get<std::string>() + "\"",
                     line_no);
  }
  const std::string text = j["value"].get<std::string>();
  CacheRecord record;
  record.seq = *seq;
  record.n = j["n"].get<unsigned long>();
  try {
    record.value = parse_integer(text);
  } catch (const Error& e) {
    throw CacheError("cache line " + std::to_string(line_no) +
                         " has a malformed value: " + e.what(),
                     line_no);
  }
  if (render_integer(record.value) != text) {
    throw CacheError("cache line " + std::to_string(line_no) +
                         " value \"" + text +
                         "\" is not in canonical decimal form",
                     line_no);
  }
  return record;
}

}  // namespace

std::vector<CacheRecord> read_cache(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return {};
  std::ifstream in(path);
  if (!in) throw CacheError("cannot open cache file " + path, 0);
  std::vector<CacheRecord> records;
  std::set<std::pair<unsigned, unsigned long>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    CacheRecord record = parse_record(line, line_no);
    if (!seen.emplace(sequence_index(record.seq), record.n).second) {
      throw CacheError("cache line " + std::to_string(line_no) +
                           " repeats (" +
                           std::string(sequence_tag(record.seq)) + ", " +
                           std::to_string(record.n) + ")",
                       line_no);
    }
    records.push_back(std::move(record));
  }
  if (in.bad()) throw CacheError("error while reading cache file " + path, 0);
  return records;
}

void append_cache(const std::string& path,
                  const std::vector<CacheRecord>& records) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw CacheError("cannot open cache file " + path + " for append", 0);
  for (const auto& record : records) {
    out << "{\"seq\":\"" << sequence_tag(record.seq) << "\",\"n\":" << record.n
        << ",\"value\":\"" << render_integer(record.value) << "\"}\n";
  }
  out.flush();
  if (!out) throw CacheError("error while writing cache file " + path, 0);
}

void ensure_cache_writable(const std::string& path) {
  std::ofstream out(path, std::ios::app);
  if (!out) {
    throw CacheError("cache path " + path + " is not writable", 0);
  }
}

}  // namespace azcong
