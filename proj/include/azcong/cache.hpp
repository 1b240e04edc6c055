#pragma once

#include <string>
#include <vector>

#include "azcong/numbers.hpp"
#include "azcong/sequences.hpp"

namespace azcong {

/// One persisted sequence value.  The on-disk form is one JSON object per
/// line: {"seq":"a0","n":5,"value":"2997"} with the value as a decimal
/// string, so downstream tools need no big-integer support to read it.
struct CacheRecord {
  SequenceId seq = SequenceId::A0;
  unsigned long n = 0;
  Integer value;
};

/// Reads and validates a cache file.  A missing file is an empty cache;
/// anything else wrong (unreadable file, non-JSON line, unknown or missing
/// fields, a value that does not round-trip through parse/render, or a
/// duplicate (seq, n) key) throws CacheError naming the 1-based line.
std::vector<CacheRecord> read_cache(const std::string& path);

/// Appends records in the order given, creating the file if needed.
/// Throws CacheError when the file cannot be opened or written.
void append_cache(const std::string& path,
                  const std::vector<CacheRecord>& records);

/// Throws CacheError when path cannot be opened for append (creating it if
/// missing); used to fail fast before long computations.
void ensure_cache_writable(const std::string& path);

}  // namespace azcong
