#pragma once

// Minimal shell-based process runner for CLI tests: captures exit code,
// stdout, and stderr. Linux-only, like the rest of the test suite.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace testsupport {

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Runs `command` through /bin/sh. The command must not redirect stderr
/// itself; a temp file is used to capture it.
inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  char err_path[] = "/tmp/azcong_test_err_XXXXXX";
  int err_fd = mkstemp(err_path);
  if (err_fd < 0) return result;
  close(err_fd);

  std::string full = command + " 2>" + err_path;
  FILE* pipe = popen(full.c_str(), "r");
  if (pipe == nullptr) {
    std::remove(err_path);
    return result;
  }
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, got);
  }
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);

  result.err = read_file(err_path);
  std::remove(err_path);
  return result;
}

/// Quotes a path for /bin/sh.
inline std::string shell_quote(const std::string& text) {
  std::string out = "'";
  for (char c : text) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += "'";
  return out;
}

}  // namespace testsupport
