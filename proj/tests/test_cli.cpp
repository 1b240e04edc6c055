#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "support/subprocess.hpp"

namespace fs = std::filesystem;
using testsupport::run_command;
using testsupport::shell_quote;

namespace {

const std::string kBin = shell_quote(AZCONG_BIN);

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

struct TempDir {
  fs::path path;
  TempDir() {
    char tmpl[] = "/tmp/azcong_cli_XXXXXX";
    path = fs::path(mkdtemp(tmpl));
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string slurp(const fs::path& p) { return testsupport::read_file(p.string()); }

}  // namespace

TEST_CASE("compute emits the sequence table") {
  const auto csv = run_command(kBin + " compute --seq a0 --n-max 5 --format csv");
  CHECK(csv.exit_code == 0);
  const auto rows = lines_of(csv.out);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == "seq,n,value");
  CHECK(rows[1] == "a0,0,1");
  CHECK(rows[2] == "a0,1,-3");
  CHECK(rows[6] == "a0,5,2997");

  const auto trivial = run_command(kBin + " compute --seq a2 --n-max 1 --format csv");
  CHECK(trivial.exit_code == 0);
  const auto trivial_rows = lines_of(trivial.out);
  REQUIRE(trivial_rows.size() == 3);
  CHECK(trivial_rows[1] == "a2,0,0");
  CHECK(trivial_rows[2] == "a2,1,0");

  const auto json_run = run_command(kBin + " compute --seq a1 --n-max 2 --format json");
  CHECK(json_run.exit_code == 0);
  const auto doc = nlohmann::json::parse(json_run.out);
  CHECK(doc.at("command") == "compute");
  REQUIRE(doc.at("rows").size() == 3);
  CHECK(doc["rows"][0]["value"] == "0");
  CHECK(doc["rows"][1]["value"] == "-1");
  CHECK(doc["rows"][2]["value"] == "6");
  CHECK(doc["rows"][2]["seq"] == "a1");
  CHECK(doc["rows"][2]["n"] == 2);

  const auto text = run_command(kBin + " compute --seq a1 --n-max 2");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("a1(1) = -1") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_command(kBin + " compute").exit_code == 2);           // missing --seq
  CHECK(run_command(kBin + " compute --seq a9").exit_code == 2);  // bad tag
  CHECK(run_command(kBin + " compute --seq a0 --n-max 0").exit_code == 2);
  CHECK(run_command(kBin + " compute --seq a0 --format yaml").exit_code == 2);
  CHECK(run_command(kBin + " frobnicate").exit_code == 2);
  CHECK(run_command(kBin).exit_code == 2);
  CHECK(run_command(kBin + " scan-conjecture --jobs 0").exit_code == 2);
  CHECK(run_command(kBin + " scan-conjecture --p-min 1").exit_code == 2);
  CHECK(run_command(kBin + " --help").exit_code == 0);
  CHECK(run_command(kBin + " compute --help").exit_code == 0);
}

TEST_CASE("verify-theorems over the worked grid") {
  const auto run = run_command(
      kBin + " verify-theorems --p-min 5 --p-max 13 --n-max 4 --format csv");
  CHECK(run.exit_code == 0);
  const auto rows = lines_of(run.out);
  REQUIRE(rows.size() == 49);
  CHECK(rows[0] == "seq,p,n,claimed_exponent,observed_exponent,pass");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CAPTURE(rows[i]);
    CHECK(rows[i].find(",true") == rows[i].size() - 5);
  }
  CHECK(rows[1].rfind("a0,5,1,2,", 0) == 0);
}

TEST_CASE("verify-theorems edge ranges") {
  const auto empty = run_command(kBin + " verify-theorems --p-min 4 --p-max 4 --format csv");
  CHECK(empty.exit_code == 0);
  CHECK(lines_of(empty.out).size() == 1);  // header only
  CHECK(empty.err.find("no primes in range [4, 4]") != std::string::npos);

  const auto guarded = run_command(kBin + " verify-theorems --p-min 2 --p-max 3");
  CHECK(guarded.exit_code == 2);
  CHECK(guarded.err.find("--allow-small-primes") != std::string::npos);

  const auto allowed = run_command(
      kBin +
      " verify-theorems --p-min 3 --p-max 7 --n-max 2 --allow-small-primes"
      " --format csv");
  CHECK(allowed.exit_code == 0);
  std::size_t na_rows = 0;
  for (const auto& row : lines_of(allowed.out)) {
    if (row.find(",na") == row.size() - 3) ++na_rows;
  }
  CHECK(na_rows == 6);  // p = 3, two n values, three sequences
}

TEST_CASE("scan-conjecture single cell and histogram") {
  const auto csv = run_command(kBin + " scan-conjecture --p-max 5 --n-max 1 --format csv");
  CHECK(csv.exit_code == 0);
  const auto rows = lines_of(csv.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1] == "a0,5,1,3,3,true");
  CHECK(csv.err.find("histogram: 3:1") != std::string::npos);

  const auto json_run = run_command(kBin + " scan-conjecture --p-max 17 --n-max 2 --format json");
  CHECK(json_run.exit_code == 0);
  const auto doc = nlohmann::json::parse(json_run.out);
  CHECK(doc.at("command") == "scan-conjecture");
  CHECK(doc.at("all_pass") == true);
  REQUIRE(doc.at("reports").size() == 10);  // {5,7,11,13,17} x {1,2}
  std::size_t histogram_total = 0;
  for (const auto& [key, count] : doc.at("histogram").items()) {
    CHECK(key != "0");
    CHECK(key != "1");
    CHECK(key != "2");
    histogram_total += count.get<std::size_t>();
  }
  CHECK(histogram_total == 10);
  for (const auto& report : doc.at("reports")) {
    CHECK(report.at("pass") == true);
    CHECK(report.at("claimed_exponent") == 3);
  }
}

TEST_CASE("scan-conjecture small prime handling") {
  const auto warned = run_command(kBin + " scan-conjecture --p-min 2 --p-max 11 --n-max 2 --format csv");
  CHECK(warned.exit_code == 0);
  CHECK(warned.err.find("p = 2 skipped") != std::string::npos);
  CHECK(warned.err.find("p = 3 skipped") != std::string::npos);
  const auto rows = lines_of(warned.out);
  REQUIRE(rows.size() == 7);  // header + {5,7,11} x {1,2}
  CHECK(rows[1].rfind("a0,5,", 0) == 0);

  const auto allowed = run_command(
      kBin + " scan-conjecture --p-min 2 --p-max 5 --n-max 1 --allow-small-primes --format csv");
  CHECK(allowed.exit_code == 0);
  const auto allowed_rows = lines_of(allowed.out);
  REQUIRE(allowed_rows.size() == 4);
  CHECK(allowed_rows[1].rfind("a0,2,1,3,", 0) == 0);
  CHECK(allowed_rows[1].find(",na") == allowed_rows[1].size() - 3);
  CHECK(allowed_rows[3] == "a0,5,1,3,3,true");
}

TEST_CASE("scan-conjecture output is byte-identical across jobs") {
  const std::string base = " scan-conjecture --p-max 13 --n-max 4";
  for (const std::string fmt : {" --format csv", " --format json"}) {
    const auto serial = run_command(kBin + base + fmt + " --jobs 1");
    const auto parallel = run_command(kBin + base + fmt + " --jobs 8");
    CHECK(serial.exit_code == 0);
    CHECK(parallel.exit_code == 0);
    CHECK(serial.out == parallel.out);
  }
}

TEST_CASE("verify-identities minimal grids") {
  const auto primes_only = run_command(
      kBin + " verify-identities --p-max 5 --m-max 0 --n-max 2 --format csv");
  CHECK(primes_only.exit_code == 0);
  const auto rows = lines_of(primes_only.out);
  REQUIRE(rows.size() == 9);  // header + fsum + gsum + lehmer + 2x harmonic-fermat + termwise + 2x power-sum
  CHECK(rows[0] == "identity,parameters,pass,lhs,rhs");
  CHECK(rows[1].rfind("f-sum-mod-p,p=5,true,", 0) == 0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].find(",true,") != std::string::npos);
  }

  const auto empty = run_command(
      kBin + " verify-identities --p-max 0 --m-max 0 --n-max 0 --format csv");
  CHECK(empty.exit_code == 0);
  CHECK(lines_of(empty.out).size() == 1);
  CHECK(empty.err.find("empty grid") != std::string::npos);
}

TEST_CASE("verify-identities json structure") {
  const auto run = run_command(
      kBin + " verify-identities --p-max 7 --m-max 2 --n-max 1 --format json");
  CHECK(run.exit_code == 0);
  const auto doc = nlohmann::json::parse(run.out);
  CHECK(doc.at("command") == "verify-identities");
  CHECK(doc.at("all_pass") == true);
  bool saw_mortenson = false;
  for (const auto& result : doc.at("results")) {
    CHECK(result.at("pass") == true);
    if (result.at("identity") == "mortenson") {
      saw_mortenson = true;
      CHECK(result.at("parameters").contains("y"));
    }
  }
  CHECK(saw_mortenson);
}

TEST_CASE("cache round trip") {
  TempDir dir;
  const std::string cache = shell_quote((dir.path / "values.jsonl").string());
  const std::string cmd = kBin + " compute --seq a0 --n-max 5 --format csv --cache " + cache;

  const auto cold = run_command(cmd);
  CHECK(cold.exit_code == 0);
  const auto cache_text = slurp(dir.path / "values.jsonl");
  const auto cache_lines = lines_of(cache_text);
  REQUIRE(cache_lines.size() == 6);
  CHECK(cache_lines[0] == R"({"seq":"a0","n":0,"value":"1"})");
  CHECK(cache_lines[5] == R"({"seq":"a0","n":5,"value":"2997"})");

  const auto warm = run_command(cmd);
  CHECK(warm.exit_code == 0);
  CHECK(warm.out == cold.out);
  CHECK(slurp(dir.path / "values.jsonl") == cache_text);  // no duplicates appended

  const auto extended = run_command(
      kBin + " compute --seq a0 --n-max 8 --format csv --cache " + cache);
  CHECK(extended.exit_code == 0);
  CHECK(lines_of(slurp(dir.path / "values.jsonl")).size() == 9);
}

TEST_CASE("cache via environment variable") {
  TempDir dir;
  const fs::path cache_path = dir.path / "env.jsonl";
  const std::string env = "AZCONG_CACHE=" + shell_quote(cache_path.string()) + " ";
  const auto run = run_command(env + kBin + " compute --seq a1 --n-max 3 --format csv");
  CHECK(run.exit_code == 0);
  CHECK(lines_of(slurp(cache_path)).size() == 4);

  // An empty value disables caching entirely.
  const auto disabled = run_command("AZCONG_CACHE= " + kBin + " compute --seq a1 --n-max 3 --format csv");
  CHECK(disabled.exit_code == 0);

  // The flag wins over the environment.
  fs::remove(cache_path);
  const fs::path flag_path = dir.path / "flag.jsonl";
  const auto flagged = run_command(env + kBin + " compute --seq a2 --n-max 2 --format csv --cache " +
                                   shell_quote(flag_path.string()));
  CHECK(flagged.exit_code == 0);
  CHECK(fs::exists(flag_path));
  CHECK_FALSE(fs::exists(cache_path));
}

TEST_CASE("malformed caches are rejected with the line number") {
  TempDir dir;
  const fs::path cache_path = dir.path / "bad.jsonl";
  {
    std::ofstream out(cache_path);
    out << R"({"seq":"a0","n":0,"value":"1"})" << "\n";
    out << "not json\n";
  }
  const auto bad = run_command(kBin + " compute --seq a0 --n-max 2 --cache " +
                               shell_quote(cache_path.string()));
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);

  {
    std::ofstream out(cache_path, std::ios::trunc);
    out << R"({"seq":"a0","n":0,"value":"1"})" << "\n";
    out << R"({"seq":"a0","n":0,"value":"1"})" << "\n";
  }
  const auto dup = run_command(kBin + " compute --seq a0 --n-max 2 --cache " +
                               shell_quote(cache_path.string()));
  CHECK(dup.exit_code == 2);
  CHECK(dup.err.find("line 2") != std::string::npos);

  {
    std::ofstream out(cache_path, std::ios::trunc);
    out << R"({"seq":"a0","n":0,"value":"007"})" << "\n";
  }
  const auto padded = run_command(kBin + " compute --seq a0 --n-max 2 --cache " +
                                  shell_quote(cache_path.string()));
  CHECK(padded.exit_code == 2);
  CHECK(padded.err.find("canonical") != std::string::npos);
}

TEST_CASE("unwritable cache paths are reported before computing") {
  const auto run = run_command(kBin + " compute --seq a0 --n-max 2 --cache /nonexistent-dir/values.jsonl");
  CHECK(run.exit_code == 2);
  CHECK(run.err.find("cache") != std::string::npos);
}

TEST_CASE("report files duplicate stdout") {
  TempDir dir;
  const fs::path report_path = dir.path / "report.csv";
  const auto run = run_command(kBin + " scan-conjecture --p-max 11 --n-max 2 --format csv --report " +
                               shell_quote(report_path.string()));
  CHECK(run.exit_code == 0);
  CHECK(slurp(report_path) == run.out);

  const auto bad = run_command(kBin + " scan-conjecture --p-max 5 --n-max 1 --report /nonexistent-dir/report.csv");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("warm cache leaves verification output unchanged") {
  TempDir dir;
  const std::string cache = shell_quote((dir.path / "warm.jsonl").string());
  // Warm the cache with values the theorem grid needs.
  CHECK(run_command(kBin + " compute --seq a0 --n-max 35 --format csv --cache " + cache).exit_code == 0);
  const auto cold = run_command(kBin + " verify-theorems --p-max 7 --n-max 2 --format json");
  const auto warm = run_command(kBin + " verify-theorems --p-max 7 --n-max 2 --format json --cache " + cache);
  CHECK(cold.exit_code == 0);
  CHECK(warm.exit_code == 0);
  CHECK(warm.out == cold.out);
}
