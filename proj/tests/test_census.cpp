#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "support.hpp"
#include "wirtwidth/census.hpp"

using namespace wirtwidth;
namespace fs = std::filesystem;

namespace {

fs::path tmp(const std::string& name) {
  const char* dir = std::getenv("WIRTWIDTH_TMP");
  return (dir ? fs::path(dir) : fs::temp_directory_path()) / ("census_" + name);
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = tmp(name);
  std::ofstream(p) << text;
  return p;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string l; std::getline(ss, l);) out.push_back(l);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string f; std::getline(ss, f, ',');) out.push_back(f);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

const std::string kSmall =
    "# name\tcode\n"
    "3_1\t-1,2,-3,1,-2,3\n"
    "4_1\t-1,2,-3,4,-2,1,-4,3\n";

}  // namespace

TEST_CASE("trefoil and figure-eight exact rows") {
  const fs::path in = write_file("small.tsv", kSmall), out = tmp("small.csv");
  CensusOptions opt;
  opt.strategy = Strategy::Exact;
  const CensusSummary s = run_census(in, out, opt);
  CHECK(s.rows == 2);
  CHECK(s.exact == 2);
  CHECK(s.by_width.at(8) == 2);
  const auto rows = lines_of(read_file(out));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == csv_header());
  for (int i = 1; i <= 2; ++i) {
    const auto f = fields(rows[i]);
    REQUIRE(f.size() == 13);
    CHECK(f[3] == "2");
    CHECK(f[4] == "true");
    CHECK(f[5] == "8");
    CHECK(f[6] == "true");
    CHECK(f[12] == "exact");
  }
  for (const auto& v : verify_certificates(out)) CHECK(v.pass);
}

TEST_CASE("bad rows are recorded and the batch goes on") {
  const fs::path in = write_file("bad.tsv", "k1\t-1,x,1\nk2 no tab\n3_1\t-1,2,-3,1,-2,3\nkink\t-1,1\n"),
                 out = tmp("bad.csv");
  const CensusSummary s = run_census(in, out);
  CHECK(s.rows == 4);
  CHECK(s.errors == 3);
  CHECK(s.exact == 1);
  const auto rows = lines_of(read_file(out));
  REQUIRE(rows.size() == 5);
  CHECK(fields(rows[1]).back() == "error:MalformedToken");
  CHECK(fields(rows[2]).back() == "error:MalformedRow");
  CHECK(fields(rows[3]).back() == "exact");
  CHECK(fields(rows[4]).back() == "error:SelfAdjacentStrand");
  const auto verdicts = verify_certificates(out);
  REQUIRE(verdicts.size() == 1);
  CHECK(verdicts[0].pass);
}

TEST_CASE("I/O errors") {
  CHECK_THROWS_AS(run_census(tmp("does_not_exist.tsv"), tmp("x.csv")), CensusIoError);
  const fs::path in = write_file("io.tsv", kSmall);
  CHECK_THROWS_AS(run_census(in, tmp("no_such_dir") / "x.csv"), CensusIoError);
  CHECK_THROWS_AS(verify_certificates(tmp("does_not_exist.csv")), CensusIoError);
  CHECK_THROWS_AS(verify_certificates(write_file("noheader.csv", "a,b\n")), CensusIoError);
}

TEST_CASE("certificates survive a round trip and tampering is caught") {
  const fs::path in = fs::path(WIRTWIDTH_DATA_DIR) / "rolfsen_le9.tsv", out = tmp("rolfsen.csv");
  CensusOptions opt;
  opt.timing = false;
  run_census(in, out, opt);
  const auto verdicts = verify_certificates(out);
  CHECK(verdicts.size() == 85);
  for (const auto& v : verdicts) CHECK_MESSAGE(v.pass, v.name << ": " << v.reason);

  auto rows = lines_of(read_file(out));
  const std::size_t row = 3;  // 4_1
  auto f = fields(rows[row]);
  REQUIRE(f[0] == "4_1");

  SUBCASE("first event deleted") {
    std::string text = base64_decode(f[10]);
    text = text.substr(text.find('\n') + 1);
    f[10] = base64_encode(text);
  }
  SUBCASE("width edited") { f[5] = "10"; }

  std::string edited;
  for (std::size_t i = 0; i < f.size(); ++i) edited += (i ? "," : "") + f[i];
  rows[row] = edited;
  std::string text;
  for (const auto& r : rows) text += r + "\n";
  const auto after = verify_certificates(write_file("tampered.csv", text));
  int failed = 0;
  for (const auto& v : after) {
    if (v.pass) continue;
    ++failed;
    CHECK(v.name == "4_1");
    const bool known = v.reason.find("IllegalEventAtStage") != std::string::npos ||
                       v.reason.find("mismatch") != std::string::npos;
    CHECK_MESSAGE(known, v.reason);
  }
  CHECK(failed == 1);
}

TEST_CASE("deleting the opening seed is an illegal event") {
  const fs::path in = write_file("fig8.tsv", "4_1\t-1,2,-3,4,-2,1,-4,3\n"), out = tmp("fig8.csv");
  run_census(in, out);
  auto rows = lines_of(read_file(out));
  auto f = fields(rows[1]);
  std::string log = base64_decode(f[10]);
  f[10] = base64_encode(log.substr(log.find('\n') + 1));
  std::string edited;
  for (std::size_t i = 0; i < f.size(); ++i) edited += (i ? "," : "") + f[i];
  const auto v = verify_certificates(write_file("fig8_bad.csv", rows[0] + "\n" + edited + "\n"));
  REQUIRE(v.size() == 1);
  CHECK_FALSE(v[0].pass);
  CHECK(v[0].reason.find("IllegalEventAtStage") != std::string::npos);
}

TEST_CASE("output is deterministic across worker counts") {
  const fs::path in = fs::path(WIRTWIDTH_DATA_DIR) / "ht_12_14_sample.tsv";
  CensusOptions opt;
  opt.timing = false;
  opt.strategy = Strategy::Heuristic;
  opt.workers = 1;
  run_census(in, tmp("ht1.csv"), opt);
  run_census(in, tmp("ht1b.csv"), opt);
  opt.workers = 4;
  run_census(in, tmp("ht4.csv"), opt);
  const std::string a = read_file(tmp("ht1.csv"));
  CHECK(a == read_file(tmp("ht1b.csv")));
  CHECK(a == read_file(tmp("ht4.csv")));
  CHECK(lines_of(a).size() == 1001);
}

TEST_CASE("JSON mirror") {
  const fs::path in = write_file("json.tsv", kSmall + "bad\t1,2\n");
  CensusOptions opt;
  opt.json_path = tmp("small.json");
  run_census(in, tmp("json.csv"), opt);
  const auto doc = nlohmann::json::parse(read_file(*opt.json_path));
  REQUIRE(doc["rows"].size() == 3);
  CHECK(doc["rows"][0]["width_upper"] == 8);
  CHECK(doc["rows"][1]["name"] == "4_1");
  CHECK(doc["rows"][2]["status"] == "error:LabelCountError");
  CHECK(doc["summary"]["exact"] == 2);
  CHECK(doc["summary"]["errors"] == 1);
  CHECK(doc["summary"]["by_width"]["8"] == 2);
}

TEST_CASE("heuristic rows") {
  const fs::path in = write_file("heur.tsv", kSmall);
  CensusOptions opt;
  opt.strategy = Strategy::Heuristic;
  const CensusSummary s = run_census(in, tmp("heur.csv"), opt);
  CHECK(s.heuristic_only == 2);
  for (const auto& v : verify_certificates(tmp("heur.csv"))) CHECK(v.pass);
}

TEST_CASE("four-seed runs land on 28 or 32") {
  CensusOptions exact, four;
  exact.strategy = Strategy::Exact;
  four.strategy = Strategy::Heuristic;
  four.seeds = 4;
  int checked = 0;
  for (const auto& e : testsupport::load_corpus("ht_12_14_sample.tsv")) {
    const CensusRecord x = compute_record(e.name, e.code, exact);
    if (x.report.mu_upper != 4) continue;
    const CensusRecord h = compute_record(e.name, e.code, four);
    CHECK(h.status == RowStatus::HeuristicOnly);
    CHECK(h.report.seeds_used() == 4);
    const long w = h.report.width_upper;
    CHECK_MESSAGE((w == 28 || w == 32), e.name << " " << w);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("auto strategy threshold") {
  CensusOptions opt;
  opt.auto_threshold = 3;
  CHECK(compute_record("3_1", "-1,2,-3,1,-2,3", opt).status == RowStatus::Exact);
  CHECK(compute_record("4_1", "-1,2,-3,4,-2,1,-4,3", opt).status == RowStatus::HeuristicOnly);
  CHECK(parse_strategy("auto") == Strategy::Auto);
  CHECK_THROWS_AS(parse_strategy("fast"), std::invalid_argument);
}

TEST_CASE("base64") {
  for (const std::string s : {"", "S", "S ", "S 0", "S 0\n", "S 0\nS", "M 2 1 2\n#mc 1 3\n"})
    CHECK(base64_decode(base64_encode(s)) == s);
  CHECK(base64_encode("S 0\n") == "UyAwCg==");
  CHECK_THROWS_AS(base64_decode("abc"), std::invalid_argument);
  CHECK_THROWS_AS(base64_decode("a=bc"), std::invalid_argument);
  CHECK_THROWS_AS(base64_decode("ab!c"), std::invalid_argument);
}
