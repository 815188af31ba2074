#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "../support.hpp"
#include "vfc/algebra/json_io.hpp"
#include "vfc/cli/commands.hpp"
#include "vfc/cli/report.hpp"

using namespace vfc;
using namespace vfc::test;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "vfc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("verify-line") {
  auto ok = run_cli({"verify-line", "--n", "3", "--d", "2", "--db", "1", "--char", "5"});
  CHECK(ok.code == 0);
  json rep = json::parse(ok.out);
  CHECK(rep["schema"] == cli::kSchema);
  CHECK(rep["results"][0]["status"] == "pass");
  CHECK(rep["results"][0]["splitting"] == "O(1) + O");
  CHECK_FALSE(rep.contains("wall_time_s"));

  auto wild = run_cli({"verify-line", "--n", "4", "--d", "2", "--db", "2", "--char", "2"});
  CHECK(wild.code == 3);
  json w = json::parse(wild.out);
  CHECK(w["results"][0]["tame"] == false);
  CHECK(w["results"][0]["status"] == "wild");
  CHECK(w["results"][0]["presentation"] == "middle");
  CHECK(run_cli({"verify-line", "--n", "4", "--d", "2", "--db", "2", "--char", "2", "--wild"}).code == 0);

  auto usage = run_cli({"verify-line", "--n", "2", "--d", "2", "--db", "1"});
  CHECK(usage.code == 2);
  CHECK(usage.err.find("invalid_argument") != std::string::npos);

  CHECK(run_cli({"verify-line", "--n", "3", "--d", "2", "--db", "1", "--char", "4"}).code == 2);
  CHECK(run_cli({"verify-line", "--d", "2"}).code == 2);
  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({}).code == 2);

  auto text = run_cli({"--format", "text", "verify-line", "--n", "3", "--d", "2", "--db", "1", "--char", "5"});
  CHECK(text.code == 0);
  CHECK(text.out.find("O(1) + O") != std::string::npos);
}

TEST_CASE("scan") {
  auto r = run_cli({"scan", "--nmax", "5", "--lmax", "2", "--chars", "2,3,5"});
  CHECK(r.code == 0);
  CHECK(r.out == read_file(golden("scan_n5_l2.jsonl")));
  auto lines = json_lines(r.out);
  long wild = 0;
  for (const auto& l : lines) {
    if (l["type"] != "cell") continue;
    CHECK(l["status"] != "fail");
    if (l["tame"] == false) {
      CHECK(l["status"] == "wild");
      ++wild;
    }
  }
  CHECK(wild > 0);
  CHECK(lines.back()["wild"] == wild);
  CHECK(lines.back()["fail"] == 0);

  auto empty = run_cli({"scan", "--nmin", "3", "--nmax", "2"});
  CHECK(empty.code == 0);
  auto el = json_lines(empty.out);
  REQUIRE(el.size() == 2);
  CHECK(el[1]["cells"] == 0);

  // Thread count changes only the echoed command line.
  auto threaded = json_lines(run_cli({"--jobs", "3", "scan", "--nmax", "5", "--lmax", "2", "--chars", "2,3,5"}).out);
  REQUIRE(threaded.size() == lines.size());
  for (std::size_t i = 1; i < lines.size(); ++i) CHECK(threaded[i] == lines[i]);
}

TEST_CASE("splitting") {
  auto r = run_cli({"splitting", golden("quadric_line.json")});
  CHECK(r.code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["results"][0]["verdict"]["splitting"]["text"] == "O(2) + O");

  auto cx = run_cli({"splitting", golden("quadric_complex.json")});
  CHECK(cx.code == 0);
  CHECK(json::parse(cx.out)["results"][0]["splitting"]["text"] == "O(2) + O");

  auto off = run_cli({"splitting", golden("quadric_offline.json")});
  CHECK(off.code == 3);
  CHECK(json::parse(off.out)["results"][0]["status"] == "containment_failure");

  // Break one coefficient deep in the file.
  json doc = json::parse(read_file(golden("quadric_line.json")));
  doc["model"]["F"][0]["terms"][1][1] = json::array();
  const std::string path = "cli_test_malformed.json";
  {
    std::ofstream(path) << doc.dump();
  }
  auto bad = run_cli({"splitting", path});
  std::remove(path.c_str());
  CHECK(bad.code == 2);
  json e = json::parse(bad.err);
  CHECK(e["error"]["code"] == "schema");
  CHECK(e["error"]["message"].get<std::string>().rfind("/model/F/0/terms/1/1", 0) == 0);

  CHECK(run_cli({"splitting", "does-not-exist.json"}).code == 2);
}

TEST_CASE("nodal") {
  auto r = run_cli({"nodal", "--count", "20", "--rmax", "4", "--seed", "1"});
  CHECK(r.code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["summary"]["instances"] == 20);
  CHECK(rep["summary"]["fail"] == 0);
  CHECK(rep["inputs"]["char"] == 101);
  CHECK(run_cli({"nodal", "--count", "20", "--rmax", "4", "--seed", "1"}).out == r.out);
  CHECK(run_cli({"nodal", "--count", "20", "--rmax", "4", "--seed", "2"}).out != r.out);

  auto zero = run_cli({"nodal", "--count", "0"});
  CHECK(zero.code == 0);
  json z = json::parse(zero.out);
  CHECK(z["summary"]["instances"] == 0);
  CHECK(z["summary"]["fail"] == 0);
}

TEST_CASE("enumerate-lines") {
  const std::string path = "cli_test_model.json";
  {
    std::ofstream(path) << R"({"char": 2, "n": 3, "F": [{"char": 2, "n": 3, "degree": 2,
      "terms": [[[1,0,1,0], "1"], [[0,1,0,1], "1"]]}], "G": []})";
  }
  auto r = run_cli({"enumerate-lines", path});
  auto none = run_cli({"enumerate-lines", path, "--max", "0"});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  auto lines = json_lines(r.out);
  CHECK(lines.back()["lines"] == 6);
  CHECK(json_lines(none.out).back()["lines"] == 0);
}

TEST_CASE("timing and output file") {
  auto t = run_cli({"--timing", "verify-line", "--n", "3", "--d", "2", "--db", "1", "--char", "5"});
  CHECK(json::parse(t.out).contains("wall_time_s"));
  const std::string path = "cli_test_out.json";
  auto f = run_cli({"--out", path, "verify-line", "--n", "3", "--d", "2", "--db", "1", "--char", "5"});
  CHECK(f.out.empty());
  CHECK(json::parse(read_file(path))["results"][0]["status"] == "pass");
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(cli::exit_code_for(ErrorCode::Schema) == 2);
  CHECK(cli::exit_code_for(ErrorCode::InvalidArgument) == 2);
  CHECK(cli::exit_code_for(ErrorCode::FieldMismatch) == 2);
  CHECK(cli::exit_code_for(ErrorCode::SpanFailure) == 3);
  CHECK(cli::exit_code_for(ErrorCode::WildBoundary) == 3);
  CHECK(cli::exit_code_for(ErrorCode::Internal) == 4);
}
