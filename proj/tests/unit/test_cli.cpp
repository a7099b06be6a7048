#include "doctest.h"
#include "wbcc/cli.hpp"
#include "wbcc/json_io.hpp"
#include "wbcc/continuants.hpp"

#include <sstream>
#include <stdexcept>

using namespace wbcc;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}
}  // namespace

TEST_CASE("table") {
  const Run r2 = run({"table", "--r", "2", "--n-max", "2"});
  CHECK(r2.code == kExitOk);
  CHECK(r2.out == "1\nx\nx^2 + y\n");

  const Run r4 = run({"table", "--r", "4", "--n-max", "3"});
  CHECK(lines(r4.out).back() == "x^3 + 3*x^2 + 2*x");

  CHECK(run({"table", "--r", "1", "--n-max", "3"}).code == kExitUsage);
  CHECK(run({"table", "--n-max", "3"}).code == kExitUsage);
  CHECK(run({"table", "--r", "2", "--n-max", "-1"}).code == kExitUsage);
  CHECK(run({"table", "--r", "2", "--format", "xml"}).code == kExitUsage);
}

TEST_CASE("table JSON") {
  const Run j = run({"table", "--r", "2", "--n-max", "2", "--format", "json"});
  CHECK(j.code == kExitOk);
  const auto ls = lines(j.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[2] == R"({"r":2,"n":2,"terms":[{"dx":2,"dy":0,"c":"1"},{"dx":0,"dy":1,"c":"1"}]})");
}

TEST_CASE("JSON records round-trip byte-identically") {
  const Run j = run({"table", "--r", "3", "--n-max", "24", "--format", "json"});
  REQUIRE(j.code == kExitOk);
  for (const auto& line : lines(j.out)) {
    REQUIRE(serialize(parse_poly_record(line)) == line);
  }
  // Coefficients past 2^63 survive as strings.
  const PolyRecord big{2, 30, v_recurrence(2, 30)};
  CHECK(parse_poly_record(serialize(big)) == big);
}

TEST_CASE("JSON schema violations") {
  CHECK_THROWS_AS(parse_poly_record("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_record(R"({"r":2,"terms":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_record(R"({"r":2,"n":1,"terms":[{"dx":1,"dy":0,"c":1}]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_record(R"({"r":2,"n":1,"terms":[{"dx":1,"dy":0,"c":"1.5"}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_poly_record(R"({"r":2,"n":1,"terms":[{"dx":1,"dy":0,"c":"1"},{"dx":1,"dy":0,"c":"2"}]})"),
      std::invalid_argument);
  // Out-of-order terms are accepted and re-serialized canonically.
  const auto rec = parse_poly_record(R"({"r":2,"n":2,"terms":[{"dx":0,"dy":1,"c":"1"},{"dx":2,"dy":0,"c":"1"}]})");
  CHECK(serialize(rec) == R"({"r":2,"n":2,"terms":[{"dx":2,"dy":0,"c":"1"},{"dx":0,"dy":1,"c":"1"}]})");
}

TEST_CASE("matrix") {
  const Run m = run({"matrix", "--r", "2", "--n", "2"});
  CHECK(m.code == kExitOk);
  CHECK(m.out == "x\t-1\ny\tx\n");

  CHECK(run({"matrix", "--r", "4", "--n", "3"}).out == "x\t-1\t.\nx\tx\t-2\nx\tx\tx\n");

  const auto rows = lines(run({"matrix", "--r", "3", "--n", "6"}).out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[5] == ".\t.\t.\ty + 3\tx\tx");

  CHECK(run({"matrix", "--r", "2", "--n", "2", "--format", "json"}).out ==
        "{\"r\":2,\"n\":2,\"rows\":[[\"x\",\"-1\"],[\"y\",\"x\"]]}\n");
  CHECK(run({"matrix", "--r", "2"}).code == kExitUsage);
}

TEST_CASE("sequence") {
  CHECK(run({"sequence", "--r", "2", "--x", "1", "--y", "1", "--n-max", "5"}).out == "1\n1\n2\n6\n24\n120\n");
  CHECK(run({"sequence", "--r", "2", "--x", "1", "--y", "0", "--n-max", "4"}).out == "1\n1\n1\n3\n9\n");
  CHECK(run({"sequence", "--r", "2", "--x", "0", "--y", "1", "--n-max", "4"}).out == "1\n0\n1\n0\n9\n");
  CHECK(run({"sequence", "--r", "2", "--x", "1/2", "--y", "0", "--n-max", "2"}).out == "1\n1/2\n1/4\n");
  CHECK(run({"sequence", "--r", "2", "--x", "abc"}).code == kExitUsage);
  CHECK(run({"sequence", "--r", "2", "--x", "0", "--y", "1", "--n-max", "2", "--format", "json"}).out ==
        "{\"r\":2,\"x\":\"0\",\"y\":\"1\",\"values\":[\"1\",\"0\",\"1\"]}\n");
}

TEST_CASE("verify exit codes") {
  const Run ok = run({"verify"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(lines(ok.out).size() == 9);

  CHECK(run({"verify", "--n-max", "0"}).code == kExitOk);

  const Run bad = run({"verify", "--inject-entry", "3,2"});
  CHECK(bad.code == kExitDiscrepancy);
  CHECK(bad.out.find("first failure: four_way r=2 n=3: bareiss: ") != std::string::npos);

  const Run conv = run({"verify", "--inject-convention", "decreasing", "--format", "json"});
  CHECK(conv.code == kExitDiscrepancy);
  CHECK(conv.out.find(R"({"name":"four_way","params":"r=3 n=4","status":"fail")") != std::string::npos);

  CHECK(run({"verify", "--inject-entry", "0,1"}).code == kExitUsage);
  CHECK(run({"verify", "--order", "0"}).code == kExitUsage);
  CHECK(run({"verify", "--r-max", "1"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
}

TEST_CASE("help is not an error and hides the fault hooks") {
  const Run h = run({"verify", "--help"});
  CHECK(h.code == kExitOk);
  CHECK(h.out.find("--order") != std::string::npos);
  CHECK(h.out.find("inject") == std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"table", "--r", "3", "--n-max", "12", "--format", "json"},
           {"verify", "--format", "json"},
           {"verify", "--threads", "1"},
       }) {
    CHECK(run(args).out == run(args).out);
  }
  CHECK(run({"verify", "--threads", "1"}).out == run({"verify", "--threads", "6"}).out);
}
