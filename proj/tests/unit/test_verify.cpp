#include "doctest.h"
#include "wbcc/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace wbcc;

namespace {
const CheckRecord* find(const VerifyReport& report, const std::string& name, const std::string& params) {
  for (const auto& c : report.checks) {
    if (c.name == name && c.params == params) return &c;
  }
  return nullptr;
}
}  // namespace

TEST_CASE("default verification passes every family") {
  VerifyOptions opt;
  opt.threads = 4;
  const VerifyReport report = run_verify(opt);
  CHECK(report.ok());
  std::set<std::string> names;
  for (const auto& c : report.checks) names.insert(c.name);
  CHECK(names.size() >= 6);
  for (const auto& family : check_families()) CHECK(names.count(family) == 1);
}

TEST_CASE("report order is independent of the thread count") {
  VerifyOptions opt;
  opt.r_max = 4;
  opt.n_max = 6;
  opt.order = 12;
  opt.threads = 1;
  const VerifyReport serial = run_verify(opt);
  opt.threads = 8;
  const VerifyReport parallel = run_verify(opt);
  REQUIRE(serial.checks.size() == parallel.checks.size());
  for (std::size_t i = 0; i < serial.checks.size(); ++i) {
    CHECK(serial.checks[i].name == parallel.checks[i].name);
    CHECK(serial.checks[i].params == parallel.checks[i].params);
    CHECK(serial.checks[i].status == parallel.checks[i].status);
    CHECK(serial.checks[i].detail == parallel.checks[i].detail);
  }
}

TEST_CASE("degenerate ranges") {
  VerifyOptions opt;
  opt.n_max = 0;
  CHECK(run_verify(opt).ok());
  opt.r_max = 1;
  CHECK_THROWS_AS(run_verify(opt), std::invalid_argument);
  opt.r_max = 2;
  opt.order = 0;
  CHECK_THROWS_AS(run_verify(opt), std::invalid_argument);
}

TEST_CASE("decreasing convention fails the four-way check at r=3, n=4") {
  VerifyOptions opt;
  opt.rule = SubdiagonalRule::Decreasing;
  const VerifyReport report = run_verify(opt);
  CHECK_FALSE(report.ok());
  const CheckRecord* rec = find(report, "four_way", "r=3 n=4");
  REQUIRE(rec != nullptr);
  CHECK(rec->status == CheckStatus::Fail);
  CHECK(rec->detail.find("bareiss") != std::string::npos);
  // Below the second y-entry the conventions agree.
  CHECK(find(report, "four_way", "r=3 n=3")->status == CheckStatus::Pass);
}

TEST_CASE("a corrupted entry is reported with both polynomials") {
  VerifyOptions opt;
  opt.fault = MatrixFault{2, 1};
  const VerifyReport report = run_verify(opt);
  REQUIRE_FALSE(report.ok());
  const CheckRecord* first = report.first_failure();
  CHECK(first->name == "four_way");
  CHECK(first->params == "r=2 n=2");
  CHECK(first->detail == "bareiss: x^2 + y + 1 vs recurrence: x^2 + y");
}

TEST_CASE("every single-entry corruption is caught") {
  VerifyOptions opt;
  opt.r_max = 4;
  opt.n_max = 5;
  opt.order = 8;
  for (std::size_t i = 1; i <= 5; ++i) {
    for (std::size_t j = 1; j <= 5; ++j) {
      opt.fault = MatrixFault{i, j};
      INFO("entry " << i << "," << j);
      CHECK_FALSE(run_verify(opt).ok());
    }
  }
}
