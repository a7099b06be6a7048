#include "wbcc/cli.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "wbcc/band_matrix.hpp"
#include "wbcc/continuants.hpp"
#include "wbcc/json_io.hpp"
#include "wbcc/verify.hpp"

namespace wbcc {

namespace {

using nlohmann::ordered_json;

constexpr unsigned kMaxBand = 1u << 16;

struct Settings {
  unsigned r = 2;
  unsigned r_max = 5;
  std::size_t n = 0;
  std::size_t n_max = 10;
  std::size_t verify_n_max = 9;
  std::size_t order = 30;
  std::string x = "1";
  std::string y = "1";
  std::string format = "text";
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string inject_entry;
  std::string inject_convention = "increasing";
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void add_format(CLI::App* cmd, Settings& s) {
  cmd->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_band(CLI::App* cmd, Settings& s) {
  cmd->add_option("--r", s.r, "Band parameter r (>= 2)")->required()->check(CLI::Range(2u, kMaxBand));
}

int cmd_table(const Settings& s, std::ostream& out) {
  ContinuantTable table(s.r);
  for (std::size_t n = 0; n <= s.n_max; ++n) {
    if (s.format == "json") {
      out << serialize(PolyRecord{s.r, n, table[n]}) << '\n';
    } else {
      out << table[n] << '\n';
    }
  }
  return kExitOk;
}

int cmd_matrix(const Settings& s, std::ostream& out) {
  const BandMatrix m = build_matrix(s.r, s.n);
  if (s.format == "json") {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).to_string());
      rows.push_back(std::move(row));
    }
    ordered_json j;
    j["r"] = s.r;
    j["n"] = s.n;
    j["rows"] = std::move(rows);
    out << j.dump() << '\n';
  } else {
    out << m.to_text();
  }
  return kExitOk;
}

BigRational parse_rational_flag(const std::string& flag, const std::string& text) {
  try {
    return BigRational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

int cmd_sequence(const Settings& s, std::ostream& out) {
  const BigRational x0 = parse_rational_flag("--x", s.x);
  const BigRational y0 = parse_rational_flag("--y", s.y);
  ContinuantTable table(s.r);
  ordered_json values = ordered_json::array();
  for (std::size_t n = 0; n <= s.n_max; ++n) {
    const std::string v = table[n].evaluate(x0, y0).to_string();
    if (s.format == "json") {
      values.push_back(v);
    } else {
      out << v << '\n';
    }
  }
  if (s.format == "json") {
    ordered_json j;
    j["r"] = s.r;
    j["x"] = x0.to_string();
    j["y"] = y0.to_string();
    j["values"] = std::move(values);
    out << j.dump() << '\n';
  }
  return kExitOk;
}

MatrixFault parse_fault(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--inject-entry expects ROW,COL");
  try {
    const BigInt row = parse_integer(text.substr(0, comma));
    const BigInt col = parse_integer(text.substr(comma + 1));
    if (row < 1 || col < 1 || !row.fits_ulong_p() || !col.fits_ulong_p()) throw std::invalid_argument("range");
    return MatrixFault{row.get_ui(), col.get_ui()};
  } catch (const std::invalid_argument&) {
    throw UsageError("--inject-entry expects positive ROW,COL");
  }
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
  VerifyOptions opt;
  opt.r_max = s.r_max;
  opt.n_max = s.verify_n_max;
  opt.order = s.order;
  opt.threads = s.threads;
  opt.rule = s.inject_convention == "decreasing" ? SubdiagonalRule::Decreasing : SubdiagonalRule::Increasing;
  if (!s.inject_entry.empty()) opt.fault = parse_fault(s.inject_entry);

  const VerifyReport report = run_verify(opt);
  if (s.format == "json") {
    out << to_json(report).dump() << '\n';
  } else {
    for (const auto& family : check_families()) {
      std::size_t total = 0;
      std::size_t passed = 0;
      for (const auto& c : report.checks) {
        if (c.name != family) continue;
        ++total;
        if (c.status == CheckStatus::Pass) ++passed;
      }
      out << (passed == total ? "PASS " : "FAIL ") << family << ' ' << passed << '/' << total << '\n';
    }
    if (const CheckRecord* f = report.first_failure()) {
      out << "first failure: " << f->name << ' ' << f->params << ": " << f->detail << '\n';
    } else {
      out << "all " << report.checks.size() << " checks passed\n";
    }
  }
  err << "verify: " << report.elapsed_ms << " ms\n";
  return report.ok() ? kExitOk : kExitDiscrepancy;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Wide band Cayley continuants: tables, matrices, sequences and cross-verification", "wbcc"};
  app.require_subcommand(1);

  auto* table = app.add_subcommand("table", "Print V_0 .. V_{n-max} for band parameter r");
  add_band(table, s);
  table->add_option("--n-max", s.n_max, "Largest n");
  add_format(table, s);

  auto* matrix = app.add_subcommand("matrix", "Print the band matrix A_n^(r)");
  add_band(matrix, s);
  matrix->add_option("--n", s.n, "Matrix dimension")->required();
  add_format(matrix, s);

  auto* sequence = app.add_subcommand("sequence", "Evaluate V_n^(r) at (x, y) for n = 0 .. n-max");
  add_band(sequence, s);
  sequence->add_option("--x", s.x, "Rational value for x, e.g. 1 or -3/2");
  sequence->add_option("--y", s.y, "Rational value for y");
  sequence->add_option("--n-max", s.n_max, "Largest n");
  add_format(sequence, s);

  auto* verify = app.add_subcommand("verify", "Cross-check all computation routes and identities");
  verify->add_option("--r-max", s.r_max, "Largest band parameter")->check(CLI::Range(2u, kMaxBand));
  verify->add_option("--n-max", s.verify_n_max, "Largest n");
  verify->add_option("--order", s.order, "Series order for the ODE and factorization checks")
      ->check(CLI::PositiveNumber);
  verify->add_option("--threads", s.threads, "Worker threads")->check(CLI::PositiveNumber);
  add_format(verify, s);
  // Fault injection hooks for tests; hidden from --help.
  verify->add_option("--inject-entry", s.inject_entry)->group("");
  verify->add_option("--inject-convention", s.inject_convention)
      ->check(CLI::IsMember({"increasing", "decreasing"}))
      ->group("");

  std::vector<std::string> argv_storage{"wbcc"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(s, out);
    if (matrix->parsed()) return cmd_matrix(s, out);
    if (sequence->parsed()) return cmd_sequence(s, out);
    return cmd_verify(s, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDiscrepancy;
  }
}

}  // namespace wbcc
