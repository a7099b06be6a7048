#include "wbcc/json_io.hpp"

#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

namespace wbcc {

using nlohmann::ordered_json;

ordered_json to_json(const PolyRecord& record) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : record.poly.terms()) {
    ordered_json term;
    term["dx"] = m.dx;
    term["dy"] = m.dy;
    term["c"] = to_string(c.to_integer());
    terms.push_back(std::move(term));
  }
  ordered_json j;
  j["r"] = record.r;
  j["n"] = record.n;
  j["terms"] = std::move(terms);
  return j;
}

namespace {

template <typename T>
T unsigned_field(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
    throw std::invalid_argument(std::string("expected unsigned integer field \"") + key + "\"");
  }
  const auto v = j.at(key).get<std::uint64_t>();
  if (v > std::numeric_limits<T>::max()) throw std::invalid_argument(std::string("field out of range: ") + key);
  return static_cast<T>(v);
}

}  // namespace

PolyRecord poly_record_from_json(const ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial record must be a JSON object");
  PolyRecord record;
  record.r = unsigned_field<unsigned>(j, "r");
  record.n = unsigned_field<std::size_t>(j, "n");
  if (!j.contains("terms") || !j.at("terms").is_array()) {
    throw std::invalid_argument("expected array field \"terms\"");
  }
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const auto& term : j.at("terms")) {
    if (!term.is_object()) throw std::invalid_argument("term must be a JSON object");
    const auto dx = unsigned_field<std::uint32_t>(term, "dx");
    const auto dy = unsigned_field<std::uint32_t>(term, "dy");
    if (!term.contains("c") || !term.at("c").is_string()) {
      throw std::invalid_argument("expected string field \"c\"");
    }
    if (!seen.emplace(dx, dy).second) throw std::invalid_argument("repeated exponent pair in terms");
    const BigInt c = parse_integer(term.at("c").get<std::string>());
    if (c == 0) throw std::invalid_argument("zero coefficient in terms");
    record.poly.add_term(Monomial{dx, dy}, BigRational(c));
  }
  return record;
}

std::string serialize(const PolyRecord& record) { return to_json(record).dump(); }

PolyRecord parse_poly_record(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return poly_record_from_json(j);
}

ordered_json to_json(const VerifyReport& report) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json rec;
    rec["name"] = c.name;
    rec["params"] = c.params;
    rec["status"] = c.status == CheckStatus::Pass ? "pass" : "fail";
    rec["detail"] = c.detail;
    checks.push_back(std::move(rec));
  }
  ordered_json j;
  j["ok"] = report.ok();
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace wbcc
