#pragma once

// JSON encoding of continuant polynomials:
//
//   {"r":R,"n":N,"terms":[{"dx":a,"dy":b,"c":"<decimal integer>"},...]}
//
// Terms appear in canonical order and coefficients are decimal strings so
// that consumers never truncate them to 64 bits.

#include <cstddef>
#include <string>
#include <string_view>

#include "json.hpp"
#include "wbcc/bipoly.hpp"
#include "wbcc/verify.hpp"

namespace wbcc {

struct PolyRecord {
  unsigned r = 2;
  std::size_t n = 0;
  BiPoly poly;

  friend bool operator==(const PolyRecord&, const PolyRecord&) = default;
};

/// Throws std::domain_error if the polynomial has a non-integer coefficient.
nlohmann::ordered_json to_json(const PolyRecord& record);

/// Throws std::invalid_argument on schema violations (missing keys, wrong
/// types, malformed coefficient strings, repeated exponent pairs).
PolyRecord poly_record_from_json(const nlohmann::ordered_json& j);

/// Compact single-line encoding.
std::string serialize(const PolyRecord& record);
PolyRecord parse_poly_record(std::string_view text);

nlohmann::ordered_json to_json(const VerifyReport& report);

}  // namespace wbcc
