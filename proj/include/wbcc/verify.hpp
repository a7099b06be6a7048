#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wbcc/band_matrix.hpp"

namespace wbcc {

enum class CheckStatus { Pass, Fail };

struct CheckRecord {
  std::string name;
  std::string params;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckRecord> checks;
  std::int64_t elapsed_ms = 0;

  bool ok() const;
  /// First failing record in report order, or nullptr.
  const CheckRecord* first_failure() const;
};

/// Test hook: adds 1 to entry (row, col), 1-based, of every matrix large
/// enough to contain it.
struct MatrixFault {
  std::size_t row = 1;
  std::size_t col = 1;
};

struct VerifyOptions {
  unsigned r_max = 5;
  std::size_t n_max = 9;
  std::size_t order = 30;
  unsigned threads = 1;
  SubdiagonalRule rule = SubdiagonalRule::Increasing;
  std::optional<MatrixFault> fault;
};

/// Check families, in report order.
const std::vector<std::string>& check_families();

/// Runs every check family over r in [2, r_max], n in [0, n_max] and the
/// ODE / factorization checks at `order`. Records come back in a fixed order
/// regardless of the thread count. Throws std::invalid_argument if
/// r_max < 2 or order == 0.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace wbcc
