#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wbcc {

/// Counts of r-regular (length not divisible by r) and r-singular (length
/// divisible by r) cycles.
struct CycleStats {
  std::size_t regular = 0;
  std::size_t singular = 0;

  friend bool operator==(const CycleStats&, const CycleStats&) = default;
};

/// A bijection on {1, ..., n} in one-line notation.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `images` is a permutation of 1..n.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  /// Image of k, for 1 <= k <= n.
  std::uint32_t operator()(std::uint32_t k) const { return images_[k - 1]; }
  std::span<const std::uint32_t> images() const { return images_; }

  /// Lexicographic successor in one-line notation; returns false (and wraps
  /// to the identity) after the last permutation.
  bool advance();

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Cycle lengths, sorted descending. They sum to n.
std::vector<std::size_t> cycle_type(const Permutation& p);

/// Throws std::invalid_argument if r < 2.
CycleStats cycle_stats(const Permutation& p, unsigned r);

}  // namespace wbcc
