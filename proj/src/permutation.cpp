#include "wbcc/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace wbcc {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (std::uint32_t v : images_) {
    if (v == 0 || v > images_.size() || seen[v]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 1u);
  return Permutation(std::move(images));
}

bool Permutation::advance() { return std::next_permutation(images_.begin(), images_.end()); }

std::vector<std::size_t> cycle_type(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<bool> visited(n + 1, false);
  std::vector<std::size_t> lengths;
  for (std::uint32_t start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    for (std::uint32_t k = start; !visited[k]; k = p(k)) {
      visited[k] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

CycleStats cycle_stats(const Permutation& p, unsigned r) {
  if (r < 2) throw std::invalid_argument("r must be >= 2");
  CycleStats stats;
  for (std::size_t len : cycle_type(p)) {
    if (len % r == 0) {
      ++stats.singular;
    } else {
      ++stats.regular;
    }
  }
  return stats;
}

}  // namespace wbcc
