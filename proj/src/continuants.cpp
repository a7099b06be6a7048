#include "wbcc/continuants.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "wbcc/permutation.hpp"

namespace wbcc {

namespace {

void require_band(unsigned r) {
  if (r < 2) throw std::invalid_argument("band parameter r must be >= 2");
}

void require_enumerable(std::size_t n) {
  if (n > kBruteForceMaxSize) {
    throw std::invalid_argument("permutation enumeration limited to n <= " +
                                std::to_string(kBruteForceMaxSize));
  }
}

BiPoly constant(const BigInt& c) { return BiPoly(BigRational(c)); }

// counts[regular][singular] over all of S_n.
std::vector<std::vector<std::uint64_t>> cycle_stat_counts(unsigned r, std::size_t n) {
  require_band(r);
  require_enumerable(n);
  std::vector<std::vector<std::uint64_t>> counts(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  Permutation p = Permutation::identity(n);
  std::array<bool, kBruteForceMaxSize + 1> visited{};
  do {
    visited.fill(false);
    std::size_t regular = 0;
    std::size_t singular = 0;
    for (std::uint32_t start = 1; start <= n; ++start) {
      if (visited[start]) continue;
      std::size_t len = 0;
      for (std::uint32_t k = start; !visited[k]; k = p(k)) {
        visited[k] = true;
        ++len;
      }
      if (len % r == 0) {
        ++singular;
      } else {
        ++regular;
      }
    }
    ++counts[regular][singular];
  } while (p.advance());
  return counts;
}

}  // namespace

BiPoly rising_factorial(std::size_t n) {
  BiPoly result = 1;
  for (std::size_t k = 0; k < n; ++k) result *= BiPoly::x() + BiPoly(k);
  return result;
}

BigInt falling_factorial(std::size_t m, std::size_t k) {
  if (k > m) return 0;
  BigInt result = 1;
  for (std::size_t i = 0; i < k; ++i) result *= static_cast<unsigned long>(m - i);
  return result;
}

ContinuantTable::ContinuantTable(unsigned r) : r_(r) { require_band(r); }

const BiPoly& ContinuantTable::operator[](std::size_t n) {
  const BiPoly x = BiPoly::x();
  while (values_.size() <= n) {
    const std::size_t k = values_.size();
    if (k < r_) {
      values_.push_back(k == 0 ? BiPoly(1) : values_.back() * (x + BiPoly(k - 1)));
      continue;
    }
    BiPoly regular_part;
    for (std::size_t i = 1; i + 1 <= r_; ++i) {
      regular_part += constant(falling_factorial(k - 1, i - 1)) * values_[k - i];
    }
    const BiPoly singular_weight = BiPoly::y() + BiPoly(k - r_);
    BiPoly next = x * regular_part;
    next += singular_weight * (constant(falling_factorial(k - 1, r_ - 1)) * values_[k - r_]);
    values_.push_back(std::move(next));
  }
  return values_[n];
}

BiPoly v_recurrence(unsigned r, std::size_t n) {
  ContinuantTable table(r);
  return table[n];
}

std::vector<BiPoly> v_recurrence_table(unsigned r, std::size_t n_max) {
  ContinuantTable table(r);
  std::vector<BiPoly> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(table[n]);
  return out;
}

BiPoly u_cayley(std::size_t n) {
  const BiPoly x = BiPoly::x();
  BiPoly previous = 1;
  if (n == 0) return previous;
  BiPoly current = x;
  for (std::size_t k = 2; k <= n; ++k) {
    // (k-1)(y-k+2)
    const BiPoly weight = BiPoly(k - 1) * (BiPoly::y() - BiPoly(k) + BiPoly(2));
    BiPoly next = x * current - weight * previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

BiPoly w_bruteforce(unsigned r, std::size_t n) {
  const auto counts = cycle_stat_counts(r, n);
  BiPoly result;
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = 0; b <= n; ++b) {
      if (counts[a][b] != 0) {
        result.add_term(Monomial{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)},
                        BigRational(counts[a][b]));
      }
    }
  }
  return result;
}

BigInt reg_count(unsigned r, std::size_t n) { return v_recurrence(r, n).evaluate(1, 0).to_integer(); }

BigInt cyc_count(unsigned r, std::size_t n) { return v_recurrence(r, n).evaluate(0, 1).to_integer(); }

BigInt reg_count_bruteforce(unsigned r, std::size_t n) {
  const auto counts = cycle_stat_counts(r, n);
  BigInt total = 0;
  for (std::size_t a = 0; a <= n; ++a) total += static_cast<unsigned long>(counts[a][0]);
  return total;
}

BigInt cyc_count_bruteforce(unsigned r, std::size_t n) {
  const auto counts = cycle_stat_counts(r, n);
  BigInt total = 0;
  for (std::size_t b = 0; b <= n; ++b) total += static_cast<unsigned long>(counts[0][b]);
  return total;
}

}  // namespace wbcc
