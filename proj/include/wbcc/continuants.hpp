#pragma once

#include <cstddef>
#include <vector>

#include "wbcc/bipoly.hpp"
#include "wbcc/rational.hpp"

namespace wbcc {

/// x^(n) = x (x+1) ... (x+n-1), with x^(0) = 1.
BiPoly rising_factorial(std::size_t n);

/// (m)_k = m (m-1) ... (m-k+1), with (m)_0 = 1; zero when k > m.
BigInt falling_factorial(std::size_t m, std::size_t k);

/// Memo table for the wide band continuants V_0^(r), V_1^(r), ... computed
/// bottom-up from the r-term recurrence
///
///   V_n = x * sum_{i=1}^{r-1} (n-1)_{i-1} V_{n-i} + (y + n - r) (n-1)_{r-1} V_{n-r}
///
/// for n >= r, with V_n = x^(n) for n < r. Not thread-safe; use one table
/// per thread.
class ContinuantTable {
 public:
  /// Throws std::invalid_argument if r < 2.
  explicit ContinuantTable(unsigned r);

  unsigned band() const { return r_; }
  const BiPoly& operator[](std::size_t n);

 private:
  unsigned r_;
  std::vector<BiPoly> values_;
};

BiPoly v_recurrence(unsigned r, std::size_t n);

/// V_0^(r) .. V_{n_max}^(r).
std::vector<BiPoly> v_recurrence_table(unsigned r, std::size_t n_max);

/// Classical Cayley continuant: U_0 = 1, U_1 = x,
/// U_n = x U_{n-1} - (n-1)(y - n + 2) U_{n-2}.
BiPoly u_cayley(std::size_t n);

inline constexpr std::size_t kBruteForceMaxSize = 10;

/// Sum over all permutations of [n] of x^regular * y^singular.
/// Throws std::invalid_argument if r < 2 or n > kBruteForceMaxSize.
BiPoly w_bruteforce(unsigned r, std::size_t n);

/// |Reg_r(n)|: permutations of [n] with no cycle length divisible by r.
/// Evaluates V_n^(r) at (1, 0).
BigInt reg_count(unsigned r, std::size_t n);
/// |Cyc_r(n)|: permutations of [n] with every cycle length divisible by r.
/// Evaluates V_n^(r) at (0, 1).
BigInt cyc_count(unsigned r, std::size_t n);

/// Direct enumeration counterparts of reg_count / cyc_count (n <= 10).
BigInt reg_count_bruteforce(unsigned r, std::size_t n);
BigInt cyc_count_bruteforce(unsigned r, std::size_t n);

}  // namespace wbcc
