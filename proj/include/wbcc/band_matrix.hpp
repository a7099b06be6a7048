#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wbcc/bipoly.hpp"

namespace wbcc {

/// Sign convention of the y-subdiagonal. Increasing (y, y+1, y+2, ...) is the
/// correct one; Decreasing exists only so tests can show that the checks
/// detect the wrong convention.
enum class SubdiagonalRule { Increasing, Decreasing };

/// Square matrix of BiPoly entries, indexed from 0.
///
/// For a matrix produced by build_matrix(r, n) (rows/cols 1-based in the
/// formulas below):
///   a(i, i+1)   = -i               for 1 <= i <= n-1
///   a(i, j)     = x                for 0 <= i-j <= r-2
///   a(i, i-r+1) = y + (i - r)      for r <= i <= n
/// and every other entry is zero, i.e. a (1, r-1) band matrix. When n < r the
/// y-entries never appear and the matrix is lower-Hessenberg with x below the
/// superdiagonal.
class BandMatrix {
 public:
  BandMatrix(unsigned r, std::size_t n);

  unsigned band() const { return r_; }
  std::size_t size() const { return n_; }

  const BiPoly& operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }

  /// Copy with one entry replaced.
  BandMatrix with_entry(std::size_t row, std::size_t col, BiPoly value) const;

  /// Copy with every odd (1-based) row and column negated.
  BandMatrix with_odd_lines_negated() const;

  /// One row per line, tab-separated canonical entries, zeros as `.`.
  std::string to_text() const;

  friend bool operator==(const BandMatrix&, const BandMatrix&) = default;

 private:
  friend BandMatrix build_matrix(unsigned r, std::size_t n, SubdiagonalRule rule);
  BiPoly& at(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }

  unsigned r_;
  std::size_t n_;
  std::vector<BiPoly> entries_;
};

/// The wide band Cayley matrix A_n^(r)(x, y). Throws std::invalid_argument if
/// r < 2.
BandMatrix build_matrix(unsigned r, std::size_t n, SubdiagonalRule rule = SubdiagonalRule::Increasing);

inline constexpr std::size_t kLeibnizMaxSize = 8;

/// Determinant by signed permutation expansion, pruning structural zeros.
/// Throws std::invalid_argument if the matrix is larger than kLeibnizMaxSize.
BiPoly det_leibniz(const BandMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination without pivoting. Every
/// pivot division goes through exact_divide, so a non-exact step throws
/// std::domain_error. A zero pivot throws std::logic_error.
BiPoly det_bareiss(const BandMatrix& m);

}  // namespace wbcc
