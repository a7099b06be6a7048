#pragma once

#include <cstddef>
#include <vector>

#include "wbcc/bipoly.hpp"

namespace wbcc {

/// Truncated formal power series in t with BiPoly coefficients:
/// c_0 + c_1 t + ... + c_N t^N, where N is the order.
///
/// Binary operations on series of different orders truncate to the smaller
/// order.
class TruncSeries {
 public:
  /// The zero series of the given order.
  explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}
  /// Throws std::invalid_argument on an empty coefficient vector.
  explicit TruncSeries(std::vector<BiPoly> coeffs);

  static TruncSeries one(std::size_t order);
  /// c * t^k truncated at `order` (zero when k > order).
  static TruncSeries monomial(const BiPoly& c, std::size_t k, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const BiPoly& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::vector<BiPoly>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  TruncSeries truncated(std::size_t order) const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const BiPoly& c);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const BiPoly& c) { return a *= c; }
  friend TruncSeries operator*(const BiPoly& c, TruncSeries a) { return a *= c; }
  /// Cauchy product.
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(TruncSeries a);

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  std::vector<BiPoly> coeffs_;
};

/// d/dt; the result has order one less. Throws std::invalid_argument on an
/// order-0 input.
TruncSeries derivative(const TruncSeries& a);

/// exp(a) via k E_k = sum_{j=1..k} j a_j E_{k-j}.
/// Throws std::domain_error if the constant coefficient of a is nonzero.
TruncSeries exp(const TruncSeries& a);

}  // namespace wbcc
