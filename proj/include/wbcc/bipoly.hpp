#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "wbcc/rational.hpp"

namespace wbcc {

/// Exponent pair of a monomial x^dx * y^dy.
struct Monomial {
  std::uint32_t dx = 0;
  std::uint32_t dy = 0;

  std::uint64_t total_degree() const { return std::uint64_t{dx} + dy; }
  bool divides(const Monomial& other) const { return dx <= other.dx && dy <= other.dy; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order: higher total degree first, ties broken by higher x-exponent.
/// This is a monomial order, so the first term is the leading term used by
/// division.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
    return a.dx > b.dx;
  }
};

/// Sparse bivariate polynomial in x, y with exact rational coefficients.
///
/// Terms are kept in canonical order with no zero coefficients, so two
/// polynomials are equal iff their term maps are equal.
class BiPoly {
 public:
  using TermMap = std::map<Monomial, BigRational, CanonicalOrder>;

  BiPoly() = default;
  BiPoly(const BigRational& constant);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  BiPoly(I constant) : BiPoly(BigRational(constant)) {}  // NOLINT

  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }
  static BiPoly monomial(const BigRational& coeff, std::uint32_t dx, std::uint32_t dy);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  BigRational coefficient(std::uint32_t dx, std::uint32_t dy) const;

  /// Leading term under CanonicalOrder. Precondition: nonzero.
  const std::pair<const Monomial, BigRational>& leading_term() const;

  std::uint64_t total_degree() const;
  std::uint32_t degree_x() const;
  std::uint32_t degree_y() const;

  bool has_integer_coefficients() const;

  /// Adds c * x^dx * y^dy in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const BigRational& c);

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const BigRational& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const BigRational& c) { return a *= c; }
  friend BiPoly operator*(const BigRational& c, BiPoly a) { return a *= c; }
  template <std::integral I>
  friend BiPoly operator*(BiPoly a, I c) {
    return a *= BigRational(c);
  }
  template <std::integral I>
  friend BiPoly operator*(I c, BiPoly a) {
    return a *= BigRational(c);
  }
  friend BiPoly operator-(BiPoly a);

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  BigRational evaluate(const BigRational& x0, const BigRational& y0) const;

  /// Composition p(xs(x,y), ys(x,y)).
  BiPoly substitute(const BiPoly& xs, const BiPoly& ys) const;

  /// Canonical text, e.g. `x^4 + 6*x^2*y + 8*x^2 + 3*y^2 + 6*y`.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const BiPoly& p);

 private:
  TermMap terms_;
};

/// Exact quotient q with q * divisor == dividend.
/// Throws std::domain_error if divisor is zero or the division leaves a
/// remainder.
BiPoly exact_divide(const BiPoly& dividend, const BiPoly& divisor);

BiPoly pow(const BiPoly& base, unsigned exponent);

}  // namespace wbcc
