#pragma once

#include <cstddef>
#include <vector>

#include "wbcc/bipoly.hpp"
#include "wbcc/series.hpp"

namespace wbcc {

/// The two logarithmic pieces of the generating function:
///   A(t) = sum_{k>=1, r does not divide k} t^k / k
///   B(t) = sum_{k>=1, r divides k}         t^k / k
/// so that A + B = -log(1 - t), exp(A) counts r-regular permutations and
/// exp(B) counts permutations whose cycles all have length divisible by r.
struct EgfBasis {
  unsigned r;
  std::size_t order;
  TruncSeries a_series;
  TruncSeries b_series;
};

/// Throws std::invalid_argument if r < 2.
EgfBasis build_basis(unsigned r, std::size_t order);

/// sum_n V_n^(r)(x, y) t^n / n!, truncated, as exp(x A(t) + y B(t)).
TruncSeries egf_series(unsigned r, std::size_t order);

/// n! [t^n] of the series, narrowed to integer coefficients.
/// Throws std::domain_error if a scaled coefficient is not an integer.
BiPoly scaled_coefficient(const TruncSeries& series, std::size_t n);

/// V_n^(r) extracted from the generating function.
BiPoly egf_coefficient(unsigned r, std::size_t n);

/// V_0^(r) .. V_{n_max}^(r) from a single series expansion.
std::vector<BiPoly> egf_coefficients(unsigned r, std::size_t n_max);

/// Residual of the differential equation with both sides multiplied by (1-t):
///   (1-t)(1-t^r) V' - ((1-t) t^(r-1) y + x (1 - t^(r-1))) V
/// at order `order - 1`. Identically zero when V is the generating function.
/// Throws std::invalid_argument if r < 2 or order == 0.
TruncSeries ode_residual(unsigned r, std::size_t order);

/// True iff n![t^n] exp(A) equals |Reg_r(n)| and n![t^n] exp(B) equals
/// |Cyc_r(n)| for n <= min(order, 9), both via the recurrence evaluation and
/// direct permutation counting.
bool reg_cyc_factorization_check(unsigned r, std::size_t order);

inline constexpr std::size_t kFactorizationBruteForceLimit = 9;

}  // namespace wbcc
