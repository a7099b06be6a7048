#include "wbcc/egf.hpp"

#include <algorithm>
#include <stdexcept>

#include "wbcc/continuants.hpp"

namespace wbcc {

EgfBasis build_basis(unsigned r, std::size_t order) {
  if (r < 2) throw std::invalid_argument("band parameter r must be >= 2");
  std::vector<BiPoly> a(order + 1);
  std::vector<BiPoly> b(order + 1);
  for (std::size_t k = 1; k <= order; ++k) {
    const BigRational inv_k(BigInt(1), BigInt(static_cast<unsigned long>(k)));
    (k % r == 0 ? b : a)[k] = BiPoly(inv_k);
  }
  return EgfBasis{r, order, TruncSeries(std::move(a)), TruncSeries(std::move(b))};
}

TruncSeries egf_series(unsigned r, std::size_t order) {
  const EgfBasis basis = build_basis(r, order);
  return exp(basis.a_series * BiPoly::x() + basis.b_series * BiPoly::y());
}

BiPoly scaled_coefficient(const TruncSeries& series, std::size_t n) {
  BiPoly scaled = series[n] * BigRational(factorial(n));
  if (!scaled.has_integer_coefficients()) {
    throw std::domain_error("non-integer coefficient after n!-scaling at n = " + std::to_string(n));
  }
  return scaled;
}

BiPoly egf_coefficient(unsigned r, std::size_t n) { return scaled_coefficient(egf_series(r, n), n); }

std::vector<BiPoly> egf_coefficients(unsigned r, std::size_t n_max) {
  const TruncSeries series = egf_series(r, n_max);
  std::vector<BiPoly> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(scaled_coefficient(series, n));
  return out;
}

TruncSeries ode_residual(unsigned r, std::size_t order) {
  if (r < 2) throw std::invalid_argument("band parameter r must be >= 2");
  if (order == 0) throw std::invalid_argument("ODE residual needs order >= 1");
  const TruncSeries v = egf_series(r, order);
  const std::size_t out_order = order - 1;
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  auto t_pow = [&](std::size_t k) { return TruncSeries::monomial(BiPoly(1), k, out_order); };
  const TruncSeries one = TruncSeries::one(out_order);

  // (1-t)(1-t^r)
  const TruncSeries lhs_factor = (one - t_pow(1)) * (one - t_pow(r));
  // (1-t) t^(r-1) y + x (1 - t^(r-1))
  const TruncSeries rhs_factor =
      (one - t_pow(1)) * t_pow(r - 1) * y + (one - t_pow(r - 1)) * x;

  return lhs_factor * derivative(v) - rhs_factor * v.truncated(out_order);
}

bool reg_cyc_factorization_check(unsigned r, std::size_t order) {
  const EgfBasis basis = build_basis(r, order);
  const TruncSeries reg_series = exp(basis.a_series);
  const TruncSeries cyc_series = exp(basis.b_series);
  const std::size_t limit = std::min(order, kFactorizationBruteForceLimit);
  for (std::size_t n = 0; n <= limit; ++n) {
    const BiPoly reg = scaled_coefficient(reg_series, n);
    const BiPoly cyc = scaled_coefficient(cyc_series, n);
    const BigInt reg_expected = reg_count(r, n);
    const BigInt cyc_expected = cyc_count(r, n);
    if (reg != BiPoly(BigRational(reg_expected)) || cyc != BiPoly(BigRational(cyc_expected))) return false;
    // One enumeration yields both counts: singular = 0 and regular = 0 slices.
    const BiPoly joint = w_bruteforce(r, n);
    if (BigRational(reg_expected) != joint.evaluate(1, 0) || BigRational(cyc_expected) != joint.evaluate(0, 1)) {
      return false;
    }
  }
  return true;
}

}  // namespace wbcc
