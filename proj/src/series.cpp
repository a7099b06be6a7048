#include "wbcc/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace wbcc {

TruncSeries::TruncSeries(std::vector<BiPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

TruncSeries TruncSeries::one(std::size_t order) {
  TruncSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncSeries TruncSeries::monomial(const BiPoly& c, std::size_t k, std::size_t order) {
  TruncSeries s(order);
  if (k <= order) s.coeffs_[k] = c;
  return s;
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BiPoly& c) { return c.is_zero(); });
}

TruncSeries TruncSeries::truncated(std::size_t order) const {
  std::vector<BiPoly> cs(coeffs_.begin(),
                         coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
  return TruncSeries(std::move(cs));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const BiPoly& c) {
  for (auto& coeff : coeffs_) coeff *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  TruncSeries result(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      result.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return result;
}

TruncSeries operator-(TruncSeries a) {
  for (auto& c : a.coeffs_) c = -std::move(c);
  return a;
}

TruncSeries derivative(const TruncSeries& a) {
  if (a.order() == 0) throw std::invalid_argument("derivative of an order-0 series");
  std::vector<BiPoly> cs;
  cs.reserve(a.order());
  for (std::size_t k = 1; k <= a.order(); ++k) cs.push_back(a[k] * BigRational(k));
  return TruncSeries(std::move(cs));
}

TruncSeries exp(const TruncSeries& a) {
  if (!a[0].is_zero()) throw std::domain_error("exp of a series with nonzero constant term");
  const std::size_t order = a.order();
  std::vector<BiPoly> e(order + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    BiPoly sum;
    for (std::size_t j = 1; j <= k; ++j) {
      if (a[j].is_zero() || e[k - j].is_zero()) continue;
      sum += (a[j] * e[k - j]) * BigRational(j);
    }
    e[k] = sum * BigRational(BigInt(1), BigInt(static_cast<unsigned long>(k)));
  }
  return TruncSeries(std::move(e));
}

}  // namespace wbcc
