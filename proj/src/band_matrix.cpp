#include "wbcc/band_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace wbcc {

BandMatrix::BandMatrix(unsigned r, std::size_t n) : r_(r), n_(n), entries_(n * n) {}

BandMatrix BandMatrix::with_entry(std::size_t row, std::size_t col, BiPoly value) const {
  if (row >= n_ || col >= n_) throw std::out_of_range("matrix index out of range");
  BandMatrix copy = *this;
  copy.at(row, col) = std::move(value);
  return copy;
}

BandMatrix BandMatrix::with_odd_lines_negated() const {
  BandMatrix copy = *this;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      // 0-based even index == 1-based odd line
      const bool flip = (i % 2 == 0) != (j % 2 == 0);
      if (flip) copy.at(i, j) = -copy.at(i, j);
    }
  }
  return copy;
}

std::string BandMatrix::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != 0) out += '\t';
      const BiPoly& e = (*this)(i, j);
      out += e.is_zero() ? std::string(".") : e.to_string();
    }
    out += '\n';
  }
  return out;
}

BandMatrix build_matrix(unsigned r, std::size_t n, SubdiagonalRule rule) {
  if (r < 2) throw std::invalid_argument("band parameter r must be >= 2");
  BandMatrix m(r, n);
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  for (std::size_t i = 1; i <= n; ++i) {
    if (i + 1 <= n) m.at(i - 1, i) = BiPoly(-static_cast<long>(i));
    for (std::size_t j = (i + 2 > r ? i + 2 - r : 1); j <= i; ++j) m.at(i - 1, j - 1) = x;
    if (i >= r) {
      const long shift = static_cast<long>(i - r);
      m.at(i - 1, i - r) = y + BiPoly(rule == SubdiagonalRule::Increasing ? shift : -shift);
    }
  }
  return m;
}

namespace {

struct LeibnizExpansion {
  const BandMatrix& m;
  std::vector<bool> used;
  BiPoly total;

  // Rows are assigned in order; `inversions` counts pairs (a < b) with
  // col(a) > col(b) among assigned rows.
  void expand(std::size_t row, const BiPoly& product, std::size_t inversions) {
    const std::size_t n = m.size();
    if (row == n) {
      if (inversions % 2 == 0) {
        total += product;
      } else {
        total -= product;
      }
      return;
    }
    std::size_t used_above = 0;
    for (std::size_t col = n; col-- > 0;) {
      if (used[col]) {
        ++used_above;
        continue;
      }
      const BiPoly& entry = m(row, col);
      if (entry.is_zero()) continue;
      used[col] = true;
      expand(row + 1, product * entry, inversions + used_above);
      used[col] = false;
    }
  }
};

}  // namespace

BiPoly det_leibniz(const BandMatrix& m) {
  if (m.size() > kLeibnizMaxSize) {
    throw std::invalid_argument("Leibniz expansion limited to n <= " + std::to_string(kLeibnizMaxSize));
  }
  LeibnizExpansion e{m, std::vector<bool>(m.size(), false), BiPoly{}};
  e.expand(0, BiPoly(1), 0);
  return e.total;
}

BiPoly det_bareiss(const BandMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return BiPoly(1);
  std::vector<BiPoly> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> BiPoly& { return a[i * n + j]; };

  BiPoly previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const BiPoly pivot = at(k, k);
    if (pivot.is_zero()) {
      throw std::logic_error("Bareiss: zero pivot at step " + std::to_string(k + 1));
    }
    const bool unit_previous = previous == BiPoly(1);
    for (std::size_t i = k + 1; i < n; ++i) {
      const BiPoly factor = at(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        BiPoly value = at(i, j) * pivot;
        if (!factor.is_zero() && !at(k, j).is_zero()) value -= factor * at(k, j);
        at(i, j) = unit_previous ? std::move(value) : exact_divide(value, previous);
      }
      at(i, k) = BiPoly{};
    }
    previous = pivot;
  }
  return at(n - 1, n - 1);
}

}  // namespace wbcc
