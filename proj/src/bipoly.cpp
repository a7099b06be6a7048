#include "wbcc/bipoly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace wbcc {

BiPoly::BiPoly(const BigRational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{0, 0}, constant);
}

BiPoly BiPoly::monomial(const BigRational& coeff, std::uint32_t dx, std::uint32_t dy) {
  BiPoly p;
  p.add_term(Monomial{dx, dy}, coeff);
  return p;
}

BigRational BiPoly::coefficient(std::uint32_t dx, std::uint32_t dy) const {
  auto it = terms_.find(Monomial{dx, dy});
  return it == terms_.end() ? BigRational{} : it->second;
}

const std::pair<const Monomial, BigRational>& BiPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return *terms_.begin();
}

std::uint64_t BiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

std::uint32_t BiPoly::degree_x() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.dx);
  return d;
}

std::uint32_t BiPoly::degree_y() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.dy);
  return d;
}

bool BiPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_integer(); });
}

void BiPoly::add_term(const Monomial& m, const BigRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  *this = *this * o;
  return *this;
}

BiPoly& BiPoly::operator*=(const BigRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly result;
  if (a.is_zero() || b.is_zero()) return result;
  // Accumulate without cancellation checks, then sweep zeros once.
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const Monomial m{ma.dx + mb.dx, ma.dy + mb.dy};
      auto [it, inserted] = result.terms_.try_emplace(m);
      it->second += ca * cb;
    }
  }
  std::erase_if(result.terms_, [](const auto& t) { return t.second.is_zero(); });
  return result;
}

BiPoly operator-(BiPoly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

namespace {

BigRational power(const BigRational& base, std::uint32_t e) {
  BigRational result = 1;
  BigRational b = base;
  while (e != 0) {
    if (e & 1u) result *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return result;
}

// Lazily extended table of base^0, base^1, ...
template <typename T>
class PowerCache {
 public:
  explicit PowerCache(T base) : powers_{T(1)}, base_(std::move(base)) {}
  const T& operator[](std::uint32_t e) {
    while (powers_.size() <= e) powers_.push_back(powers_.back() * base_);
    return powers_[e];
  }

 private:
  std::vector<T> powers_;
  T base_;
};

}  // namespace

BigRational BiPoly::evaluate(const BigRational& x0, const BigRational& y0) const {
  BigRational sum;
  for (const auto& [m, c] : terms_) {
    sum += c * power(x0, m.dx) * power(y0, m.dy);
  }
  return sum;
}

BiPoly BiPoly::substitute(const BiPoly& xs, const BiPoly& ys) const {
  PowerCache<BiPoly> xp(xs);
  PowerCache<BiPoly> yp(ys);
  BiPoly result;
  for (const auto& [m, c] : terms_) {
    result += c * (xp[m.dx] * yp[m.dy]);
  }
  return result;
}

namespace {

void append_monomial(std::string& out, const Monomial& m) {
  bool first = true;
  auto factor = [&](const char* var, std::uint32_t e) {
    if (e == 0) return;
    if (!first) out += '*';
    out += var;
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
    first = false;
  };
  factor("x", m.dx);
  factor("y", m.dy);
}

}  // namespace

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const BigRational magnitude = negative ? -c : c;
    const bool constant = m.dx == 0 && m.dy == 0;
    if (constant) {
      out += magnitude.to_string();
      continue;
    }
    if (!magnitude.is_one()) {
      out += magnitude.to_string();
      out += '*';
    }
    append_monomial(out, m);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

BiPoly exact_divide(const BiPoly& dividend, const BiPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& [lead_m, lead_c] = divisor.leading_term();
  BiPoly remainder = dividend;
  BiPoly quotient;
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = remainder.leading_term();
    if (!lead_m.divides(rm)) {
      throw std::domain_error("non-exact polynomial division: (" + dividend.to_string() + ") / (" +
                              divisor.to_string() + ")");
    }
    const BiPoly step = BiPoly::monomial(rc / lead_c, rm.dx - lead_m.dx, rm.dy - lead_m.dy);
    remainder -= step * divisor;
    quotient += step;
  }
  return quotient;
}

BiPoly pow(const BiPoly& base, unsigned exponent) {
  BiPoly result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace wbcc
