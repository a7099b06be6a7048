#include "wbcc/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace wbcc {

BigInt parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw std::invalid_argument("empty integer literal");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed integer literal: " + std::string(text));
    }
  }
  std::string s(text.front() == '+' ? text.substr(1) : text);
  return BigInt(s, 10);
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::invalid_argument("zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return BigRational(parse_integer(text));
  }
  const BigInt num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("denominator must be unsigned: " + std::string(text));
  }
  return BigRational(num, parse_integer(den_text));
}

BigInt BigRational::to_integer() const {
  if (!is_integer()) {
    throw std::domain_error("not an integer: " + to_string());
  }
  return value_.get_num();
}

std::string BigRational::to_string() const { return value_.get_str(10); }

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) {
    throw std::domain_error("division by zero");
  }
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

BigInt factorial(unsigned long n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace wbcc
