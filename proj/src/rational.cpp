#include "sabar/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace sabar {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
  s = s.substr(start);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto parse_int = [](const std::string& digits) {
    if (digits.empty()) throw std::invalid_argument("malformed rational literal");
    std::size_t i = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
    if (i == digits.size()) throw std::invalid_argument("malformed rational literal");
    for (std::size_t j = i; j < digits.size(); ++j) {
      if (digits[j] < '0' || digits[j] > '9') {
        throw std::invalid_argument("malformed rational literal '" + digits + "'");
      }
    }
    return Integer(digits[0] == '+' ? digits.substr(1) : digits);
  };

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const Integer den = parse_int(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
    return Rational(parse_int(s.substr(0, slash)), den);
  }
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed decimal literal '" + s + "'");
    }
    const bool negative = !whole.empty() && whole[0] == '-';
    const std::string whole_digits =
        (whole.empty() || whole == "-" || whole == "+") ? std::string("0") : whole;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer w = parse_int(whole_digits);
    if (w < 0) w = -w;
    Integer n = w * scale + Integer(frac);
    if (negative) n = -n;
    return Rational(n, scale);
  }
  return Rational(parse_int(s));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

Integer Rational::ceil() const {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer n = value_.get_num();
  const bool negative = n < 0;
  if (negative) n = -n;
  Integer scaled;
  mpz_tdiv_q(scaled.get_mpz_t(), Integer(n * scale).get_mpz_t(), value_.get_den_mpz_t());
  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (negative && scaled != 0 ? "-" : "") + body;
}

std::size_t Rational::hash() const {
  const std::size_t h1 = std::hash<std::string>{}(value_.get_num().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(value_.get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational pow(const Rational& base, unsigned exp) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exp);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exp);
  return Rational(n, d);
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) return simplest_between(hi, lo);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_between(-hi, -lo);
  const Integer c = lo.ceil();
  if (Rational(c) <= hi) return Rational(c);
  const Rational fl(lo.floor());
  // lo and hi share the open unit interval (fl, fl + 1).
  return fl + Rational(1) / simplest_between(Rational(1) / (hi - fl), Rational(1) / (lo - fl));
}

}  // namespace sabar
