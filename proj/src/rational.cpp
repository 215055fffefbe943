#include "lpviz/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>

#include "lpviz/errors.hpp"

namespace lpviz {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view digits) {
  Integer out = 0;
  for (char ch : digits) {
    out *= 10;
    out += ch - '0';
  }
  return out;
}

Integer pow10(unsigned exponent) {
  Integer out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= 10;
  return out;
}

ParseError bad_number(std::string_view text) {
  return ParseError("not a number: \"" + std::string(text) + "\"");
}

}  // namespace

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Integer g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw bad_number(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view p = s.substr(0, slash);
    std::string_view q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw bad_number(text);
    Integer den = parse_integer(q);
    if (den.is_zero()) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    Integer num = parse_integer(p);
    return Rational(negative ? Integer(-num) : num, den);
  }

  long long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) throw bad_number(text);
    exponent = std::stoll(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw bad_number(text);
  if (!int_part.empty() && !all_digits(int_part)) throw bad_number(text);
  if (!frac_part.empty() && !all_digits(frac_part)) throw bad_number(text);

  std::string digits(int_part);
  digits += frac_part;
  Integer num = parse_integer(digits);
  exponent -= static_cast<long long>(frac_part.size());
  if (negative) num = -num;
  if (exponent >= 0) return Rational(num * pow10(static_cast<unsigned>(exponent)), Integer(1));
  return Rational(num, pow10(static_cast<unsigned>(-exponent)));
}

std::optional<Rational> Rational::parse_canonical(std::string_view text) {
  auto canonical_digits = [](std::string_view d) {
    return all_digits(d) && (d.size() == 1 || d.front() != '0');
  };
  std::string_view s = text;
  bool negative = !s.empty() && s.front() == '-';
  if (negative) s.remove_prefix(1);
  std::string_view p = s;
  std::string_view q;
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    p = s.substr(0, slash);
    q = s.substr(slash + 1);
    if (!canonical_digits(q) || q == "0" || q == "1") return std::nullopt;
  }
  if (!canonical_digits(p)) return std::nullopt;
  if (negative && p == "0") return std::nullopt;

  Integer num = parse_integer(p);
  Integer den = q.empty() ? Integer(1) : parse_integer(q);
  if (boost::multiprecision::gcd(num, den) != 1) return std::nullopt;
  Rational out;
  out.num_ = negative ? Integer(-num) : num;
  out.den_ = den;
  return out;
}

Integer Rational::floor() const {
  Integer q = num_ / den_;  // truncates toward zero
  if (num_.sign() < 0 && q * den_ != num_) q -= 1;
  return q;
}

Integer Rational::ceil() const {
  Integer q = num_ / den_;
  if (num_.sign() > 0 && q * den_ != num_) q += 1;
  return q;
}

double Rational::to_double() const {
  if (num_.is_zero()) return 0.0;
  Integer a = boost::multiprecision::abs(num_);
  Integer d = den_;
  // Scale so the integer quotient carries 62-63 significant bits, then fold
  // the remainder into a sticky bit so the uint64 -> double conversion rounds
  // correctly.
  long long shift = 62 - (static_cast<long long>(boost::multiprecision::msb(a)) -
                          static_cast<long long>(boost::multiprecision::msb(d)));
  if (shift > 0) {
    a <<= static_cast<unsigned>(shift);
  } else if (shift < 0) {
    d <<= static_cast<unsigned>(-shift);
  }
  Integer q;
  Integer r;
  boost::multiprecision::divide_qr(a, d, q, r);
  auto bits = q.convert_to<std::uint64_t>();
  if (!r.is_zero()) bits |= 1U;
  double out = std::ldexp(static_cast<double>(bits), static_cast<int>(-shift));
  return num_.sign() < 0 ? -out : out;
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_.is_zero()) throw std::domain_error("division by zero");
  Integer rhs_num = rhs.num_;
  num_ *= rhs.den_;
  den_ *= rhs_num;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_.compare(b.num_) <=> 0;
  const Integer lhs = a.num_ * b.den_;
  return lhs.compare(b.num_ * a.den_) <=> 0;
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace lpviz
