#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lpviz {

using Integer = boost::multiprecision::cpp_int;

/// Exact fraction kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : num_(value) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(Integer value) : num_(std::move(value)) {}

  /// Throws std::domain_error when `den` is zero.
  Rational(Integer num, Integer den);

  /// Accepts integers ("-3"), fractions ("6/4"), and decimals with an
  /// optional exponent ("0.125", "-1.5e2"). Throws ParseError.
  static Rational parse(std::string_view text);

  /// Accepts only the exact output of to_string(): reduced "p/q", or "p" when
  /// q = 1, no sign on zero, no leading zeros or '+'.
  static std::optional<Rational> parse_canonical(std::string_view text);

  const Integer& numerator() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }

  Integer floor() const;
  Integer ceil() const;

  /// Nearest double; relative error below 2^-52.
  double to_double() const;

  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  Integer num_{0};
  Integer den_{1};
};

Rational abs(const Rational& value);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace lpviz
