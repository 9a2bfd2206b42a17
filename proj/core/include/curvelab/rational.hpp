#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace curvelab {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(const Integer& value) : value_(value) {}  // NOLINT
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  /// Accepts "p", "-p" and "p/q".
  static Rational parse(std::string_view text);

  const mpq_class& raw() const noexcept { return value_; }
  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  bool is_integer() const noexcept { return value_.get_den() == 1; }
  int sign() const noexcept { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational pow(unsigned exponent) const;

  /// Canonical "p/q" (or "p" when integral); never a decimal.
  std::string str() const;
  /// Decimal approximation, only for human-facing `--approx` output.
  double approx() const { return value_.get_d(); }

 private:
  mpq_class value_;
};

Integer binomial(unsigned n, unsigned k);

}  // namespace curvelab
