#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace triaut {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// The coefficient field is fixed to Q. Another exact characteristic-zero
/// field would slot in by replacing this class behind the same interface.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws Error(DivisionByZero) when `den` is zero.
  Scalar(long num, long den);
  explicit Scalar(mpq_class value);

  /// Parses `-?digits(/digits)?`; nullopt on malformed input or zero denominator.
  static std::optional<Scalar> parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }

  /// Throws Error(DivisionByZero) on zero.
  Scalar inverse() const;
  Scalar pow(long exponent) const;

  Scalar& operator+=(const Scalar& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Scalar& operator-=(const Scalar& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Scalar& operator*=(const Scalar& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const { return Scalar(mpq_class(-value_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace triaut
