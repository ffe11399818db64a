#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mps {

/// Exact rational number num/den with den > 0 and gcd(num, den) = 1.
/// Magnitudes are kept small (orders and ratios of desk-scale matrices);
/// arithmetic that would overflow 64 bits throws InvalidArgument.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_half_integer() const noexcept { return den_ == 1 || den_ == 2; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "num/den", always with an explicit denominator ("2/1", "-1/2").
  std::string str() const;

  /// Accepts "a/b", "a" and finite decimals such as "2.5".
  static Rational parse(std::string_view text);

  /// Closest rational with denominator dividing max_den, if it lies within tol of x.
  static bool try_snap(double x, std::int64_t max_den, double tol, Rational& out);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace mps
