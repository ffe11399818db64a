#include "mps/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>

#include "mps/errors.hpp"

namespace mps {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::InvalidArgument, "rational overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::InvalidArgument, "rational overflow");
  return r;
}

std::int64_t parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos)
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 15) throw Error(ErrorCode::ParseError, "too many decimals: '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::string digits(text.substr(0, dot));
    const bool negative = !digits.empty() && digits.front() == '-';
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    const std::int64_t whole = parse_int(digits);
    const std::int64_t part = frac.empty() ? 0 : parse_int(frac);
    if (!frac.empty() && (frac.front() == '-' || frac.front() == '+'))
      throw Error(ErrorCode::ParseError, "bad decimal: '" + std::string(text) + "'");
    const std::int64_t mag = checked_add(checked_mul(std::llabs(whole), scale), part);
    return Rational(negative ? -mag : mag, scale);
  }
  return Rational(parse_int(text));
}

bool Rational::try_snap(double x, std::int64_t max_den, double tol, Rational& out) {
  if (!std::isfinite(x)) return false;
  for (std::int64_t den = 1; den <= max_den; ++den) {
    if (max_den % den != 0) continue;
    const double scaled = std::round(x * static_cast<double>(den));
    if (std::fabs(scaled / static_cast<double>(den) - x) <= tol) {
      out = Rational(static_cast<std::int64_t>(scaled), den);
      return true;
    }
  }
  return false;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                  checked_mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
}

}  // namespace mps
