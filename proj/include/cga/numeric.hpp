#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cga {

/// Neumaier (improved Kahan) compensated summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// A quantity carried with its natural logarithm so that values far below
/// the double range stay meaningful.
struct LogValue {
  double value;
  double log;
};

inline LogValue from_log(double log_value) { return {std::exp(log_value), log_value}; }

/// Shortest decimal text that round-trips to `x`.
inline std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("cga: cannot format number");
  return std::string(buf, ptr);
}

/// Like format_real but always shows a decimal point for finite integral values
/// ("2.0" rather than "2").
inline std::string format_real_point(double x) {
  std::string s = format_real(x);
  if (std::isfinite(x) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

inline double parse_real(std::string_view text) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("cga: not a number: '" + std::string(text) + "'");
  }
  return out;
}

/// Exact rational with positive denominator, used for the cluster thresholds
/// alpha and beta so that boundary cases such as 1 >= 0.5 * 2 compare exactly.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den == 0) throw std::domain_error("cga: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  /// Accepts a decimal ("0.5", "1", ".25", "1e-2") or a fraction ("1/3").
  static Rational parse(std::string_view text) {
    const std::string original(text);
    auto fail = [&] { throw std::invalid_argument("cga: not a rational: '" + original + "'"); };
    if (text.empty()) fail();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      std::int64_t n = 0, d = 0;
      auto a = std::from_chars(text.data(), text.data() + slash, n);
      auto b = std::from_chars(text.data() + slash + 1, text.data() + text.size(), d);
      if (a.ec != std::errc{} || a.ptr != text.data() + slash || b.ec != std::errc{} ||
          b.ptr != text.data() + text.size() || d == 0) {
        fail();
      }
      return Rational(n, d);
    }
    std::int64_t exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      auto r = std::from_chars(text.data() + e + 1, text.data() + text.size(), exponent);
      if (r.ec != std::errc{} || r.ptr != text.data() + text.size()) fail();
      text = text.substr(0, e);
    }
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
      negative = text.front() == '-';
      text.remove_prefix(1);
    }
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool seen_dot = false;
    bool seen_digit = false;
    for (char ch : text) {
      if (ch == '.') {
        if (seen_dot) fail();
        seen_dot = true;
        continue;
      }
      if (ch < '0' || ch > '9') fail();
      seen_digit = true;
      if (__builtin_mul_overflow(num, 10, &num) || __builtin_add_overflow(num, ch - '0', &num)) {
        fail();
      }
      if (seen_dot && __builtin_mul_overflow(den, 10, &den)) fail();
    }
    if (!seen_digit) fail();
    for (; exponent > 0 && num != 0; --exponent) {
      if (__builtin_mul_overflow(num, 10, &num)) fail();
    }
    for (; exponent < 0; ++exponent) {
      if (__builtin_mul_overflow(den, 10, &den)) fail();
    }
    return Rational(negative ? -num : num, den);
  }

  /// Exact value of the shortest decimal representation of `x`.
  static Rational from_double(double x) { return parse(format_real(x)); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Sign of (count - this * size), computed exactly.
  int compare_count(std::uint64_t count, std::uint64_t size) const noexcept {
    const __int128 lhs = static_cast<__int128>(count) * den_;
    const __int128 rhs = static_cast<__int128>(num_) * static_cast<__int128>(size);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace cga
