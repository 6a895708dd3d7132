#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "scalar.hpp"

namespace gtrans {

/// Exact arbitrary-precision rational number.
///
/// Always stored in lowest terms with a positive denominator; zero is 0/1.
/// Because normalization happens after every operation, `==` is structural
/// equality. Division by zero throws `division_by_zero` rather than trapping.
class rational {
public:
  rational() = default;

  template <std::signed_integral I>
  rational(I v) : q_(static_cast<long>(v)) {}

  template <std::unsigned_integral I>
  rational(I v) : q_(static_cast<unsigned long>(v)) {}

  rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw division_by_zero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Exact value of a finite double (every double is a dyadic rational).
  static rational from_double(double d) {
    if (!std::isfinite(d)) throw argument_error("cannot convert a non-finite double to rational");
    rational r;
    r.q_ = mpq_class(d);
    return r;
  }

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }

  double to_double() const { return q_.get_d(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  int sign() const { return sgn(q_); }

  rational abs() const {
    rational r;
    r.q_ = ::abs(q_);
    return r;
  }

  rational& operator+=(const rational& o) {
    q_ += o.q_;
    return *this;
  }
  rational& operator-=(const rational& o) {
    q_ -= o.q_;
    return *this;
  }
  rational& operator*=(const rational& o) {
    q_ *= o.q_;
    return *this;
  }
  rational& operator/=(const rational& o) {
    if (o.sign() == 0) throw division_by_zero();
    q_ /= o.q_;
    return *this;
  }

  friend rational operator+(rational a, const rational& b) { return a += b; }
  friend rational operator-(rational a, const rational& b) { return a -= b; }
  friend rational operator*(rational a, const rational& b) { return a *= b; }
  friend rational operator/(rational a, const rational& b) { return a /= b; }

  friend rational operator-(const rational& a) {
    rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const rational& a, const rational& b) { return cmp(a.q_, b.q_) == 0; }

  friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const rational& r) { return os << r.to_string(); }

private:
  mpq_class q_;
};

template <>
struct scalar_traits<rational> {
  static constexpr bool exact = true;
  static double magnitude(const rational& x) { return std::abs(x.to_double()); }
  static bool finite(const rational&) noexcept { return true; }
  static double to_double(const rational& x) { return x.to_double(); }
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Optional leading sign followed by one or more digits.
inline mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits))
    throw parse_error("malformed rational '" + std::string(whole) + "'", std::string(whole));
  mpz_class v(std::string(digits), 10);
  return negative ? mpz_class(-v) : v;
}

inline mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace detail

/// Parses an integer ("-7"), a fraction ("4/6" -> 2/3) or a finite decimal
/// with optional exponent ("0.25" -> 1/4, "1.5e-3" -> 3/2000). Surrounding
/// whitespace is ignored.
inline rational rational_from_text(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  const auto last = text.find_last_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    throw parse_error("empty rational text", std::string(text));
  const std::string_view s = text.substr(first, last - first + 1);
  const auto bad = [&] { return parse_error("malformed rational '" + std::string(s) + "'", std::string(s)); };

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const mpz_class num = detail::parse_integer(s.substr(0, slash), s);
    const mpz_class den = detail::parse_integer(s.substr(slash + 1), s);
    if (den == 0) throw parse_error("zero denominator in '" + std::string(s) + "'", std::string(s));
    return rational(num, den);
  }

  std::string_view mantissa = s;
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    std::string_view exp_text = s.substr(e + 1);
    bool negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!detail::all_digits(exp_text) || exp_text.size() > 6) throw bad();
    exponent = std::stol(std::string(exp_text));
    if (negative) exponent = -exponent;
  }

  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string_view int_part = mantissa;
  std::string_view frac_part;
  if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw bad();
  if (!int_part.empty() && !detail::all_digits(int_part)) throw bad();
  if (!frac_part.empty() && !detail::all_digits(frac_part)) throw bad();

  const std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class num(digits, 10);
  if (negative) num = -num;
  exponent -= static_cast<long>(frac_part.size());
  if (exponent >= 0) return rational(num * detail::pow10(static_cast<unsigned long>(exponent)), mpz_class(1));
  return rational(num, detail::pow10(static_cast<unsigned long>(-exponent)));
}

}  // namespace gtrans
