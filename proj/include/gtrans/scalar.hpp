#pragma once

#include <cmath>
#include <concepts>
#include <limits>

namespace gtrans {

/// Per-realization facts the engines need beyond plain arithmetic.
///
/// Specializations provide:
///   exact      - true when arithmetic is exact (zero tests are structural)
///   magnitude  - |x| as a double, used only for breakdown thresholds
///   finite     - false for overflowed or NaN values
///   to_double  - lossy conversion for reporting
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double magnitude(double x) noexcept { return std::abs(x); }
  static bool finite(double x) noexcept { return std::isfinite(x); }
  static double to_double(double x) noexcept { return x; }
};

/// The arithmetic contract every engine is generic over.
template <class T>
concept field_scalar = std::regular<T> && std::constructible_from<T, int> &&
                       requires(const T& a, const T& b) {
                         { a + b } -> std::convertible_to<T>;
                         { a - b } -> std::convertible_to<T>;
                         { a * b } -> std::convertible_to<T>;
                         { a / b } -> std::convertible_to<T>;
                         { -a } -> std::convertible_to<T>;
                         { scalar_traits<T>::exact } -> std::convertible_to<bool>;
                         { scalar_traits<T>::magnitude(a) } -> std::convertible_to<double>;
                         { scalar_traits<T>::finite(a) } -> std::convertible_to<bool>;
                         { scalar_traits<T>::to_double(a) } -> std::convertible_to<double>;
                       };

/// True when `value` cannot serve as a divisor.
///
/// Exact realizations: `value == 0`. Floating realizations: non-finite, or
/// |value| <= eps_mach * scale where `scale()` is the largest magnitude among
/// the operands that produced `value`. The scale callback is only evaluated
/// for floating realizations and never touches the scalar arithmetic, so it
/// does not show up in operation counts.
template <field_scalar T, class ScaleFn>
bool vanishes(const T& value, ScaleFn&& scale) {
  using traits = scalar_traits<T>;
  if constexpr (traits::exact) {
    return value == T(0);
  } else {
    if (!traits::finite(value)) return true;
    return traits::magnitude(value) <= std::numeric_limits<double>::epsilon() * scale();
  }
}

template <field_scalar T>
bool vanishes(const T& value) {
  return vanishes(value, [&] { return scalar_traits<T>::magnitude(value); });
}

template <field_scalar T>
double magnitude(const T& x) {
  return scalar_traits<T>::magnitude(x);
}

template <field_scalar T>
bool is_finite(const T& x) {
  return scalar_traits<T>::finite(x);
}

template <field_scalar T>
double to_double(const T& x) {
  return scalar_traits<T>::to_double(x);
}

}  // namespace gtrans
