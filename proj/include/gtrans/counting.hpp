#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "errors.hpp"
#include "scalar.hpp"

namespace gtrans {

/// Arithmetic tallies for one run. Subtractions are counted as additions.
struct op_counts {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  std::uint64_t divisions = 0;

  std::uint64_t total() const noexcept { return additions + multiplications + divisions; }

  friend bool operator==(const op_counts&, const op_counts&) = default;

  friend std::ostream& operator<<(std::ostream& os, const op_counts& c) {
    return os << "{add:" << c.additions << ", mul:" << c.multiplications << ", div:" << c.divisions << "}";
  }
};

namespace detail {
inline thread_local op_counts* active_counts = nullptr;
}

/// Installs an `op_counts` accumulator for the current thread while alive.
/// Scopes nest; the innermost one receives the tallies.
class counting_scope {
public:
  counting_scope() : previous_(detail::active_counts) { detail::active_counts = &counts_; }
  ~counting_scope() { detail::active_counts = previous_; }

  counting_scope(const counting_scope&) = delete;
  counting_scope& operator=(const counting_scope&) = delete;

  const op_counts& counts() const noexcept { return counts_; }

private:
  op_counts counts_;
  op_counts* previous_;
};

/// Double precision that reports every +, -, *, / to the active scope.
/// Results are bit-identical to plain `double`. Negation, comparison and
/// construction are free. Dividing by an exact zero throws
/// `division_by_zero` and is not tallied.
class counted {
public:
  constexpr counted() = default;
  constexpr counted(double v) noexcept : v_(v) {}

  constexpr double value() const noexcept { return v_; }

  friend counted operator+(counted a, counted b) {
    tally(&op_counts::additions);
    return counted(a.v_ + b.v_);
  }
  friend counted operator-(counted a, counted b) {
    tally(&op_counts::additions);
    return counted(a.v_ - b.v_);
  }
  friend counted operator*(counted a, counted b) {
    tally(&op_counts::multiplications);
    return counted(a.v_ * b.v_);
  }
  friend counted operator/(counted a, counted b) {
    if (b.v_ == 0.0) throw division_by_zero();
    tally(&op_counts::divisions);
    return counted(a.v_ / b.v_);
  }
  friend constexpr counted operator-(counted a) noexcept { return counted(-a.v_); }

  friend constexpr bool operator==(counted a, counted b) noexcept { return a.v_ == b.v_; }
  friend constexpr std::partial_ordering operator<=>(counted a, counted b) noexcept { return a.v_ <=> b.v_; }

  friend std::ostream& operator<<(std::ostream& os, counted c) { return os << c.v_; }

private:
  static void tally(std::uint64_t op_counts::*field) noexcept {
    if (detail::active_counts != nullptr) ++(detail::active_counts->*field);
  }

  double v_ = 0.0;
};

template <>
struct scalar_traits<counted> {
  static constexpr bool exact = false;
  static double magnitude(counted x) noexcept { return std::abs(x.value()); }
  static bool finite(counted x) noexcept { return std::isfinite(x.value()); }
  static double to_double(counted x) noexcept { return x.value(); }
};

/// Thrown by `with_counting` when the computation divided by zero.
class breakdown_error : public std::domain_error {
public:
  breakdown_error(const std::string& what, op_counts partial)
      : std::domain_error(what), partial_(partial) {}

  /// Tallies accumulated before the failing division.
  const op_counts& partial_counts() const noexcept { return partial_; }

private:
  op_counts partial_;
};

/// Runs `computation` inside a fresh counting scope and returns its result
/// together with the tallies.
template <class F>
auto with_counting(F&& computation) {
  counting_scope scope;
  try {
    auto result = std::forward<F>(computation)();
    return std::pair{std::move(result), scope.counts()};
  } catch (const division_by_zero&) {
    throw breakdown_error("division by zero inside counted computation", scope.counts());
  }
}

}  // namespace gtrans
