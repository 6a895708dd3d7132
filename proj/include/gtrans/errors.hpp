#pragma once

#include <stdexcept>
#include <string>

namespace gtrans {

/// Bad sizes, out-of-range indices, caps exceeded.
class argument_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed numeric text. `token()` is the offending input.
class parse_error : public std::invalid_argument {
public:
  parse_error(const std::string& message, std::string token)
      : std::invalid_argument(message), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

private:
  std::string token_;
};

/// A zero u_j was supplied where it is needed as an initial divisor.
class initialization_error : public std::domain_error {
public:
  initialization_error(const std::string& message, std::size_t index)
      : std::domain_error(message), index_(index) {}

  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

/// Raised by the exact and counting realizations on division by zero.
class division_by_zero : public std::domain_error {
public:
  division_by_zero() : std::domain_error("division by zero") {}
};

/// A determinant ratio in the reference formulas has a zero denominator.
class singular_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

}  // namespace gtrans
