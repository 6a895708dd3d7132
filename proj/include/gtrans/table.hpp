#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace gtrans {

enum class entry_status { valid, breakdown, not_computed };

inline std::string_view to_string(entry_status s) {
  switch (s) {
    case entry_status::valid: return "valid";
    case entry_status::breakdown: return "breakdown";
    case entry_status::not_computed: return "not_computed";
  }
  return "unknown";
}

/// Breakdown dominates, then not_computed.
constexpr entry_status merge(entry_status a, entry_status b) noexcept {
  if (a == entry_status::breakdown || b == entry_status::breakdown) return entry_status::breakdown;
  if (a == entry_status::not_computed || b == entry_status::not_computed) return entry_status::not_computed;
  return entry_status::valid;
}

/// One cell of a recursion table.
///
/// `vanishing` marks a value that is zero to working precision; any
/// recursion step that divides by it yields a breakdown.
template <class T>
struct entry {
  T value{};
  entry_status status = entry_status::not_computed;
  bool vanishing = false;

  bool valid() const noexcept { return status == entry_status::valid; }

  static entry make(T v, bool vanishing = false) { return entry{std::move(v), entry_status::valid, vanishing}; }
  static entry failed(entry_status s) { return entry{T{}, s, false}; }
};

template <class... E>
entry_status inputs_status(const E&... inputs) {
  entry_status s = entry_status::valid;
  ((s = merge(s, inputs.status)), ...);
  return s;
}

/// Ragged table addressed as (j, n): column n holds rows j = 0..size(n)-1.
/// Columns start at `first_column` (0 or 1).
template <class T>
class triangle {
public:
  triangle() = default;
  triangle(std::size_t first_column, std::vector<std::size_t> column_sizes) : first_(first_column) {
    columns_.reserve(column_sizes.size());
    for (auto size : column_sizes) columns_.emplace_back(size);
  }

  std::size_t first_column() const noexcept { return first_; }
  std::size_t end_column() const noexcept { return first_ + columns_.size(); }
  std::size_t column_size(std::size_t n) const { return has_column(n) ? columns_[n - first_].size() : 0; }

  bool has_column(std::size_t n) const noexcept { return n >= first_ && n < end_column(); }
  bool contains(std::size_t j, std::size_t n) const noexcept { return has_column(n) && j < columns_[n - first_].size(); }

  const entry<T>& at(std::size_t j, std::size_t n) const {
    if (!contains(j, n))
      throw argument_error("table index (" + std::to_string(j) + "," + std::to_string(n) + ") out of range");
    return columns_[n - first_][j];
  }
  entry<T>& at(std::size_t j, std::size_t n) {
    return const_cast<entry<T>&>(static_cast<const triangle&>(*this).at(j, n));
  }

  /// Missing cells read as not_computed rather than throwing.
  const entry<T>& get(std::size_t j, std::size_t n) const {
    static const entry<T> absent{};
    return contains(j, n) ? columns_[n - first_][j] : absent;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t c = 0; c < columns_.size(); ++c)
      for (std::size_t j = 0; j < columns_[c].size(); ++j) f(j, c + first_, columns_[c][j]);
  }

  template <class U, class F>
  triangle<U> transform(F&& f) const {
    std::vector<std::size_t> sizes;
    for (const auto& col : columns_) sizes.push_back(col.size());
    triangle<U> out(first_, sizes);
    for_each([&](std::size_t j, std::size_t n, const entry<T>& e) {
      auto& o = out.at(j, n);
      o.status = e.status;
      o.vanishing = e.vanishing;
      if (e.valid()) o.value = f(e.value);
    });
    return out;
  }

private:
  std::size_t first_ = 0;
  std::vector<std::vector<entry<T>>> columns_;
};

/// Which route produced a table. `direct` is the linear-system oracle.
enum class engine { fs_qd, rs, epsilon, direct };

inline std::string_view to_string(engine m) {
  switch (m) {
    case engine::fs_qd: return "fsqd";
    case engine::rs: return "rs";
    case engine::epsilon: return "eps";
    case engine::direct: return "direct";
  }
  return "unknown";
}

inline std::optional<engine> engine_from_string(std::string_view s) {
  if (s == "fsqd") return engine::fs_qd;
  if (s == "rs") return engine::rs;
  if (s == "eps") return engine::epsilon;
  return std::nullopt;
}

/// Triangular array of extrapolated values A_n^(j). Column 0 always holds
/// the input A_j.
template <class T>
class extrapolation_table {
public:
  extrapolation_table() = default;
  extrapolation_table(engine method, triangle<T> cells) : method_(method), cells_(std::move(cells)) {}

  engine method() const noexcept { return method_; }
  const triangle<T>& cells() const noexcept { return cells_; }
  triangle<T>& cells() noexcept { return cells_; }

  std::size_t columns() const noexcept { return cells_.end_column(); }
  std::size_t rows(std::size_t n) const { return cells_.column_size(n); }
  bool contains(std::size_t j, std::size_t n) const noexcept { return cells_.contains(j, n); }
  const entry<T>& at(std::size_t j, std::size_t n) const { return cells_.at(j, n); }

  /// Entries (0, n) for n = 0..columns()-1.
  std::vector<entry<T>> diagonal() const {
    std::vector<entry<T>> d;
    for (std::size_t n = 0; n < columns(); ++n) d.push_back(cells_.get(0, n));
    return d;
  }

  /// Highest-order valid diagonal entry as (n, value).
  std::optional<std::pair<std::size_t, T>> best() const {
    for (std::size_t n = columns(); n-- > 0;) {
      const auto& e = cells_.get(0, n);
      if (e.valid()) return std::pair{n, e.value};
    }
    return std::nullopt;
  }

  template <class U, class F>
  extrapolation_table<U> transform(F&& f) const {
    return extrapolation_table<U>(method_, cells_.template transform<U>(std::forward<F>(f)));
  }

private:
  engine method_ = engine::fs_qd;
  triangle<T> cells_;
};

/// Inputs A_0..A_L and u_0..u_{m-1} of the defining linear system
///   A_l = A_n^(j) + sum_{k=1..n} alpha_k u_{k+l-1},  l = j..j+n.
///
/// The full problem wants m = 2L+1. Shorter u (down to L+1) is accepted;
/// entries whose recursions reach past the end are not_computed.
/// `padded_tail` marks a last u that was synthesized rather than observed
/// (see shanks_prepare).
template <class T>
struct sequence_pair {
  std::vector<T> A;
  std::vector<T> u;
  bool padded_tail = false;

  std::size_t order() const noexcept { return A.empty() ? 0 : A.size() - 1; }

  void validate() const {
    if (A.empty()) throw argument_error("sequence A must have at least one term");
    const std::size_t L = order();
    if (u.size() < L + 1 || u.size() > 2 * L + 1)
      throw argument_error("u must have between " + std::to_string(L + 1) + " and " + std::to_string(2 * L + 1) +
                           " terms for L = " + std::to_string(L) + ", got " + std::to_string(u.size()));
  }
};

}  // namespace gtrans
