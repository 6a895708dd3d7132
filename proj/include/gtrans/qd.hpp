#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"
#include "table.hpp"

namespace gtrans {

/// Quotient-difference table of u_0..u_{2L}.
///
///   q(j, n), n = 1..L, j = 0..2(L-n)+1
///   e(j, n), n = 0..L, j = 0..2(L-n)
///
/// The row bounds are exactly what the Hankel-ratio forms of q and e need
/// when u stops at u_{2L}.
template <class T>
struct qd_table {
  std::size_t L = 0;
  triangle<T> q;
  triangle<T> e;

  explicit qd_table(std::size_t order = 0) : L(order) {
    std::vector<std::size_t> q_sizes, e_sizes;
    for (std::size_t n = 1; n <= L; ++n) q_sizes.push_back(2 * (L - n) + 2);
    for (std::size_t n = 0; n <= L; ++n) e_sizes.push_back(2 * (L - n) + 1);
    q = triangle<T>(1, q_sizes);
    e = triangle<T>(0, e_sizes);
  }
};

namespace detail {

template <field_scalar T>
void require_nonzero_u(std::span<const T> u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (vanishes(u[i])) throw initialization_error("u_" + std::to_string(i) + " is zero", i);
}

// e(j,n) = q(j+1,n) - q(j,n) + e(j+1,n-1)
template <field_scalar T>
entry<T> qd_difference(const entry<T>& q_below, const entry<T>& q_here, const entry<T>& e_prev) {
  if (auto s = inputs_status(q_below, q_here, e_prev); s != entry_status::valid) return entry<T>::failed(s);
  T v = q_below.value - q_here.value + e_prev.value;
  if (!is_finite(v)) return entry<T>::failed(entry_status::breakdown);
  const bool small = vanishes(v, [&] {
    return std::max({magnitude(q_below.value), magnitude(q_here.value), magnitude(e_prev.value)});
  });
  return entry<T>::make(std::move(v), small);
}

// q(j,n+1) = (e(j+1,n) / e(j,n)) * q(j+1,n)
template <field_scalar T>
entry<T> qd_quotient(const entry<T>& e_below, const entry<T>& e_here, const entry<T>& q_below) {
  if (auto s = inputs_status(e_below, e_here, q_below); s != entry_status::valid) return entry<T>::failed(s);
  if (e_here.vanishing) return entry<T>::failed(entry_status::breakdown);
  T v = e_below.value / e_here.value * q_below.value;
  if (!is_finite(v)) return entry<T>::failed(entry_status::breakdown);
  return entry<T>::make(std::move(v), e_below.vanishing || q_below.vanishing);
}

}  // namespace detail

/// Builds the qd table column by column (n = 1, 2, ..., L), each new q/e
/// pair completing one lozenge of the table.
///
/// `u` may hold fewer than 2L+1 terms (at least L+1); cells that would read
/// past its end are not_computed. Cells that divide by a vanishing e are
/// breakdown, and so is everything computed from them.
template <field_scalar T>
qd_table<T> build_qd_table(std::span<const T> u, std::size_t L) {
  if (u.size() < L + 1 || u.size() > 2 * L + 1)
    throw argument_error("qd table of order " + std::to_string(L) + " needs between " + std::to_string(L + 1) +
                         " and " + std::to_string(2 * L + 1) + " terms of u, got " + std::to_string(u.size()));
  detail::require_nonzero_u(u);

  qd_table<T> t(L);
  for (std::size_t j = 0; j <= 2 * L; ++j) t.e.at(j, 0) = entry<T>::make(T(0), true);
  if (L == 0) return t;

  for (std::size_t j = 0; j + 1 <= 2 * L; ++j) {
    if (j + 1 < u.size())
      t.q.at(j, 1) = entry<T>::make(u[j + 1] / u[j]);
    else
      t.q.at(j, 1) = entry<T>::failed(entry_status::not_computed);
  }

  for (std::size_t n = 1; n <= L; ++n) {
    for (std::size_t j = 0; j <= 2 * (L - n); ++j)
      t.e.at(j, n) = detail::qd_difference(t.q.at(j + 1, n), t.q.at(j, n), t.e.at(j + 1, n - 1));
    if (n == L) break;
    for (std::size_t j = 0; j <= 2 * (L - n) - 1; ++j)
      t.q.at(j, n + 1) = detail::qd_quotient(t.e.at(j + 1, n), t.e.at(j, n), t.q.at(j + 1, n));
  }
  return t;
}

template <field_scalar T>
qd_table<T> build_qd_table(const std::vector<T>& u, std::size_t L) {
  return build_qd_table(std::span<const T>(u), L);
}

}  // namespace gtrans
