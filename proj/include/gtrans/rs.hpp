#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "fs_qd.hpp"
#include "qd.hpp"
#include "scalar.hpp"
#include "table.hpp"

namespace gtrans {

/// r(j,n) = H_n^(j) / K_n^(j) for n = 1..L, j = 0..2(L-n)+2, and
/// s(j,n) = K_{n+1}^(j) / H_n^(j) for n = 0..L, j = 0..2(L-n)+1.
template <class T>
struct rs_table {
  std::size_t L = 0;
  triangle<T> r;
  triangle<T> s;

  explicit rs_table(std::size_t order = 0) : L(order) {
    std::vector<std::size_t> r_sizes, s_sizes;
    for (std::size_t n = 1; n <= L; ++n) r_sizes.push_back(2 * (L - n) + 3);
    for (std::size_t n = 0; n <= L; ++n) s_sizes.push_back(2 * (L - n) + 2);
    r = triangle<T>(1, r_sizes);
    s = triangle<T>(0, s_sizes);
  }
};

template <class T>
struct rs_result {
  rs_table<T> rs;
  extrapolation_table<T> table;
};

namespace detail {

// factor * (numer / denom - 1); used for both the s and the r update.
template <field_scalar T>
entry<T> rs_update(const entry<T>& factor, const entry<T>& numer, const entry<T>& denom) {
  if (auto st = inputs_status(factor, numer, denom); st != entry_status::valid) return entry<T>::failed(st);
  if (denom.vanishing) return entry<T>::failed(entry_status::breakdown);
  const T ratio = numer.value / denom.value;
  T shifted = ratio - T(1);
  const bool small = vanishes(shifted, [&] { return std::max(magnitude(ratio), 1.0); });
  T v = factor.value * shifted;
  if (!is_finite(v)) return entry<T>::failed(entry_status::breakdown);
  return entry<T>::make(std::move(v), small || factor.vanishing);
}

}  // namespace detail

/// rs-algorithm: r and s by their coupled recursions, then
///   A(j,n) = (r(j,n) A(j+1,n-1) - r(j+1,n) A(j,n-1)) / (r(j,n) - r(j+1,n)).
///
/// Throws initialization_error if any supplied u_i is zero.
template <field_scalar T>
rs_result<T> run_rs_detailed(const sequence_pair<T>& seq) {
  seq.validate();
  const std::size_t L = seq.order();
  const std::span<const T> u(seq.u);
  detail::require_nonzero_u(u);

  rs_result<T> out{rs_table<T>(L), {}};
  auto& r = out.rs.r;
  auto& s = out.rs.s;
  triangle<T> A(0, detail::lower_triangle_sizes(L));

  for (std::size_t j = 0; j <= 2 * L + 1; ++j) s.at(j, 0) = entry<T>::make(T(1));
  for (std::size_t j = 0; j <= L; ++j) A.at(j, 0) = entry<T>::make(seq.A[j]);
  if (L == 0) {
    out.table = extrapolation_table<T>(engine::rs, std::move(A));
    return out;
  }
  for (std::size_t j = 0; j <= 2 * L; ++j)
    r.at(j, 1) = j < u.size() ? entry<T>::make(u[j]) : entry<T>::failed(entry_status::not_computed);

  for (std::size_t n = 1; n <= L; ++n) {
    for (std::size_t j = 0; j <= 2 * (L - n) + 1; ++j)
      s.at(j, n) = detail::rs_update(s.at(j + 1, n - 1), r.at(j + 1, n), r.at(j, n));
    if (n < L) {
      for (std::size_t j = 0; j <= 2 * (L - n); ++j)
        r.at(j, n + 1) = detail::rs_update(r.at(j + 1, n), s.at(j + 1, n), s.at(j, n));
    }
    for (std::size_t j = 0; j + n <= L; ++j) {
      const auto& r0 = r.at(j, n);
      const auto& r1 = r.at(j + 1, n);
      const auto& a1 = A.at(j + 1, n - 1);
      const auto& a0 = A.at(j, n - 1);
      if (auto st = inputs_status(r0, r1, a1, a0); st != entry_status::valid) {
        A.at(j, n) = entry<T>::failed(st);
        continue;
      }
      T denom = r0.value - r1.value;
      if (vanishes(denom, [&] { return std::max(magnitude(r0.value), magnitude(r1.value)); })) {
        A.at(j, n) = entry<T>::failed(entry_status::breakdown);
        continue;
      }
      T v = (r0.value * a1.value - r1.value * a0.value) / denom;
      A.at(j, n) = is_finite(v) ? entry<T>::make(std::move(v)) : entry<T>::failed(entry_status::breakdown);
    }
  }

  out.table = extrapolation_table<T>(engine::rs, std::move(A));
  return out;
}

template <field_scalar T>
extrapolation_table<T> run_rs(const sequence_pair<T>& seq) {
  return run_rs_detailed(seq).table;
}

}  // namespace gtrans
