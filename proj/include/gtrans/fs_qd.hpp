#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "qd.hpp"
#include "scalar.hpp"
#include "table.hpp"

namespace gtrans {

/// Intermediate FS quantities: M(j,n) = psi_n^(j)(a), N(j,n) = psi_n^(j)(I),
/// both over 0 <= j+n <= L.
template <class T>
struct fs_qd_state {
  triangle<T> M;
  triangle<T> N;
};

template <class T>
struct fs_qd_result {
  qd_table<T> qd;
  fs_qd_state<T> state;
  extrapolation_table<T> table;
};

namespace detail {

inline std::vector<std::size_t> lower_triangle_sizes(std::size_t L) {
  std::vector<std::size_t> sizes;
  for (std::size_t n = 0; n <= L; ++n) sizes.push_back(L - n + 1);
  return sizes;
}

// (x(j+1,n-1) - x(j,n-1)) / e(j,n)
template <field_scalar T>
entry<T> fs_step(const entry<T>& next, const entry<T>& here, const entry<T>& e) {
  if (auto s = inputs_status(next, here, e); s != entry_status::valid) return entry<T>::failed(s);
  if (e.vanishing) return entry<T>::failed(entry_status::breakdown);
  T diff = next.value - here.value;
  const bool small =
      vanishes(diff, [&] { return std::max(magnitude(next.value), magnitude(here.value)); });
  T v = diff / e.value;
  if (!is_finite(v)) return entry<T>::failed(entry_status::breakdown);
  return entry<T>::make(std::move(v), small);
}

}  // namespace detail

/// FS/qd evaluation of A_n^(j) for 0 <= j+n <= L.
///
/// The divisors of the FS recursion are taken straight from the qd table
/// (they coincide with e(j,n)), so the only extra work per (j,n) is two
/// differences, two divisions and the final ratio M/N. With
/// `diagonal_only` the final ratio is formed for j = 0 alone; other
/// entries of column n >= 1 are reported not_computed.
///
/// Throws initialization_error if any supplied u_i is zero.
template <field_scalar T>
fs_qd_result<T> run_fs_qd_detailed(const sequence_pair<T>& seq, bool diagonal_only = false) {
  seq.validate();
  const std::size_t L = seq.order();
  const std::span<const T> u(seq.u);

  fs_qd_result<T> out{build_qd_table(u, L), {}, {}};
  auto& M = out.state.M;
  auto& N = out.state.N;
  M = triangle<T>(0, detail::lower_triangle_sizes(L));
  N = triangle<T>(0, detail::lower_triangle_sizes(L));
  triangle<T> A(0, detail::lower_triangle_sizes(L));

  for (std::size_t j = 0; j <= L; ++j) {
    M.at(j, 0) = entry<T>::make(seq.A[j] / u[j]);
    N.at(j, 0) = entry<T>::make(T(1) / u[j]);
    A.at(j, 0) = entry<T>::make(seq.A[j]);
  }

  for (std::size_t n = 1; n <= L; ++n) {
    for (std::size_t j = 0; j + n <= L; ++j) {
      const auto& e = out.qd.e.at(j, n);
      M.at(j, n) = detail::fs_step(M.at(j + 1, n - 1), M.at(j, n - 1), e);
      N.at(j, n) = detail::fs_step(N.at(j + 1, n - 1), N.at(j, n - 1), e);
    }
    for (std::size_t j = 0; j + n <= L; ++j) {
      if (diagonal_only && j != 0) {
        A.at(j, n) = entry<T>::failed(entry_status::not_computed);
        continue;
      }
      const auto& m = M.at(j, n);
      const auto& nn = N.at(j, n);
      if (auto s = inputs_status(m, nn); s != entry_status::valid) {
        A.at(j, n) = entry<T>::failed(s);
      } else if (nn.vanishing) {
        A.at(j, n) = entry<T>::failed(entry_status::breakdown);
      } else {
        T v = m.value / nn.value;
        A.at(j, n) = is_finite(v) ? entry<T>::make(std::move(v)) : entry<T>::failed(entry_status::breakdown);
      }
    }
  }

  out.table = extrapolation_table<T>(engine::fs_qd, std::move(A));
  return out;
}

template <field_scalar T>
extrapolation_table<T> run_fs_qd(const sequence_pair<T>& seq, bool diagonal_only = false) {
  return run_fs_qd_detailed(seq, diagonal_only).table;
}

}  // namespace gtrans
