#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"
#include "table.hpp"

namespace gtrans {

template <class T>
struct epsilon_result {
  /// eps(j, k) for k = 0..m-1, j = 0..m-1-k (m = number of input terms).
  triangle<T> eps;
  /// Even columns: entry (j, n) = eps(j, 2n).
  extrapolation_table<T> table;
};

/// Wynn's epsilon algorithm
///   eps(j,k+1) = eps(j+1,k-1) + 1 / (eps(j+1,k) - eps(j,k)),
/// with eps(j,-1) = 0 and eps(j,0) = A_j. The even columns are the Shanks
/// values; odd columns are auxiliary.
template <field_scalar T>
epsilon_result<T> run_epsilon_detailed(std::span<const T> A) {
  if (A.empty()) throw argument_error("epsilon algorithm needs at least one term");
  const std::size_t m = A.size();

  std::vector<std::size_t> sizes;
  for (std::size_t k = 0; k < m; ++k) sizes.push_back(m - k);
  triangle<T> eps(0, sizes);
  for (std::size_t j = 0; j < m; ++j) eps.at(j, 0) = entry<T>::make(A[j]);

  const entry<T> zero = entry<T>::make(T(0), true);
  for (std::size_t k = 0; k + 1 < m; ++k) {
    for (std::size_t j = 0; j + k + 1 < m; ++j) {
      const auto& prev = k == 0 ? zero : eps.at(j + 1, k - 1);
      const auto& lo = eps.at(j, k);
      const auto& hi = eps.at(j + 1, k);
      auto& out = eps.at(j, k + 1);
      if (auto s = inputs_status(prev, lo, hi); s != entry_status::valid) {
        out = entry<T>::failed(s);
        continue;
      }
      T d = hi.value - lo.value;
      if (vanishes(d, [&] { return std::max(magnitude(lo.value), magnitude(hi.value)); })) {
        out = entry<T>::failed(entry_status::breakdown);
        continue;
      }
      T v = prev.value + T(1) / d;
      out = is_finite(v) ? entry<T>::make(std::move(v)) : entry<T>::failed(entry_status::breakdown);
    }
  }

  std::vector<std::size_t> even_sizes;
  for (std::size_t n = 0; 2 * n < m; ++n) even_sizes.push_back(m - 2 * n);
  triangle<T> shanks(0, even_sizes);
  for (std::size_t n = 0; 2 * n < m; ++n)
    for (std::size_t j = 0; j + 2 * n < m; ++j) shanks.at(j, n) = eps.at(j, 2 * n);

  return {std::move(eps), extrapolation_table<T>(engine::epsilon, std::move(shanks))};
}

template <field_scalar T>
extrapolation_table<T> run_epsilon(std::span<const T> A) {
  return run_epsilon_detailed(A).table;
}

template <field_scalar T>
extrapolation_table<T> run_epsilon(const std::vector<T>& A) {
  return run_epsilon(std::span<const T>(A));
}

}  // namespace gtrans
