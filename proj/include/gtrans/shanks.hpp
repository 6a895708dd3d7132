#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"
#include "table.hpp"

namespace gtrans {

/// Shanks reduction: from A_0..A_{2L} build the pair (A_0..A_L, u) with
/// u_k = A_{k+1} - A_k, k = 0..2L-1.
///
/// The last slot u_{2L} cannot be formed from the data. It only feeds the
/// divisor e(0,L), which cancels in M(0,L)/N(0,L), so any nonzero value
/// reproduces A_L^(0). It is filled by continuing the last two differences
/// geometrically, u_{2L-1}^2 / u_{2L-2} (1 when L = 0), and the pair is
/// flagged `padded_tail`. A geometric tail therefore still surfaces as a
/// vanishing e(0,L), as it would with the true difference.
///
/// Throws argument_error on even-length input or a zero difference.
template <field_scalar T>
sequence_pair<T> shanks_prepare(std::span<const T> A) {
  if (A.empty() || A.size() % 2 == 0)
    throw argument_error("Shanks preparation needs 2L+1 terms, got " + std::to_string(A.size()));
  const std::size_t L = (A.size() - 1) / 2;

  sequence_pair<T> seq;
  seq.A.assign(A.begin(), A.begin() + static_cast<std::ptrdiff_t>(L + 1));
  seq.u.reserve(2 * L + 1);
  for (std::size_t k = 0; k < 2 * L; ++k) {
    T d = A[k + 1] - A[k];
    if (vanishes(d))
      throw argument_error("zero difference u_" + std::to_string(k) + " = A_" + std::to_string(k + 1) + " - A_" +
                           std::to_string(k));
    seq.u.push_back(std::move(d));
  }
  if (L == 0) {
    seq.u.push_back(T(1));
  } else {
    const T& last = seq.u[2 * L - 1];
    seq.u.push_back(last * last / seq.u[2 * L - 2]);
  }
  seq.padded_tail = true;
  return seq;
}

template <field_scalar T>
sequence_pair<T> shanks_prepare(const std::vector<T>& A) {
  return shanks_prepare(std::span<const T>(A));
}

}  // namespace gtrans
