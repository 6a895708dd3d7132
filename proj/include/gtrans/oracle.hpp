#pragma once

// Reference values straight from the determinant and linear-system
// definitions, in exact rational arithmetic. Slow on purpose: these exist to
// check the recursive engines, and refuse sizes beyond desk scale.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "table.hpp"

namespace gtrans::oracle {

inline constexpr std::size_t max_order = 8;

using matrix = std::vector<std::vector<rational>>;

namespace detail {

inline void check_order(std::size_t n, const char* what) {
  // Determinants of order max_order + 1 are needed for psi and e at n = max_order.
  if (n > max_order + 1)
    throw argument_error(std::string(what) + ": order " + std::to_string(n) + " exceeds the oracle cap of " +
                         std::to_string(max_order));
}

inline rational cofactor_det(const matrix& m) {
  switch (m.size()) {
    case 0: return rational(1);
    case 1: return m[0][0];
    case 2: return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    default:
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
}

// Scale each row to integers, run Bareiss over Z, undo the scaling.
inline rational bareiss_det(const matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class row_lcm = 1;
    for (const auto& x : m[i]) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), x.denominator().get_mpz_t());
    for (std::size_t k = 0; k < n; ++k) a[i][k] = m[i][k].numerator() * (row_lcm / m[i][k].denominator());
    scale *= row_lcm;
  }

  int sign = 1;
  mpz_class prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return rational(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t c = k + 1; c < n; ++c) {
        mpz_class t = a[i][c] * a[k][k] - a[i][k] * a[k][c];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
        a[i][c] = std::move(t);
      }
      a[i][k] = 0;
    }
    prev_pivot = a[k][k];
  }
  mpz_class det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return rational(det, scale);
}

}  // namespace detail

/// Exact determinant: cofactor expansion up to 3x3, fraction-free
/// elimination beyond.
inline rational determinant(const matrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw argument_error("determinant of a non-square matrix");
  return m.size() <= 3 ? detail::cofactor_det(m) : detail::bareiss_det(m);
}

/// A sequence l -> b(l) used to assemble the column determinants of the
/// FS formulation.
class sequence_function {
public:
  sequence_function(std::string name, std::function<rational(std::size_t)> fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}

  /// Backed by a stored list; out-of-range requests throw.
  static sequence_function from_list(std::string name, std::vector<rational> values) {
    auto shared = std::make_shared<std::vector<rational>>(std::move(values));
    auto label = name;
    return sequence_function(std::move(name), [shared, label](std::size_t l) {
      if (l >= shared->size())
        throw argument_error("sequence '" + label + "' has no term " + std::to_string(l) + " (length " +
                             std::to_string(shared->size()) + ")");
      return (*shared)[l];
    });
  }

  /// The all-ones sequence I.
  static sequence_function ones() {
    return sequence_function("I", [](std::size_t) { return rational(1); });
  }

  /// g_k(l) = u_{k+l-1}, k >= 1.
  static sequence_function shifted(const std::vector<rational>& u, std::size_t k) {
    return from_list("u", u).offset(k - 1, "g_" + std::to_string(k));
  }

  const std::string& name() const noexcept { return name_; }
  rational operator()(std::size_t l) const { return fn_(l); }

  sequence_function offset(std::size_t by, std::string name) const {
    auto fn = fn_;
    return sequence_function(std::move(name), [fn, by](std::size_t l) { return fn(l + by); });
  }

private:
  std::string name_;
  std::function<rational(std::size_t)> fn_;
};

/// |c_1(j) c_2(j) ... c_m(j)|: row i holds c_1(j+i) .. c_m(j+i).
inline rational column_determinant(std::span<const sequence_function> columns, std::size_t j) {
  const std::size_t m = columns.size();
  matrix a(m, std::vector<rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t c = 0; c < m; ++c) a[i][c] = columns[c](j + i);
  return determinant(a);
}

namespace detail {

inline void need_terms(const std::vector<rational>& u, std::size_t highest, const char* what) {
  if (highest >= u.size())
    throw argument_error(std::string(what) + " needs u_" + std::to_string(highest) + " but only " +
                         std::to_string(u.size()) + " terms were given");
}

inline rational ratio(const rational& num, const rational& den, const char* what) {
  if (den.sign() == 0) throw singular_error(std::string(what) + ": zero denominator determinant");
  return num / den;
}

}  // namespace detail

/// Hankel determinant H_n^(j) = det[u_{j+a+b}], a,b = 0..n-1; H_0 = 1.
inline rational hankel_det(const std::vector<rational>& u, std::size_t j, std::size_t n) {
  detail::check_order(n, "hankel_det");
  if (n == 0) return rational(1);
  detail::need_terms(u, j + 2 * n - 2, "hankel_det");
  matrix a(n, std::vector<rational>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = u[j + r + c];
  return determinant(a);
}

/// K_n^(j): first row all ones, row r >= 1 holds u_{j+r-1} .. u_{j+r+n-2};
/// K_0 = 1.
inline rational k_det(const std::vector<rational>& u, std::size_t j, std::size_t n) {
  detail::check_order(n, "k_det");
  if (n == 0) return rational(1);
  if (n >= 2) detail::need_terms(u, j + 2 * n - 3, "k_det");
  matrix a(n, std::vector<rational>(n));
  for (std::size_t c = 0; c < n; ++c) a[0][c] = rational(1);
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = u[j + r - 1 + c];
  return determinant(a);
}

inline rational r_ref(const std::vector<rational>& u, std::size_t j, std::size_t n) {
  return detail::ratio(hankel_det(u, j, n), k_det(u, j, n), "r_ref");
}

inline rational s_ref(const std::vector<rational>& u, std::size_t j, std::size_t n) {
  return detail::ratio(k_det(u, j, n + 1), hankel_det(u, j, n), "s_ref");
}

/// q_n^(j) = H_{n-1}^(j) H_n^(j+1) / (H_n^(j) H_{n-1}^(j+1)), n >= 1.
inline rational q_ref(const std::vector<rational>& u, std::size_t j, std::size_t n) {
  if (n == 0) throw argument_error("q_ref is defined for n >= 1");
  return detail::ratio(hankel_det(u, j, n - 1) * hankel_det(u, j + 1, n),
                       hankel_det(u, j, n) * hankel_det(u, j + 1, n - 1), "q_ref");
}

/// e_n^(j) = H_{n+1}^(j) H_{n-1}^(j+1) / (H_n^(j) H_n^(j+1)), n >= 1; e_0 = 0.
inline rational e_ref(const std::vector<rational>& u, std::size_t j, std::size_t n) {
  if (n == 0) return rational(0);
  return detail::ratio(hankel_det(u, j, n + 1) * hankel_det(u, j + 1, n - 1),
                       hankel_det(u, j, n) * hankel_det(u, j + 1, n), "e_ref");
}

/// G_n^(j) = |g_1(j) ... g_n(j)| with g_k(l) = u_{k+l-1}; G_0 = 1.
inline rational g_det(const std::vector<rational>& u, std::size_t j, std::size_t n) {
  detail::check_order(n, "g_det");
  if (n == 0) return rational(1);
  detail::need_terms(u, j + 2 * n - 2, "g_det");
  std::vector<sequence_function> cols;
  for (std::size_t k = 1; k <= n; ++k) cols.push_back(sequence_function::shifted(u, k));
  return column_determinant(cols, j);
}

/// f_n^(j)(b) = |g_1(j) ... g_n(j) b(j)|; f_0(b) = b(j).
inline rational f_det(const sequence_function& b, const std::vector<rational>& u, std::size_t j, std::size_t n) {
  detail::check_order(n + 1, "f_det");
  if (n > 0) detail::need_terms(u, j + 2 * n - 1, "f_det");
  std::vector<sequence_function> cols;
  for (std::size_t k = 1; k <= n; ++k) cols.push_back(sequence_function::shifted(u, k));
  cols.push_back(b);
  return column_determinant(cols, j);
}

/// psi_n^(j)(b) = f_n^(j)(b) / G_{n+1}^(j).
inline rational psi(const sequence_function& b, const std::vector<rational>& u, std::size_t j, std::size_t n) {
  return detail::ratio(f_det(b, u, j, n), g_det(u, j, n + 1), "psi");
}

/// The FS divisor D_n^(j) = G_{n+1}^(j) G_{n-1}^(j+1) / (G_n^(j) G_n^(j+1)).
inline rational d_ref(const std::vector<rational>& u, std::size_t j, std::size_t n) {
  if (n == 0) throw argument_error("d_ref is defined for n >= 1");
  return detail::ratio(g_det(u, j, n + 1) * g_det(u, j + 1, n - 1), g_det(u, j, n) * g_det(u, j + 1, n), "d_ref");
}

struct direct_solve_result {
  rational value;
  std::vector<rational> alphas;
  bool singular = false;
};

/// Solves A_l = value + sum_k alpha_k u_{k+l-1}, l = j..j+n, by exact
/// Gaussian elimination (first nonzero pivot).
inline direct_solve_result direct_solve(const sequence_pair<rational>& seq, std::size_t j, std::size_t n) {
  if (seq.order() > max_order)
    throw argument_error("direct_solve: L = " + std::to_string(seq.order()) + " exceeds the oracle cap of " +
                         std::to_string(max_order));
  if (j + n > seq.order()) throw argument_error("direct_solve: j + n exceeds L");
  if (n > 0) detail::need_terms(seq.u, j + 2 * n - 1, "direct_solve");

  const std::size_t m = n + 1;
  matrix a(m, std::vector<rational>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t l = j + i;
    a[i][0] = rational(1);
    for (std::size_t k = 1; k <= n; ++k) a[i][k] = seq.u[k + l - 1];
    a[i][m] = seq.A[l];
  }

  for (std::size_t col = 0; col < m; ++col) {
    std::size_t p = col;
    while (p < m && a[p][col].sign() == 0) ++p;
    if (p == m) return {rational(0), {}, true};
    std::swap(a[col], a[p]);
    for (std::size_t i = col + 1; i < m; ++i) {
      if (a[i][col].sign() == 0) continue;
      const rational f = a[i][col] / a[col][col];
      for (std::size_t c = col; c <= m; ++c) a[i][c] -= f * a[col][c];
    }
  }
  std::vector<rational> x(m);
  for (std::size_t i = m; i-- > 0;) {
    rational acc = a[i][m];
    for (std::size_t c = i + 1; c < m; ++c) acc -= a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return {x[0], std::vector<rational>(x.begin() + 1, x.end()), false};
}

/// Every entry (j, n) with j + n <= L, solved independently.
inline extrapolation_table<rational> direct_table(const sequence_pair<rational>& seq) {
  const std::size_t L = seq.order();
  std::vector<std::size_t> sizes;
  for (std::size_t n = 0; n <= L; ++n) sizes.push_back(L - n + 1);
  triangle<rational> cells(0, sizes);
  for (std::size_t n = 0; n <= L; ++n)
    for (std::size_t j = 0; j + n <= L; ++j) {
      auto& cell = cells.at(j, n);
      if (n > 0 && j + 2 * n - 1 >= seq.u.size()) {
        cell = entry<rational>::failed(entry_status::not_computed);
        continue;
      }
      auto r = direct_solve(seq, j, n);
      cell = r.singular ? entry<rational>::failed(entry_status::breakdown) : entry<rational>::make(r.value);
    }
  return extrapolation_table<rational>(engine::direct, std::move(cells));
}

}  // namespace gtrans::oracle
