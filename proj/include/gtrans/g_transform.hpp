#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

#include "epsilon.hpp"
#include "errors.hpp"
#include "fs_qd.hpp"
#include "quadrature.hpp"
#include "rational.hpp"
#include "rs.hpp"
#include "table.hpp"

namespace gtrans {

/// How the recursion runs on the double-precision samples.
///
/// `exact` converts every sample to the rational it exactly represents and
/// runs the engine in exact arithmetic. On kernel integrands the higher
/// qd divisors are pure rounding noise in double precision and often
/// exactly zero; in exact arithmetic they are tiny but nonzero and cancel
/// as they should.
enum class arithmetic { exact, floating };

inline std::string_view to_string(arithmetic a) { return a == arithmetic::exact ? "exact" : "double"; }

struct g_transform_options {
  engine method = engine::fs_qd;
  quadrature_config quadrature;
  arithmetic mode = arithmetic::exact;
};

struct g_transform_result {
  /// Entry (j, n) approximates the integral by G_n(x + j h; h).
  extrapolation_table<double> table;
  double x = 0.0;
  double h = 0.0;
  std::optional<double> reference;
  /// |G - I[f]| for each valid entry; empty when no reference is known.
  triangle<double> errors;
  /// |T(0,n) - T(0,n-1)| for n >= 1 (nullopt unless both are valid).
  std::vector<std::optional<double>> diagonal_differences;
  /// A_i = F(x+ih), u_i = f(x+ih).
  sequence_pair<double> samples;
};

namespace detail {

template <field_scalar T>
extrapolation_table<T> run_engine(engine method, const sequence_pair<T>& seq) {
  switch (method) {
    case engine::fs_qd: return run_fs_qd(seq);
    case engine::rs: return run_rs(seq);
    case engine::epsilon: return run_epsilon(seq.A);
    case engine::direct: break;
  }
  throw argument_error("the direct oracle is not available for integrals");
}

inline sequence_pair<rational> to_exact(const sequence_pair<double>& seq) {
  sequence_pair<rational> out;
  for (double a : seq.A) out.A.push_back(rational::from_double(a));
  for (double v : seq.u) out.u.push_back(rational::from_double(v));
  out.padded_tail = seq.padded_tail;
  return out;
}

}  // namespace detail

/// Higher-order G-transformation of the integral of f over [a, inf):
/// samples A_i = F(x+ih), i = 0..n_max and u_i = f(x+ih), i = 0..2 n_max,
/// then runs the chosen engine. With the epsilon engine only the F samples
/// are used, which yields orders up to n_max / 2.
///
/// Throws initialization_error naming the node if f vanishes at a needed
/// sample (FS/qd and rs divide by the u_i).
inline g_transform_result g_transform(const integrand_spec& spec, double x, double h, std::size_t n_max,
                                      const g_transform_options& opts = {}) {
  if (n_max < 1) throw argument_error("n_max must be >= 1");

  g_transform_result out;
  out.x = x;
  out.h = h;
  out.reference = spec.reference;
  out.samples.A = sample_F(spec, x, h, n_max + 1, opts.quadrature);
  if (opts.method != engine::epsilon) {
    out.samples.u = sample_f(spec, x, h, 2 * n_max + 1);
    for (std::size_t i = 0; i < out.samples.u.size(); ++i) {
      if (out.samples.u[i] == 0.0) {
        std::ostringstream msg;
        msg << "f vanishes at node " << i << " (t = " << node(x, h, i) << ")";
        throw initialization_error(msg.str(), i);
      }
    }
  }

  if (opts.mode == arithmetic::exact) {
    out.table = detail::run_engine(opts.method, detail::to_exact(out.samples))
                    .transform<double>([](const rational& r) { return r.to_double(); });
  } else {
    out.table = detail::run_engine(opts.method, out.samples);
  }

  if (out.reference) {
    const double ref = *out.reference;
    out.errors = out.table.cells().transform<double>([ref](double v) { return std::abs(v - ref); });
  }
  const auto diag = out.table.diagonal();
  for (std::size_t n = 1; n < diag.size(); ++n) {
    if (diag[n].valid() && diag[n - 1].valid())
      out.diagonal_differences.push_back(std::abs(diag[n].value - diag[n - 1].value));
    else
      out.diagonal_differences.push_back(std::nullopt);
  }
  return out;
}

}  // namespace gtrans
