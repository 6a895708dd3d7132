#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace gtrans {

enum class integrand_id { exp_decay, t_exp, sinc, table };

inline constexpr std::string_view integrand_catalog_ids = "exp_decay, t_exp, sinc, table";

inline std::string_view to_string(integrand_id id) {
  switch (id) {
    case integrand_id::exp_decay: return "exp_decay";
    case integrand_id::t_exp: return "t_exp";
    case integrand_id::sinc: return "sinc";
    case integrand_id::table: return "table";
  }
  return "unknown";
}

inline std::optional<integrand_id> integrand_from_string(std::string_view s) {
  if (s == "exp_decay") return integrand_id::exp_decay;
  if (s == "t_exp") return integrand_id::t_exp;
  if (s == "sinc") return integrand_id::sinc;
  if (s == "table") return integrand_id::table;
  return std::nullopt;
}

/// Composite Simpson rule on [lo, hi] with an even number of subintervals.
template <class F>
double simpson(F&& f, double lo, double hi, int subdivisions) {
  if (subdivisions < 2 || subdivisions % 2 != 0)
    throw argument_error("Simpson needs an even number of subdivisions >= 2, got " + std::to_string(subdivisions));
  const double step = (hi - lo) / subdivisions;
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < subdivisions; ++i) {
    const double v = f(lo + i * step);
    (i % 2 ? odd : even) += v;
  }
  return step / 3.0 * (f(lo) + 4.0 * odd + 2.0 * even + f(hi));
}

inline double sinc(double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }

/// Sine integral Si(x) by fine composite Simpson; only used for reference
/// values of the sinc integrand on [a, inf).
inline double sine_integral(double x) {
  const int n = 2 * std::max(64, static_cast<int>(std::ceil(std::abs(x) * 400.0)));
  return simpson(sinc, 0.0, x, n);
}

/// Integrand on [a, inf), optionally with the known value of the integral.
/// `table` integrands carry their own F and f samples at x + i h.
struct integrand_spec {
  integrand_id id = integrand_id::exp_decay;
  double a = 0.0;
  std::optional<double> reference;
  std::vector<double> table_F;
  std::vector<double> table_f;

  /// Catalog entry with its reference value filled in.
  static integrand_spec catalog(integrand_id id, double a) {
    integrand_spec s;
    s.id = id;
    s.a = a;
    switch (id) {
      case integrand_id::exp_decay: s.reference = std::exp(-a); break;
      case integrand_id::t_exp: s.reference = (1.0 + a) * std::exp(-a); break;
      case integrand_id::sinc: s.reference = std::numbers::pi / 2 - sine_integral(a); break;
      case integrand_id::table:
        throw argument_error("table integrands are built with integrand_spec::from_samples");
    }
    return s;
  }

  static integrand_spec from_samples(std::vector<double> F, std::vector<double> f,
                                     std::optional<double> reference = std::nullopt) {
    integrand_spec s;
    s.id = integrand_id::table;
    s.table_F = std::move(F);
    s.table_f = std::move(f);
    s.reference = reference;
    return s;
  }

  double f(double t) const {
    switch (id) {
      case integrand_id::exp_decay: return std::exp(-t);
      case integrand_id::t_exp: return t * std::exp(-t);
      case integrand_id::sinc: return sinc(t);
      case integrand_id::table: break;
    }
    throw argument_error("table integrands have no pointwise f");
  }

  /// Closed-form F(x) = integral of f over [a, x], when one exists.
  std::optional<double> closed_form_F(double x) const {
    switch (id) {
      case integrand_id::exp_decay: return std::exp(-a) - std::exp(-x);
      case integrand_id::t_exp: return (1.0 + a) * std::exp(-a) - (1.0 + x) * std::exp(-x);
      default: return std::nullopt;
    }
  }
};

struct quadrature_config {
  int subdivisions_per_panel = 64;
  bool analytic_F = false;

  void validate() const {
    if (subdivisions_per_panel < 2 || subdivisions_per_panel % 2 != 0)
      throw argument_error("subdivisions per panel must be even and >= 2, got " +
                           std::to_string(subdivisions_per_panel));
  }
};

/// F samples plus, for quadrature runs, the per-panel integrals that were
/// summed to produce them (panels[i] covers [x+(i-1)h, x+ih], panels[0]
/// covers [a, x]).
struct F_samples {
  std::vector<double> values;
  std::vector<double> panels;
};

/// Node t_i = x + i h.
inline double node(double x, double h, std::size_t i) { return x + static_cast<double>(i) * h; }

/// F(x), F(x+h), ..., F(x+(count-1)h).
///
/// With quadrature the integral over [a, x] is taken first (split into
/// pieces no wider than h), then each panel [x+(i-1)h, x+ih] is integrated
/// once and added to the running total.
inline F_samples sample_F_detailed(const integrand_spec& spec, double x, double h, std::size_t count,
                                   const quadrature_config& cfg) {
  if (count == 0) throw argument_error("sample count must be >= 1");
  if (!(h > 0.0)) throw argument_error("step h must be positive");
  cfg.validate();

  F_samples out;
  if (spec.id == integrand_id::table) {
    if (spec.table_F.size() < count)
      throw argument_error("table integrand has " + std::to_string(spec.table_F.size()) + " F samples, " +
                           std::to_string(count) + " needed");
    out.values.assign(spec.table_F.begin(), spec.table_F.begin() + static_cast<std::ptrdiff_t>(count));
    return out;
  }
  if (x < spec.a) throw argument_error("x must not lie below the lower limit a");

  if (cfg.analytic_F) {
    if (spec.closed_form_F(x)) {
      for (std::size_t i = 0; i < count; ++i) out.values.push_back(*spec.closed_form_F(node(x, h, i)));
      return out;
    }
  }

  const auto f = [&](double t) { return spec.f(t); };
  double head = 0.0;
  if (x > spec.a) {
    const auto pieces = static_cast<std::size_t>(std::max(1.0, std::ceil((x - spec.a) / h)));
    const double width = (x - spec.a) / static_cast<double>(pieces);
    for (std::size_t p = 0; p < pieces; ++p) {
      const double lo = spec.a + static_cast<double>(p) * width;
      const double hi = p + 1 == pieces ? x : spec.a + static_cast<double>(p + 1) * width;
      head += simpson(f, lo, hi, cfg.subdivisions_per_panel);
    }
  }
  out.panels.push_back(head);
  out.values.push_back(head);
  for (std::size_t i = 1; i < count; ++i) {
    const double panel = simpson(f, node(x, h, i - 1), node(x, h, i), cfg.subdivisions_per_panel);
    out.panels.push_back(panel);
    out.values.push_back(out.values.back() + panel);
  }
  return out;
}

inline std::vector<double> sample_F(const integrand_spec& spec, double x, double h, std::size_t count,
                                    const quadrature_config& cfg) {
  return sample_F_detailed(spec, x, h, count, cfg).values;
}

/// f(x), f(x+h), ..., f(x+(count-1)h).
inline std::vector<double> sample_f(const integrand_spec& spec, double x, double h, std::size_t count) {
  if (!(h > 0.0)) throw argument_error("step h must be positive");
  std::vector<double> out;
  if (spec.id == integrand_id::table) {
    if (spec.table_f.size() < count)
      throw argument_error("table integrand has " + std::to_string(spec.table_f.size()) + " f samples, " +
                           std::to_string(count) + " needed");
    out.assign(spec.table_f.begin(), spec.table_f.begin() + static_cast<std::ptrdiff_t>(count));
    return out;
  }
  if (x < spec.a) throw argument_error("x must not lie below the lower limit a");
  for (std::size_t i = 0; i < count; ++i) out.push_back(spec.f(node(x, h, i)));
  return out;
}

}  // namespace gtrans
