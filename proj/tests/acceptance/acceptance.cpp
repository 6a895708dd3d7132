// Acceptance suite: one PASS/FAIL line per criterion, exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <gtrans/equivalence.hpp>
#include <gtrans/g_transform.hpp>
#include <gtrans/opbench.hpp>
#include <gtrans/quadrature.hpp>

namespace {

struct outcome {
  bool pass = false;
  std::string detail;
};

struct criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

outcome from_report(const gtrans::equivalence_report& rep, std::size_t want) {
  if (!rep.passed()) return {false, "counterexample: " + *rep.counterexample};
  return {rep.cases == want && rep.comparisons > 0,
          fmt("%zu cases, %zu cells compared, %zu redraws", rep.cases, rep.comparisons, rep.redraws)};
}

outcome exact_equivalence() { return from_report(gtrans::check_engines_agree(4, 20, 20240101), 20); }

outcome epsilon_identity() { return from_report(gtrans::check_epsilon_identity(4, 20, 20240202), 20); }

outcome determinant_identities() { return from_report(gtrans::check_determinant_identities(4, 10, 20240303), 10); }

outcome kernel_exactness() {
  gtrans::g_transform_options opts;
  opts.quadrature.analytic_F = true;

  double worst_exp = 0.0;
  bool all_valid = true;
  const auto exp_spec = gtrans::integrand_spec::catalog(gtrans::integrand_id::exp_decay, 0.0);
  for (double x : {0.0, 0.5, 1.0})
    for (double h : {0.5, 1.0, 2.0}) {
      const auto r = gtrans::g_transform(exp_spec, x, h, 3, opts);
      for (std::size_t n = 1; n <= 3; ++n) {
        const auto& e = r.table.at(0, n);
        all_valid = all_valid && e.valid();
        if (e.valid()) worst_exp = std::max(worst_exp, std::abs(e.value - 1.0));
      }
    }

  // f(0) = 0 for t e^{-t}, so x = 0 is outside the domain of the method.
  std::vector<std::pair<double, double>> grid{{1.0, 0.7}};
  for (double x : {0.5, 1.0})
    for (double h : {0.5, 1.0, 2.0}) grid.emplace_back(x, h);
  double worst_t = 0.0, least_g1 = 1e300;
  const auto t_spec = gtrans::integrand_spec::catalog(gtrans::integrand_id::t_exp, 0.0);
  for (auto [x, h] : grid) {
    const auto r = gtrans::g_transform(t_spec, x, h, 4, opts);
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto& e = r.table.at(0, n);
      all_valid = all_valid && e.valid();
      if (e.valid()) worst_t = std::max(worst_t, std::abs(e.value - 1.0));
    }
    const auto& g1 = r.table.at(0, 1);
    all_valid = all_valid && g1.valid();
    if (g1.valid()) least_g1 = std::min(least_g1, std::abs(g1.value - 1.0));
  }
  const bool pass = all_valid && worst_exp <= 1e-12 && worst_t <= 1e-10 && least_g1 >= 1e-3;
  return {pass, fmt("exp_decay max|G_n-1| = %.2e (n=1..3, 9 points); t_exp max|G_n-1| = %.2e (n=2..4), "
                    "min|G_1-1| = %.3f (%zu points)%s",
                    worst_exp, worst_t, least_g1, grid.size(), all_valid ? "" : "; some entries not valid")};
}

bool within(double got, double want, double rel) { return std::abs(got - want) <= rel * want; }

outcome operation_counts() {
  using gtrans::bench_method;
  const auto fs = gtrans::bench_method_run(bench_method::fs_qd, 100, 1);
  const auto fd = gtrans::bench_method_run(bench_method::fs_qd_diagonal, 100, 1);
  const auto rs = gtrans::bench_method_run(bench_method::rs, 100, 1);
  const auto ep = gtrans::bench_method_run(bench_method::epsilon, 100, 1);
  const bool pass = fs.valid && fd.valid && rs.valid && ep.valid && within(fs.mul_per_L2, 1, 0.1) &&
                    within(fs.add_per_L2, 3, 0.1) && within(fs.div_per_L2, 2.5, 0.1) &&
                    within(fd.div_per_L2, 2.0, 0.1) && within(rs.mul_per_L2, 3, 0.1) &&
                    within(rs.add_per_L2, 3, 0.1) && within(rs.div_per_L2, 2.5, 0.1) &&
                    ep.counts.multiplications == 0 && within(ep.add_per_L2, 4, 0.1) && within(ep.div_per_L2, 2, 0.1);
  return {pass, fmt("per L^2 (mul/add/div): fsqd %.3f/%.3f/%.3f, fsqd_diag div %.3f, rs %.3f/%.3f/%.3f, "
                    "eps %llu muls, add %.3f, div %.3f",
                    fs.mul_per_L2, fs.add_per_L2, fs.div_per_L2, fd.div_per_L2, rs.mul_per_L2, rs.add_per_L2,
                    rs.div_per_L2, static_cast<unsigned long long>(ep.counts.multiplications), ep.add_per_L2,
                    ep.div_per_L2)};
}

outcome thirty_percent() {
  const double ratio = gtrans::compare_ratio(100, 1);
  return {ratio >= 1.20 && ratio <= 1.40, fmt("total(rs)/total(fsqd) = %.4f at L = 100", ratio)};
}

// Integral of sin(t)/t over [0, inf): fine Simpson on [0, T] plus the
// asymptotic expansion of the tail beyond T.
double sinc_reference() {
  const double T = 64.0 * std::numbers::pi;
  const double head = gtrans::simpson(gtrans::sinc, 0.0, T, 400000);
  const double c = std::cos(T), s = std::sin(T), T2 = T * T;
  const double tail = c / T * (1 - 2 / T2 + 24 / (T2 * T2) - 720 / (T2 * T2 * T2)) +
                      s / T2 * (1 - 6 / T2 + 120 / (T2 * T2) - 5040 / (T2 * T2 * T2));
  return head + tail;
}

outcome sinc_integral() {
  const double ref = sinc_reference();
  const auto spec = gtrans::integrand_spec::catalog(gtrans::integrand_id::sinc, 0.0);
  const auto r = gtrans::g_transform(spec, 0.0, 1.0, 10);
  const auto& g1 = r.table.at(0, 1);
  const auto& g10 = r.table.at(0, 10);
  if (!g1.valid() || !g10.valid()) return {false, "G_1 or G_10 not valid"};
  const double e1 = std::abs(g1.value - ref), e10 = std::abs(g10.value - ref);
  return {e10 <= 0.01 * e1 && std::abs(ref - std::numbers::pi / 2) < 1e-9,
          fmt("reference %.12f (pi/2 %+.1e), |G_1-I| = %.3e, |G_10-I| = %.3e, ratio %.2e", ref,
              ref - std::numbers::pi / 2, e1, e10, e10 / e1)};
}

outcome quadrature_order() {
  const auto spec = gtrans::integrand_spec::catalog(gtrans::integrand_id::exp_decay, 0.0);
  const double x = 0.0, h = 1.0;
  const std::size_t count = 4;
  std::vector<double> errs;
  for (int sub : {4, 8, 16, 32}) {
    gtrans::quadrature_config cfg;
    cfg.subdivisions_per_panel = sub;
    const auto s = gtrans::sample_F_detailed(spec, x, h, count, cfg);
    double worst = 0.0;
    for (std::size_t i = 1; i < count; ++i) {
      const double exact = std::exp(-gtrans::node(x, h, i - 1)) - std::exp(-gtrans::node(x, h, i));
      worst = std::max(worst, std::abs(s.panels[i] - exact));
    }
    errs.push_back(worst);
  }
  bool pass = true;
  std::string ratios;
  for (std::size_t k = 1; k < errs.size(); ++k) {
    const double q = errs[k - 1] / errs[k];
    pass = pass && q >= 8.0;
    ratios += fmt("%s%.2f", k > 1 ? ", " : "", q);
  }
  return {pass, fmt("panel errors %.2e -> %.2e, reduction per doubling %s", errs.front(), errs.back(), ratios.c_str())};
}

}  // namespace

int main() {
  const std::vector<criterion> criteria{
      {1, "exact equivalence fsqd = rs = direct (L = 4, 20 cases)", 5.0, exact_equivalence},
      {2, "Shanks/epsilon identity (length 9, 20 cases)", 2.0, epsilon_identity},
      {3, "qd/rs determinant identities (L = 4, 10 cases)", 5.0, determinant_identities},
      {4, "kernel exactness", 1.0, kernel_exactness},
      {5, "operation counts at L = 100", 2.0, operation_counts},
      {6, "rs/FS-qd ratio about 1.3", 1.0, thirty_percent},
      {7, "sinc integral G_10 vs G_1", 1.0, sinc_integral},
      {8, "Simpson order check", 1.0, quadrature_order},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_seconds;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("%s  %d  %s  [%.3f s / %.0f s]  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.budget_seconds, o.detail.c_str(), in_time ? "" : "  (over time budget)");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
