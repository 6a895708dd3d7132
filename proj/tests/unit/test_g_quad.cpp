#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <gtrans/g_transform.hpp>
#include <gtrans/quadrature.hpp>

namespace {

using gtrans::integrand_id;
using gtrans::integrand_spec;
using gtrans::quadrature_config;

quadrature_config analytic() {
  quadrature_config c;
  c.analytic_F = true;
  return c;
}

TEST(SampleF, ExpDecayClosedForm) {
  const auto spec = integrand_spec::catalog(integrand_id::exp_decay, 0.0);
  const auto F = gtrans::sample_F(spec, 1.0, 1.0, 1, analytic());
  EXPECT_NEAR(F[0], 1.0 - std::exp(-1.0), 1e-15);
  EXPECT_NEAR(F[0], 0.632120558829, 1e-12);
  // Simpson bound with 64 subdivisions: (1/64)^4 / 180.
  const auto Q = gtrans::sample_F(spec, 1.0, 1.0, 1, {});
  EXPECT_NEAR(Q[0], F[0], 4e-10);
}

TEST(SampleF, TExpClosedForm) {
  const auto spec = integrand_spec::catalog(integrand_id::t_exp, 0.0);
  const auto F = gtrans::sample_F(spec, 0.0, 2.0, 2, analytic());
  EXPECT_EQ(F[0], 0.0);
  EXPECT_NEAR(F[1], 1.0 - 3.0 * std::exp(-2.0), 1e-15);
  const auto Q = gtrans::sample_F(spec, 0.0, 2.0, 2, {});
  EXPECT_NEAR(Q[1], F[1], 5e-8);
}

TEST(SampleF, StartsAtZeroWhenXIsA) {
  for (auto id : {integrand_id::exp_decay, integrand_id::t_exp, integrand_id::sinc}) {
    const auto spec = integrand_spec::catalog(id, 0.75);
    EXPECT_EQ(gtrans::sample_F(spec, 0.75, 0.5, 3, {})[0], 0.0);
  }
}

TEST(SampleF, Preconditions) {
  const auto spec = integrand_spec::catalog(integrand_id::exp_decay, 1.0);
  EXPECT_THROW(gtrans::sample_F(spec, 0.5, 1.0, 2, {}), gtrans::argument_error);
  EXPECT_THROW(gtrans::sample_F(spec, 1.0, 0.0, 2, {}), gtrans::argument_error);
  EXPECT_THROW(gtrans::sample_F(spec, 1.0, 1.0, 0, {}), gtrans::argument_error);
  quadrature_config odd;
  odd.subdivisions_per_panel = 7;
  EXPECT_THROW(gtrans::sample_F(spec, 1.0, 1.0, 2, odd), gtrans::argument_error);
}

TEST(SampleF, CumulativePanels) {
  const auto spec = integrand_spec::catalog(integrand_id::sinc, 0.0);
  const double x = 0.3, h = 0.9;
  quadrature_config cfg;
  cfg.subdivisions_per_panel = 16;
  const auto s = gtrans::sample_F_detailed(spec, x, h, 8, cfg);
  const auto f = [&](double t) { return spec.f(t); };
  for (std::size_t i = 1; i < s.values.size(); ++i) {
    const double panel = gtrans::simpson(f, gtrans::node(x, h, i - 1), gtrans::node(x, h, i), 16);
    EXPECT_EQ(s.panels[i], panel);
    EXPECT_EQ(s.values[i], s.values[i - 1] + panel);
  }
}

TEST(SampleF, HeadIntervalSplitIntoStepSizedPieces) {
  const auto spec = integrand_spec::catalog(integrand_id::exp_decay, 0.0);
  const auto F = gtrans::sample_F(spec, 5.0, 0.5, 1, {});
  EXPECT_NEAR(F[0], 1.0 - std::exp(-5.0), 5e-11);
}

TEST(Simpson, ExactOnCubics) {
  const auto cubic = [](double t) { return 2 * t * t * t - t + 1; };
  EXPECT_NEAR(gtrans::simpson(cubic, 0.0, 2.0, 2), 8.0 - 2.0 + 2.0, 1e-14);
}

TEST(Simpson, ConvergesAtFourthOrder) {
  const auto spec = integrand_spec::catalog(integrand_id::exp_decay, 0.0);
  const double exact = *spec.closed_form_F(2.0);
  double prev = 0;
  for (int n : {4, 8, 16, 32}) {
    quadrature_config cfg;
    cfg.subdivisions_per_panel = n;
    const double err = std::abs(gtrans::sample_F(spec, 0.0, 2.0, 2, cfg)[1] - exact);
    if (prev > 0) {
      EXPECT_GE(prev / err, 8.0) << n;
    }
    prev = err;
  }
}

TEST(Catalog, ReferenceValues) {
  EXPECT_DOUBLE_EQ(*integrand_spec::catalog(integrand_id::exp_decay, 0.0).reference, 1.0);
  EXPECT_DOUBLE_EQ(*integrand_spec::catalog(integrand_id::t_exp, 0.0).reference, 1.0);
  EXPECT_NEAR(*integrand_spec::catalog(integrand_id::sinc, 0.0).reference, std::numbers::pi / 2, 1e-15);
  // pi/2 - Si(1), Si(1) = 0.946083070367183...
  EXPECT_NEAR(*integrand_spec::catalog(integrand_id::sinc, 1.0).reference, std::numbers::pi / 2 - 0.9460830703671830,
              1e-12);
  EXPECT_EQ(integrand_spec::catalog(integrand_id::sinc, 0.0).f(0.0), 1.0);
  EXPECT_THROW(integrand_spec::catalog(integrand_id::table, 0.0), gtrans::argument_error);
}

TEST(Catalog, Names) {
  for (auto id : {integrand_id::exp_decay, integrand_id::t_exp, integrand_id::sinc, integrand_id::table})
    EXPECT_EQ(gtrans::integrand_from_string(gtrans::to_string(id)), id);
  EXPECT_FALSE(gtrans::integrand_from_string("nosuch"));
}

TEST(GTransform, ExpDecayIsExactFromOrderOne) {
  const auto spec = integrand_spec::catalog(integrand_id::exp_decay, 0.0);
  gtrans::g_transform_options opts;
  opts.quadrature = analytic();
  const auto r = gtrans::g_transform(spec, 0.5, 1.0, 3, opts);
  r.table.cells().for_each([](std::size_t j, std::size_t n, const gtrans::entry<double>& e) {
    if (n == 0) return;
    ASSERT_TRUE(e.valid()) << j << "," << n;
    EXPECT_NEAR(e.value, 1.0, 1e-12) << j << "," << n;
  });
}

TEST(GTransform, TExpIsExactFromOrderTwo) {
  const auto spec = integrand_spec::catalog(integrand_id::t_exp, 0.0);
  gtrans::g_transform_options opts;
  opts.quadrature = analytic();
  const auto r = gtrans::g_transform(spec, 1.0, 0.7, 4, opts);
  for (std::size_t n = 2; n <= 4; ++n) {
    ASSERT_TRUE(r.table.at(0, n).valid()) << n;
    EXPECT_NEAR(r.table.at(0, n).value, 1.0, 1e-10) << n;
  }
  EXPECT_GT(std::abs(r.table.at(0, 1).value - 1.0), 1e-3);
}

TEST(GTransform, SincConverges) {
  const auto spec = integrand_spec::catalog(integrand_id::sinc, 0.0);
  const auto r = gtrans::g_transform(spec, 0.0, 1.0, 10);
  const double e1 = std::abs(r.table.at(0, 1).value - std::numbers::pi / 2);
  const double e10 = std::abs(r.table.at(0, 10).value - std::numbers::pi / 2);
  EXPECT_LE(e10, 0.01 * e1);
}

TEST(GTransform, ErrorsAndDifferences) {
  const auto spec = integrand_spec::catalog(integrand_id::exp_decay, 0.0);
  const auto r = gtrans::g_transform(spec, 1.0, 1.0, 3);
  ASSERT_TRUE(r.reference);
  EXPECT_NEAR(r.errors.at(0, 0).value, std::exp(-1.0), 1e-9);
  ASSERT_EQ(r.diagonal_differences.size(), 3u);
  EXPECT_TRUE(r.diagonal_differences[0].has_value());
  EXPECT_EQ(r.samples.A.size(), 4u);
  EXPECT_EQ(r.samples.u.size(), 7u);
}

TEST(GTransform, TableIntegrandWithoutReference) {
  std::vector<double> F, f;
  for (int i = 0; i <= 6; ++i) {
    F.push_back(1.0 - std::exp(-0.5 * i));
    f.push_back(std::exp(-0.5 * i));
  }
  const auto spec = integrand_spec::from_samples(F, f);
  const auto r = gtrans::g_transform(spec, 0.0, 0.5, 3);
  EXPECT_FALSE(r.reference);
  EXPECT_EQ(r.errors.end_column(), 0u);
  EXPECT_NEAR(r.table.at(0, 1).value, 1.0, 1e-12);
  EXPECT_THROW(gtrans::g_transform(spec, 0.0, 0.5, 4), gtrans::argument_error);
}

TEST(GTransform, ZeroIntegrandSampleIsInitializationError) {
  const auto spec = integrand_spec::catalog(integrand_id::t_exp, 0.0);
  try {
    (void)gtrans::g_transform(spec, 0.0, 1.0, 2);
    FAIL();
  } catch (const gtrans::initialization_error& e) {
    EXPECT_EQ(e.index(), 0u);
  }
  gtrans::g_transform_options eps;
  eps.method = gtrans::engine::epsilon;
  EXPECT_NO_THROW(gtrans::g_transform(spec, 0.0, 1.0, 2, eps));
}

TEST(GTransform, RejectsZeroOrder) {
  const auto spec = integrand_spec::catalog(integrand_id::exp_decay, 0.0);
  EXPECT_THROW(gtrans::g_transform(spec, 0.0, 1.0, 0), gtrans::argument_error);
}

TEST(GTransform, ExactAndRsEnginesAgree) {
  for (auto id : {integrand_id::exp_decay, integrand_id::t_exp}) {
    const auto spec = integrand_spec::catalog(id, 0.0);
    for (std::size_t n_max = 1; n_max <= 5; ++n_max) {
      gtrans::g_transform_options fs, rs;
      rs.method = gtrans::engine::rs;
      const auto a = gtrans::g_transform(spec, 0.5, 1.0, n_max, fs);
      const auto b = gtrans::g_transform(spec, 0.5, 1.0, n_max, rs);
      a.table.cells().for_each([&](std::size_t j, std::size_t n, const gtrans::entry<double>& e) {
        const auto& o = b.table.at(j, n);
        ASSERT_EQ(e.status, o.status);
        if (e.valid()) {
          EXPECT_NEAR(e.value, o.value, 1e-8 * std::max(1.0, std::abs(e.value)));
        }
      });
    }
  }
}

TEST(GTransform, DoubleEnginesAgreeWhereBothValid) {
  for (auto id : {integrand_id::exp_decay, integrand_id::t_exp, integrand_id::sinc}) {
    const auto spec = integrand_spec::catalog(id, 0.0);
    for (std::size_t n_max = 1; n_max <= 5; ++n_max) {
      gtrans::g_transform_options fs, rs;
      fs.mode = rs.mode = gtrans::arithmetic::floating;
      rs.method = gtrans::engine::rs;
      const auto a = gtrans::g_transform(spec, 0.5, 1.0, n_max, fs);
      const auto b = gtrans::g_transform(spec, 0.5, 1.0, n_max, rs);
      a.table.cells().for_each([&](std::size_t j, std::size_t n, const gtrans::entry<double>& e) {
        const auto& o = b.table.at(j, n);
        if (e.valid() && o.valid()) {
          EXPECT_NEAR(e.value, o.value, 1e-8 * std::max(1.0, std::abs(e.value))) << to_string(id) << " " << j << "," << n;
        }
      });
    }
  }
}

TEST(GTransform, EpsilonUsesFSamplesOnly) {
  const auto spec = integrand_spec::catalog(integrand_id::exp_decay, 0.0);
  gtrans::g_transform_options opts;
  opts.method = gtrans::engine::epsilon;
  opts.quadrature = analytic();
  const auto r = gtrans::g_transform(spec, 0.0, 1.0, 4, opts);
  EXPECT_TRUE(r.samples.u.empty());
  EXPECT_EQ(r.table.columns(), 3u);
  EXPECT_NEAR(r.table.at(0, 1).value, 1.0, 1e-12);
}

}  // namespace
