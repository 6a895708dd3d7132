// Accelerates the partial sums of 1 - 1/2 + 1/3 - ... (limit ln 2) three
// ways, then runs the integral driver on sin(t)/t.

#include <cmath>
#include <cstdio>
#include <vector>

#include <gtrans/gtrans.hpp>

int main() {
  using gtrans::rational;

  std::vector<rational> partial;
  rational s(0);
  for (int k = 1; k <= 13; ++k) {
    s += rational(k % 2 ? 1 : -1) / rational(k);
    partial.push_back(s);
  }

  const auto eps = gtrans::run_epsilon(partial);
  const auto fs = gtrans::run_fs_qd(gtrans::shanks_prepare(partial));
  const auto rs = gtrans::run_rs(gtrans::shanks_prepare(partial));
  std::printf("ln 2 = %.17g\n", std::log(2.0));
  for (std::size_t n = 0; n < fs.columns(); ++n) {
    const auto& a = fs.at(0, n);
    const auto& b = rs.at(0, n);
    const auto& c = eps.at(0, n);
    if (!a.valid() || !b.valid() || !c.valid()) continue;
    std::printf("n=%zu  fsqd %.17g  rs %s  eps %s\n", n, a.value.to_double(), b.value == a.value ? "same" : "DIFFERS",
                c.value == a.value ? "same" : "DIFFERS");
  }

  const auto spec = gtrans::integrand_spec::catalog(gtrans::integrand_id::sinc, 0.0);
  const auto g = gtrans::g_transform(spec, 0.0, 1.0, 10);
  std::printf("\nintegral of sin(t)/t over [0, inf) = %.15g\n", *g.reference);
  const auto diag = g.table.diagonal();
  for (std::size_t n = 1; n < diag.size(); ++n)
    if (diag[n].valid()) std::printf("G_%zu(0;1) = %.15g  error %.3g\n", n, diag[n].value, std::abs(diag[n].value - *g.reference));
  return 0;
}
