#pragma once

// Cross-engine equivalence checks over random rational inputs. Every engine
// must agree exactly with the oracle, cell by cell.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "epsilon.hpp"
#include "errors.hpp"
#include "fs_qd.hpp"
#include "oracle.hpp"
#include "qd.hpp"
#include "rational.hpp"
#include "rs.hpp"
#include "shanks.hpp"
#include "table.hpp"

namespace gtrans {

/// Draws p/q with |p| <= max_numerator and 1 <= q <= max_denominator.
class rational_source {
public:
  explicit rational_source(std::uint64_t seed, long max_numerator = 20, long max_denominator = 10)
      : rng_(seed), num_(-max_numerator, max_numerator), den_(1, max_denominator) {}

  rational next() { return rational(mpz_class(num_(rng_)), mpz_class(den_(rng_))); }

  rational next_nonzero() {
    for (;;) {
      rational r = next();
      if (r.sign() != 0) return r;
    }
  }

  std::vector<rational> list(std::size_t count) {
    std::vector<rational> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(next());
    return out;
  }

  std::vector<rational> nonzero_list(std::size_t count) {
    std::vector<rational> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(next_nonzero());
    return out;
  }

  /// A_0..A_L and nonzero u_0..u_{2L}.
  sequence_pair<rational> pair(std::size_t L) { return {list(L + 1), nonzero_list(2 * L + 1), false}; }

private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> num_;
  std::uniform_int_distribution<long> den_;
};

struct equivalence_report {
  std::string suite;
  std::size_t cases = 0;
  /// Draws discarded because some engine broke down.
  std::size_t redraws = 0;
  /// Cells compared across all accepted cases.
  std::size_t comparisons = 0;
  std::optional<std::string> counterexample;

  bool passed() const noexcept { return !counterexample.has_value(); }
};

namespace detail {

inline constexpr std::size_t max_redraws_per_case = 1000;

inline std::string render(const std::vector<rational>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].to_string();
  return s + "]";
}

inline std::string render(const entry<rational>& e) {
  return e.valid() ? e.value.to_string() : std::string(to_string(e.status));
}

template <class T>
bool has_breakdown(const triangle<T>& t) {
  bool broke = false;
  t.for_each([&](std::size_t, std::size_t, const entry<T>& e) { broke = broke || e.status == entry_status::breakdown; });
  return broke;
}

inline void check_order(std::size_t L) {
  if (L < 1 || L > oracle::max_order)
    throw argument_error("equivalence checks need 1 <= L <= " + std::to_string(oracle::max_order) + ", got " +
                         std::to_string(L));
}

inline void count_redraw(equivalence_report& rep, std::size_t accepted) {
  if (++rep.redraws > max_redraws_per_case * (accepted + 1))
    throw argument_error(rep.suite + ": too many breakdown draws");
}

}  // namespace detail

/// run_fs_qd = run_rs = direct_table on every (j, n), status and value.
inline equivalence_report check_engines_agree(std::size_t L, std::size_t cases, std::uint64_t seed) {
  detail::check_order(L);
  equivalence_report rep;
  rep.suite = "fsqd = rs = direct";
  rational_source src(seed);
  while (rep.cases < cases) {
    const auto seq = src.pair(L);
    const auto fs = run_fs_qd(seq);
    const auto rs = run_rs(seq);
    const auto direct = oracle::direct_table(seq);
    if (detail::has_breakdown(fs.cells()) || detail::has_breakdown(rs.cells()) ||
        detail::has_breakdown(direct.cells())) {
      detail::count_redraw(rep, rep.cases);
      continue;
    }
    ++rep.cases;
    direct.cells().for_each([&](std::size_t j, std::size_t n, const entry<rational>& d) {
      if (rep.counterexample) return;
      ++rep.comparisons;
      const auto& a = fs.cells().get(j, n);
      const auto& b = rs.cells().get(j, n);
      const bool same = a.status == d.status && b.status == d.status &&
                        (!d.valid() || (a.value == d.value && b.value == d.value));
      if (!same) {
        std::ostringstream msg;
        msg << "A = " << detail::render(seq.A) << ", u = " << detail::render(seq.u) << ": entry (" << j << "," << n
            << ") fsqd " << detail::render(a) << ", rs " << detail::render(b) << ", direct " << detail::render(d);
        rep.counterexample = msg.str();
      }
    });
    if (rep.counterexample) break;
  }
  return rep;
}

/// eps(j, 2n) = FS/qd on the Shanks pair, wherever both are valid. Draws
/// with a zero difference are redrawn; breakdowns are simply skipped.
inline equivalence_report check_epsilon_identity(std::size_t L, std::size_t cases, std::uint64_t seed) {
  detail::check_order(L);
  equivalence_report rep;
  rep.suite = "epsilon = Shanks via fsqd";
  rational_source src(seed);
  while (rep.cases < cases) {
    auto A = src.list(2 * L + 1);
    bool flat = false;
    for (std::size_t k = 0; k + 1 < A.size(); ++k) flat = flat || A[k + 1] == A[k];
    if (flat) {
      detail::count_redraw(rep, rep.cases);
      continue;
    }
    const auto eps = run_epsilon(A);
    const auto fs = run_fs_qd(shanks_prepare(A));
    ++rep.cases;
    fs.cells().for_each([&](std::size_t j, std::size_t n, const entry<rational>& f) {
      if (rep.counterexample) return;
      const auto& e = eps.cells().get(j, n);
      if (!f.valid() || !e.valid()) return;
      ++rep.comparisons;
      if (f.value != e.value) {
        std::ostringstream msg;
        msg << "A = " << detail::render(A) << ": entry (" << j << "," << n << ") eps " << e.value.to_string()
            << ", fsqd " << f.value.to_string();
        rep.counterexample = msg.str();
      }
    });
    if (rep.counterexample) break;
  }
  return rep;
}

/// q, e, r, s from the recursions equal their Hankel-determinant ratios.
inline equivalence_report check_determinant_identities(std::size_t L, std::size_t cases, std::uint64_t seed) {
  detail::check_order(L);
  equivalence_report rep;
  rep.suite = "qd and rs determinant ratios";
  rational_source src(seed);
  while (rep.cases < cases) {
    const auto u = src.nonzero_list(2 * L + 1);
    const auto qd = build_qd_table(u, L);
    const auto rs = run_rs_detailed(sequence_pair<rational>{src.list(L + 1), u, false}).rs;
    if (detail::has_breakdown(qd.q) || detail::has_breakdown(qd.e) || detail::has_breakdown(rs.r) ||
        detail::has_breakdown(rs.s)) {
      detail::count_redraw(rep, rep.cases);
      continue;
    }
    ++rep.cases;
    const auto compare = [&](const char* name, const triangle<rational>& t, auto ref) {
      t.for_each([&](std::size_t j, std::size_t n, const entry<rational>& x) {
        if (rep.counterexample || !x.valid()) return;
        ++rep.comparisons;
        std::optional<rational> expected;
        try {
          expected = ref(j, n);
        } catch (const singular_error&) {
        }
        if (!expected || *expected != x.value) {
          std::ostringstream msg;
          msg << "u = " << detail::render(u) << ": " << name << "(" << j << "," << n << ") recursion "
              << x.value.to_string() << ", determinant ratio " << (expected ? expected->to_string() : "undefined");
          rep.counterexample = msg.str();
        }
      });
    };
    compare("q", qd.q, [&](std::size_t j, std::size_t n) { return oracle::q_ref(u, j, n); });
    compare("e", qd.e, [&](std::size_t j, std::size_t n) { return oracle::e_ref(u, j, n); });
    compare("r", rs.r, [&](std::size_t j, std::size_t n) { return oracle::r_ref(u, j, n); });
    compare("s", rs.s, [&](std::size_t j, std::size_t n) { return oracle::s_ref(u, j, n); });
    if (rep.counterexample) break;
  }
  return rep;
}

/// The three suites in order; stops at the first failing suite.
inline std::vector<equivalence_report> run_check_suite(std::size_t L, std::size_t cases, std::uint64_t seed) {
  std::vector<equivalence_report> out;
  out.push_back(check_engines_agree(L, cases, seed));
  if (!out.back().passed()) return out;
  out.push_back(check_epsilon_identity(L, cases, seed + 1));
  if (!out.back().passed()) return out;
  out.push_back(check_determinant_identities(L, cases, seed + 2));
  return out;
}

}  // namespace gtrans
