#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "counting.hpp"
#include "epsilon.hpp"
#include "errors.hpp"
#include "fs_qd.hpp"
#include "rs.hpp"
#include "table.hpp"

namespace gtrans {

enum class bench_method { fs_qd, fs_qd_diagonal, rs, epsilon };

inline std::string_view to_string(bench_method m) {
  switch (m) {
    case bench_method::fs_qd: return "fsqd";
    case bench_method::fs_qd_diagonal: return "fsqd_diag";
    case bench_method::rs: return "rs";
    case bench_method::epsilon: return "eps";
  }
  return "unknown";
}

inline std::optional<bench_method> bench_method_from_string(std::string_view s) {
  if (s == "fsqd") return bench_method::fs_qd;
  if (s == "fsqd_diag") return bench_method::fs_qd_diagonal;
  if (s == "rs") return bench_method::rs;
  if (s == "eps") return bench_method::epsilon;
  return std::nullopt;
}

inline constexpr std::size_t min_bench_order = 10;

struct bench_report {
  bench_method method = bench_method::fs_qd;
  std::size_t L = 0;
  op_counts counts;
  double mul_per_L2 = 0.0;
  double add_per_L2 = 0.0;
  double div_per_L2 = 0.0;
  std::uint64_t total = 0;
  /// False when some entry broke down, which truncates the counts.
  bool valid = true;
};

/// Reproducible bench input: A_0..A_L and u_0..u_{2L} uniform in
/// [0.5, 1.5]. The epsilon run uses A_0..A_{2L} from the same stream.
struct bench_input {
  std::vector<counted> A;
  std::vector<counted> u;
  std::vector<counted> A_long;
};

inline bench_input make_bench_input(std::size_t L, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.5, 1.5);
  bench_input in;
  for (std::size_t i = 0; i <= 2 * L; ++i) in.A_long.emplace_back(dist(rng));
  for (std::size_t i = 0; i <= 2 * L; ++i) in.u.emplace_back(dist(rng));
  in.A.assign(in.A_long.begin(), in.A_long.begin() + static_cast<std::ptrdiff_t>(L + 1));
  return in;
}

namespace detail {

template <class T>
bool any_breakdown(const extrapolation_table<T>& t) {
  bool broke = false;
  t.cells().for_each([&](std::size_t, std::size_t, const entry<T>& e) {
    broke = broke || e.status == entry_status::breakdown;
  });
  return broke;
}

}  // namespace detail

/// Runs one engine over counting arithmetic. Only the recursion arithmetic
/// is tallied; input generation and status bookkeeping are free.
inline bench_report bench_method_run(bench_method method, std::size_t L, std::uint64_t seed) {
  if (L < min_bench_order)
    throw argument_error("bench needs L >= " + std::to_string(min_bench_order) + ", got " + std::to_string(L));
  const bench_input in = make_bench_input(L, seed);
  sequence_pair<counted> seq{in.A, in.u, false};

  bench_report rep;
  rep.method = method;
  rep.L = L;
  const auto run = [&] {
    switch (method) {
      case bench_method::fs_qd: return detail::any_breakdown(run_fs_qd(seq, false));
      case bench_method::fs_qd_diagonal: return detail::any_breakdown(run_fs_qd(seq, true));
      case bench_method::rs: return detail::any_breakdown(run_rs(seq));
      case bench_method::epsilon: return detail::any_breakdown(run_epsilon(in.A_long));
    }
    return false;
  };
  op_counts counts;
  try {
    auto [broke, tally] = with_counting(run);
    counts = tally;
    rep.valid = !broke;
  } catch (const breakdown_error& e) {
    counts = e.partial_counts();
    rep.valid = false;
  }
  rep.counts = counts;
  const double L2 = static_cast<double>(L) * static_cast<double>(L);
  rep.mul_per_L2 = static_cast<double>(counts.multiplications) / L2;
  rep.add_per_L2 = static_cast<double>(counts.additions) / L2;
  rep.div_per_L2 = static_cast<double>(counts.divisions) / L2;
  rep.total = counts.total();
  return rep;
}

/// total(rs) / total(FS/qd) on identical inputs.
inline double compare_ratio(std::size_t L, std::uint64_t seed) {
  const auto rs = bench_method_run(bench_method::rs, L, seed);
  const auto fs = bench_method_run(bench_method::fs_qd, L, seed);
  return static_cast<double>(rs.total) / static_cast<double>(fs.total);
}

}  // namespace gtrans
