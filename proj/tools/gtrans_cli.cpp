// gtrans: run the extrapolation engines, the integral driver, the operation
// benchmark and the exact equivalence suite from the command line.
//
// Exit codes: 0 success, 2 input could not be parsed or validated, 3 no
// usable result (table) or a counterexample (check), 64 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <gtrans/equivalence.hpp>
#include <gtrans/g_transform.hpp>
#include <gtrans/json_io.hpp>
#include <gtrans/opbench.hpp>

namespace {

using gtrans::io::json;

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_no_result = 3;
constexpr int exit_usage = 64;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gtrans::parse_error("cannot read '" + path + "'", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gtrans::parse_error("cannot write '" + path + "'", path);
  out << text << '\n';
}

std::string show(const gtrans::rational& v) { return v.to_string(); }
std::string show(double v) { return gtrans::io::shortest_decimal(v); }

template <class T>
std::string show(const gtrans::entry<T>& e) {
  return e.valid() ? show(e.value) : std::string(to_string(e.status));
}

// ---- table ---------------------------------------------------------------

struct table_args {
  std::string input;
  std::string method;
  bool exact = false;
  bool diagonal_only = false;
  std::string output;
  bool text = false;
  bool full = false;
};

template <class T>
std::string render_text(const gtrans::extrapolation_table<T>& t, std::size_t L, bool full) {
  std::ostringstream os;
  os << "method " << to_string(t.method()) << ", L = " << L << ", "
     << (std::is_same_v<T, gtrans::rational> ? "exact" : "double") << "\n";
  os << "diagonal A_n^(0):\n";
  const auto diag = t.diagonal();
  for (std::size_t n = 0; n < diag.size(); ++n) os << "  n=" << n << "  " << show(diag[n]) << "\n";
  if (const auto b = t.best())
    os << "best: n=" << b->first << "  " << show(b->second) << "\n";
  else
    os << "best: none\n";
  if (full) {
    os << "full table:\n";
    for (std::size_t n = 0; n < t.columns(); ++n)
      for (std::size_t j = 0; j < t.rows(n); ++j) os << "  (" << j << "," << n << ")  " << show(t.at(j, n)) << "\n";
  }
  std::string s = os.str();
  s.pop_back();
  return s;
}

template <class T>
bool only_breakdown_beyond_column_zero(const gtrans::extrapolation_table<T>& t) {
  bool any_valid = false, any_breakdown = false;
  t.cells().for_each([&](std::size_t, std::size_t n, const gtrans::entry<T>& e) {
    if (n == 0) return;
    any_valid = any_valid || e.valid();
    any_breakdown = any_breakdown || e.status == gtrans::entry_status::breakdown;
  });
  return any_breakdown && !any_valid;
}

template <class T>
int run_table_as(const table_args& args, const gtrans::io::input_document& doc, gtrans::engine method) {
  const auto seq = gtrans::io::to_sequence<T>(doc, method);
  gtrans::extrapolation_table<T> t;
  std::size_t L = seq.order();
  switch (method) {
    case gtrans::engine::fs_qd: t = gtrans::run_fs_qd(seq, args.diagonal_only); break;
    case gtrans::engine::rs: t = gtrans::run_rs(seq); break;
    case gtrans::engine::epsilon:
      t = gtrans::run_epsilon(seq.A);
      L = t.columns() - 1;
      break;
    case gtrans::engine::direct: throw usage_error("unsupported method");
  }
  write_output(args.text ? render_text(t, L, args.full) : gtrans::io::output_document(t, L).dump(2), args.output);
  return only_breakdown_beyond_column_zero(t) ? exit_no_result : exit_ok;
}

int cmd_table(const table_args& args) {
  const auto method = *gtrans::engine_from_string(args.method);
  if (args.diagonal_only && method != gtrans::engine::fs_qd) throw usage_error("--diagonal-only applies to fsqd only");
  const auto doc = gtrans::io::parse_input_text(read_file(args.input));
  return args.exact ? run_table_as<gtrans::rational>(args, doc, method) : run_table_as<double>(args, doc, method);
}

// ---- integrate -------------------------------------------------------------

struct integrate_args {
  std::string integrand;
  double a = 0.0;
  std::optional<double> x;
  double h = 1.0;
  std::size_t n_max = 0;
  std::string engine = "fsqd";
  int subdivisions = 64;
  bool analytic_f = false;
  std::string arithmetic = "exact";
  std::string samples;
  bool json = false;
};

gtrans::integrand_spec load_table_integrand(const std::string& path) {
  if (path.empty()) throw usage_error("integrand 'table' needs --samples PATH");
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw gtrans::parse_error(std::string("malformed JSON: ") + e.what(), path);
  }
  const auto numbers = [&](const char* field) {
    if (!doc.is_object() || !doc.contains(field) || !doc.at(field).is_array())
      throw gtrans::parse_error(std::string("field '") + field + "' must be a list of numbers", field);
    std::vector<double> out;
    for (const auto& v : doc.at(field)) {
      if (!v.is_number() && !v.is_string())
        throw gtrans::parse_error(std::string("field '") + field + "' must be a list of numbers", field);
      out.push_back(gtrans::io::term_as<double>(v, field, out.size()));
    }
    return out;
  };
  std::optional<double> reference;
  if (doc.contains("reference") && !doc.at("reference").is_null())
    reference = gtrans::io::term_as<double>(doc.at("reference"), "reference", 0);
  return gtrans::integrand_spec::from_samples(numbers("F"), numbers("f"), reference);
}

int cmd_integrate(const integrate_args& args) {
  const auto id = gtrans::integrand_from_string(args.integrand);
  if (!id)
    throw usage_error("unknown integrand '" + args.integrand + "'; catalog ids: " +
                      std::string(gtrans::integrand_catalog_ids));
  const auto spec =
      *id == gtrans::integrand_id::table ? load_table_integrand(args.samples) : gtrans::integrand_spec::catalog(*id, args.a);
  const double x = args.x.value_or(args.a);

  gtrans::g_transform_options opts;
  opts.method = *gtrans::engine_from_string(args.engine);
  opts.quadrature.subdivisions_per_panel = args.subdivisions;
  opts.quadrature.analytic_F = args.analytic_f;
  opts.mode = args.arithmetic == "double" ? gtrans::arithmetic::floating : gtrans::arithmetic::exact;
  const auto r = gtrans::g_transform(spec, x, args.h, args.n_max, opts);

  if (args.json) {
    std::cout << gtrans::io::integrate_json(r, args.integrand, args.a, args.n_max, opts.mode).dump(2) << '\n';
    return exit_ok;
  }
  std::printf("integrand %s on [%s, inf), x = %s, h = %s, engine %s, %s arithmetic\n", args.integrand.c_str(),
              show(args.a).c_str(), show(x).c_str(), show(args.h).c_str(), args.engine.c_str(),
              std::string(to_string(opts.mode)).c_str());
  if (r.reference) std::printf("reference %.17g\n", *r.reference);
  const auto diag = r.table.diagonal();
  for (std::size_t n = 0; n < diag.size(); ++n) {
    if (!diag[n].valid()) {
      std::printf("  G_%zu  %s\n", n, std::string(to_string(diag[n].status)).c_str());
      continue;
    }
    if (r.reference)
      std::printf("  G_%zu  %.17g  error %.3e\n", n, diag[n].value, std::abs(diag[n].value - *r.reference));
    else if (n > 0 && r.diagonal_differences[n - 1])
      std::printf("  G_%zu  %.17g  change %.3e\n", n, diag[n].value, *r.diagonal_differences[n - 1]);
    else
      std::printf("  G_%zu  %.17g\n", n, diag[n].value);
  }
  return exit_ok;
}

// ---- bench -----------------------------------------------------------------

struct bench_args {
  std::string method;
  std::size_t L = 0;
  std::uint64_t seed = 1;
  bool json = false;
};

int cmd_bench(const bench_args& args) {
  if (args.L < gtrans::min_bench_order)
    throw usage_error("--L must be >= " + std::to_string(gtrans::min_bench_order));
  const auto rep = gtrans::bench_method_run(*gtrans::bench_method_from_string(args.method), args.L, args.seed);
  if (args.json) {
    std::cout << gtrans::io::bench_json(rep, args.seed).dump(2) << '\n';
    return exit_ok;
  }
  std::printf("method %s, L = %zu, seed %llu%s\n", std::string(to_string(rep.method)).c_str(), rep.L,
              static_cast<unsigned long long>(args.seed), rep.valid ? "" : " (breakdown: partial counts)");
  std::printf("  additions       %10llu  (%.4f L^2)\n", static_cast<unsigned long long>(rep.counts.additions),
              rep.add_per_L2);
  std::printf("  multiplications %10llu  (%.4f L^2)\n", static_cast<unsigned long long>(rep.counts.multiplications),
              rep.mul_per_L2);
  std::printf("  divisions       %10llu  (%.4f L^2)\n", static_cast<unsigned long long>(rep.counts.divisions),
              rep.div_per_L2);
  std::printf("  total           %10llu\n", static_cast<unsigned long long>(rep.total));
  return exit_ok;
}

// ---- check -----------------------------------------------------------------

struct check_args {
  std::size_t L = 4;
  std::size_t cases = 20;
  std::uint64_t seed = 1;
};

constexpr std::size_t max_check_order = 5;

int cmd_check(const check_args& args) {
  if (args.L < 1 || args.L > max_check_order)
    throw usage_error("--L must be between 1 and " + std::to_string(max_check_order));
  if (args.cases < 1) throw usage_error("--cases must be >= 1");
  for (const auto& rep : gtrans::run_check_suite(args.L, args.cases, args.seed)) {
    if (!rep.passed()) {
      std::printf("FAIL  %s\n  counterexample: %s\n", rep.suite.c_str(), rep.counterexample->c_str());
      return exit_no_result;
    }
    std::printf("ok    %s: %zu cases, %zu cells compared, %zu redraws\n", rep.suite.c_str(), rep.cases,
                rep.comparisons, rep.redraws);
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher-order G-transformation: FS/qd, rs and epsilon engines"};
  app.require_subcommand(1);
  // --h is the node spacing, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  table_args ta;
  auto* table = app.add_subcommand("table", "Extrapolation table of a sequence read from JSON");
  table->add_option("--input", ta.input, "Input document")->required();
  table->add_option("--method", ta.method, "Engine")->required()->check(CLI::IsMember({"fsqd", "rs", "eps"}));
  table->add_flag("--exact", ta.exact, "Exact rational arithmetic");
  table->add_flag("--diagonal-only", ta.diagonal_only, "FS/qd: form A_n^(0) only");
  table->add_option("--output", ta.output, "Write JSON here instead of standard output");
  table->add_flag("--text", ta.text, "Human-readable output");
  table->add_flag("--full", ta.full, "With --text: every entry, not just the diagonal");

  integrate_args ia;
  auto* integrate = app.add_subcommand("integrate", "G-transformation of an integral over [a, inf)");
  integrate->set_help_flag("--help", "Print this help message and exit");
  integrate->add_option("--integrand", ia.integrand, "exp_decay, t_exp, sinc or table")->required();
  integrate->add_option("--a", ia.a, "Lower limit");
  integrate->add_option("--x", ia.x, "First node (default a)");
  integrate->add_option("--h", ia.h, "Node spacing")->check(CLI::PositiveNumber);
  integrate->add_option("--n-max", ia.n_max, "Highest order")->required()->check(CLI::Range(1, 1000));
  integrate->add_option("--engine", ia.engine, "Engine")->check(CLI::IsMember({"fsqd", "rs", "eps"}));
  integrate->add_option("--subdivisions", ia.subdivisions, "Simpson subdivisions per panel (even)");
  integrate->add_flag("--analytic-f", ia.analytic_f, "Closed-form F where available");
  integrate->add_option("--arithmetic", ia.arithmetic, "Recursion arithmetic")->check(CLI::IsMember({"exact", "double"}));
  integrate->add_option("--samples", ia.samples, "JSON {\"F\": [...], \"f\": [...]} for the table integrand");
  integrate->add_flag("--json", ia.json, "Machine-readable output");

  bench_args ba;
  auto* bench = app.add_subcommand("bench", "Operation counts of one engine on random input");
  bench->add_option("--method", ba.method, "Engine")
      ->required()
      ->check(CLI::IsMember({"fsqd", "fsqd_diag", "rs", "eps"}));
  bench->add_option("--L", ba.L, "Order (>= 10)")->required();
  bench->add_option("--seed", ba.seed, "Random seed");
  bench->add_flag("--json", ba.json, "Machine-readable output");

  check_args ca;
  auto* check = app.add_subcommand("check", "Exact cross-engine equivalence suite");
  check->add_option("--L", ca.L, "Order (1..5)");
  check->add_option("--cases", ca.cases, "Cases per suite");
  check->add_option("--seed", ca.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "gtrans: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*table) return cmd_table(ta);
    if (*integrate) return cmd_integrate(ia);
    if (*bench) return cmd_bench(ba);
    if (*check) return cmd_check(ca);
  } catch (const usage_error& e) {
    std::cerr << "gtrans: " << e.what() << "\n";
    return exit_usage;
  } catch (const gtrans::parse_error& e) {
    std::cerr << "gtrans: " << e.what() << "\n";
    return exit_input;
  } catch (const gtrans::initialization_error& e) {
    std::cerr << "gtrans: " << e.what() << "\n";
    return exit_input;
  } catch (const gtrans::argument_error& e) {
    std::cerr << "gtrans: " << e.what() << "\n";
    return exit_input;
  }
  return exit_usage;
}
