#pragma once

#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "g_transform.hpp"
#include "opbench.hpp"
#include "rational.hpp"
#include "shanks.hpp"
#include "table.hpp"

namespace gtrans::io {

using json = nlohmann::json;

enum class input_mode { general, shanks };

/// Sequences as read from disk, before a number type is chosen. Terms are
/// kept as JSON so that exact and double runs convert from the same text.
struct input_document {
  std::vector<json> A;
  std::optional<std::vector<json>> u;
  input_mode mode = input_mode::general;
};

/// Shortest decimal that reads back as `d`.
inline std::string shortest_decimal(double d) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, res.ptr);
}

namespace detail {

inline std::vector<json> read_terms(const json& doc, const char* field) {
  const json& v = doc.at(field);
  if (!v.is_array()) throw parse_error(std::string("field '") + field + "' must be a list", field);
  std::vector<json> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const json& t = v[i];
    if (!t.is_number() && !t.is_string())
      throw parse_error(std::string("field '") + field + "' term " + std::to_string(i) + " must be a number or a string",
                        field);
    out.push_back(t);
  }
  return out;
}

}  // namespace detail

inline input_document parse_input(const json& doc) {
  if (!doc.is_object()) throw parse_error("input must be a JSON object", "");
  input_document in;
  if (!doc.contains("A")) throw parse_error("missing field 'A'", "A");
  in.A = detail::read_terms(doc, "A");
  if (in.A.empty()) throw parse_error("field 'A' must not be empty", "A");
  if (doc.contains("u")) in.u = detail::read_terms(doc, "u");
  if (doc.contains("mode")) {
    const json& m = doc.at("mode");
    if (m == "general")
      in.mode = input_mode::general;
    else if (m == "shanks")
      in.mode = input_mode::shanks;
    else
      throw parse_error("field 'mode' must be \"general\" or \"shanks\"", "mode");
  }
  if (in.mode == input_mode::shanks && in.u)
    throw parse_error("field 'u' must be absent in shanks mode", "u");
  return in;
}

inline input_document parse_input_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what(), "");
  }
  return parse_input(doc);
}

/// One term as T. Strings accept the rational_from_text forms; numbers
/// go through their shortest decimal so 0.1 reads as 1/10.
template <class T>
T term_as(const json& t, std::string_view field, std::size_t index) {
  try {
    std::string text;
    if (t.is_string())
      text = t.get<std::string>();
    else if (t.is_number_integer())
      text = t.is_number_unsigned() ? std::to_string(t.get<unsigned long long>()) : std::to_string(t.get<long long>());
    else
      text = shortest_decimal(t.get<double>());
    if constexpr (std::is_same_v<T, rational>)
      return rational_from_text(text);
    else
      return rational_from_text(text).to_double();
  } catch (const parse_error& e) {
    throw parse_error("field '" + std::string(field) + "' term " + std::to_string(index) + ": " + e.what(),
                      std::string(field));
  }
}

template <class T>
std::vector<T> terms_as(const std::vector<json>& terms, std::string_view field) {
  std::vector<T> out;
  for (std::size_t i = 0; i < terms.size(); ++i) out.push_back(term_as<T>(terms[i], field, i));
  return out;
}

/// The sequence pair an engine consumes. Shanks mode derives u from A; the
/// epsilon engine only ever reads A.
template <class T>
sequence_pair<T> to_sequence(const input_document& in, engine method) {
  sequence_pair<T> seq;
  auto A = terms_as<T>(in.A, "A");
  if (method == engine::epsilon) {
    seq.A = std::move(A);
    return seq;
  }
  if (in.mode == input_mode::shanks) return shanks_prepare(A);
  if (!in.u) throw parse_error("field 'u' is required in general mode for " + std::string(to_string(method)), "u");
  seq.A = std::move(A);
  seq.u = terms_as<T>(*in.u, "u");
  seq.validate();
  return seq;
}

inline json value_json(const rational& v) { return v.to_string(); }
inline json value_json(double v) { return v; }

template <class T>
json entry_json(const entry<T>& e) {
  return e.valid() ? value_json(e.value) : json(nullptr);
}

template <class T>
json table_json(const extrapolation_table<T>& t) {
  json cells = json::array();
  t.cells().for_each([&](std::size_t j, std::size_t n, const entry<T>& e) {
    cells.push_back({{"j", j}, {"n", n}, {"value", entry_json(e)}, {"status", to_string(e.status)}});
  });
  return cells;
}

template <class T>
json diagonal_json(const extrapolation_table<T>& t) {
  json d = json::array();
  for (const auto& e : t.diagonal()) d.push_back(entry_json(e));
  return d;
}

template <class T>
json best_json(const extrapolation_table<T>& t) {
  const auto b = t.best();
  if (!b) return nullptr;
  return {{"n", b->first}, {"value", value_json(b->second)}};
}

template <class T>
json output_document(const extrapolation_table<T>& t, std::size_t L) {
  return {{"method", to_string(t.method())},
          {"L", L},
          {"arithmetic", std::is_same_v<T, rational> ? "exact" : "double"},
          {"table", table_json(t)},
          {"diagonal", diagonal_json(t)},
          {"best", best_json(t)}};
}

/// Reads a table array back as T, keyed by (j, n); invalid cells map to
/// nullopt.
template <class T>
std::vector<std::tuple<std::size_t, std::size_t, std::optional<T>>> read_table(const json& cells) {
  std::vector<std::tuple<std::size_t, std::size_t, std::optional<T>>> out;
  for (const auto& c : cells) {
    std::optional<T> v;
    if (!c.at("value").is_null()) {
      if constexpr (std::is_same_v<T, double>)
        v = c.at("value").is_string() ? rational_from_text(c.at("value").get<std::string>()).to_double()
                                      : c.at("value").get<double>();
      else
        v = term_as<T>(c.at("value"), "value", out.size());
    }
    out.emplace_back(c.at("j").get<std::size_t>(), c.at("n").get<std::size_t>(), v);
  }
  return out;
}

inline json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

inline json integrate_json(const g_transform_result& r, std::string_view integrand, double a, std::size_t n_max,
                           arithmetic mode) {
  json errors = json::array();
  r.errors.for_each([&](std::size_t j, std::size_t n, const entry<double>& e) {
    if (e.valid()) errors.push_back({{"j", j}, {"n", n}, {"error", e.value}});
  });
  json diffs = json::array();
  for (const auto& d : r.diagonal_differences) diffs.push_back(optional_json(d));
  json doc = output_document(r.table, n_max);
  doc["arithmetic"] = to_string(mode);
  doc["integrand"] = integrand;
  doc["a"] = a;
  doc["x"] = r.x;
  doc["h"] = r.h;
  doc["reference"] = optional_json(r.reference);
  doc["errors"] = errors;
  doc["diagonal_differences"] = diffs;
  return doc;
}

inline json bench_json(const bench_report& rep, std::uint64_t seed) {
  return {{"method", to_string(rep.method)},
          {"L", rep.L},
          {"seed", seed},
          {"additions", rep.counts.additions},
          {"multiplications", rep.counts.multiplications},
          {"divisions", rep.counts.divisions},
          {"total", rep.total},
          {"normalized", {{"mul", rep.mul_per_L2}, {"add", rep.add_per_L2}, {"div", rep.div_per_L2}}},
          {"valid", rep.valid}};
}

}  // namespace gtrans::io
