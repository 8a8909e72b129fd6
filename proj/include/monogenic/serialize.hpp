#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "monogenic/polynomial.hpp"
#include "monogenic/report.hpp"

namespace monogenic {

using json = nlohmann::json;

// Coefficient list shared by the multivector and polynomial forms; only the
// key holding the rational differs ("coeff" standalone, "q" inside polynomials).
inline json multivector_to_json(const Multivector& a, const char* value_key = "coeff") {
  json out = json::array();
  for (const auto& [b, q] : a.terms())
    out.push_back({{"blade", b.indices()}, {value_key, to_fraction_string(q)}});
  return out;
}

inline Multivector multivector_from_json(const json& j, const AlgebraContext& ctx,
                                         const char* value_key = "coeff") {
  if (!j.is_array()) throw ParseError("multivector must be a JSON array");
  Multivector out(ctx);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("blade") || !term.contains(value_key))
      throw ParseError(std::string("multivector term needs 'blade' and '") + value_key + "'");
    const json& blade = term.at("blade");
    if (!blade.is_array()) throw ParseError("'blade' must be an index list");
    std::vector<unsigned> indices;
    for (const auto& idx : blade) {
      if (!idx.is_number_unsigned()) throw ParseError("blade index must be a positive integer");
      const auto v = idx.get<unsigned>();
      if (!indices.empty() && v <= indices.back())
        throw ParseError("blade indices must be strictly increasing");
      indices.push_back(v);
    }
    const json& value = term.at(value_key);
    if (!value.is_string()) throw ParseError("coefficient must be a \"num/den\" string");
    try {
      out.add_term(Blade::from_indices(indices, ctx), parse_rational(value.get<std::string>()));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  return out;
}

// { "m": int, "terms": [ { "exps": [a_0..a_m], "coeff": [ {"blade": [...], "q": "n/d"} ] } ] }
// with terms in graded lexicographic order.
inline json polynomial_to_json(const CliffordPolynomial& p) {
  const std::size_t vars = p.variable_count();
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    std::vector<unsigned> exps(vars);
    for (std::size_t i = 0; i < vars; ++i) exps[i] = e[i];
    terms.push_back({{"exps", exps}, {"coeff", multivector_to_json(c, "q")}});
  }
  return {{"m", p.context().dimension()}, {"terms", terms}};
}

inline CliffordPolynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("terms"))
    throw ParseError("polynomial needs 'm' and 'terms'");
  if (!j.at("m").is_number_unsigned()) throw ParseError("'m' must be a positive integer");
  const auto m = j.at("m").get<unsigned>();
  if (m < 1 || m > AlgebraContext::kMaxDimension) throw ParseError("'m' out of range");
  const AlgebraContext ctx(m);
  CliffordPolynomial out(ctx);
  if (!j.at("terms").is_array()) throw ParseError("'terms' must be an array");
  for (const auto& term : j.at("terms")) {
    if (!term.is_object() || !term.contains("exps") || !term.contains("coeff"))
      throw ParseError("term needs 'exps' and 'coeff'");
    const json& exps = term.at("exps");
    if (!exps.is_array() || exps.size() != m + 1) throw ParseError("'exps' must have m+1 entries");
    ExponentVector e;
    for (std::size_t i = 0; i <= m; ++i) {
      if (!exps[i].is_number_unsigned()) throw ParseError("exponent must be a non-negative integer");
      e.set(i, exps[i].get<unsigned>());
    }
    out.add_term(e, multivector_from_json(term.at("coeff"), ctx, "q"));
  }
  return out;
}

inline CliffordPolynomial read_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return polynomial_from_json(j);
}

inline json report_to_json(const VerificationReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries()) {
    json row = {{"identity", e.identity}, {"m", e.m}, {"pass", e.pass}};
    if (e.k) row["k"] = *e.k;
    if (e.n) row["n"] = *e.n;
    if (!e.witness.empty()) row["witness"] = e.witness;
    if (!e.detail.empty()) row["detail"] = e.detail;
    entries.push_back(std::move(row));
  }
  return {{"all_pass", report.all_pass()}, {"entries", entries}};
}

}  // namespace monogenic
