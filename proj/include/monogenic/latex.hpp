#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "monogenic/axial.hpp"

namespace monogenic {

namespace detail {

inline std::string latex_magnitude(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

inline std::string latex_power(const std::string& base, unsigned e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return base + "^{" + std::to_string(e) + "}";
}

// Appends "coeff * body" to a sum, writing the sign as a separator.
inline void latex_append(std::ostringstream& os, bool& first, const Rational& q, const std::string& body) {
  const Rational mag = abs(q);
  if (first)
    os << (q < 0 ? "-" : "");
  else
    os << (q < 0 ? " - " : " + ");
  first = false;
  if (body.empty()) {
    os << latex_magnitude(mag);
  } else {
    if (mag != 1) os << latex_magnitude(mag) << " ";
    os << body;
  }
}

inline std::string latex_blade(Blade b) {
  if (b.grade() == 0) return "";
  std::string s = "e_{";
  for (unsigned j : b.indices()) s += std::to_string(j);
  return s + "}";
}

}  // namespace detail

// Generic rendering, one summand per (monomial, blade).
inline std::string to_latex(const CliffordPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < p.variable_count(); ++i) {
      const std::string f = detail::latex_power("x_{" + std::to_string(i) + "}", e[i]);
      if (!f.empty()) mono += (mono.empty() ? "" : " ") + f;
    }
    for (const auto& [b, q] : c.terms()) {
      std::string body = mono;
      const std::string blade = detail::latex_blade(b);
      if (!blade.empty()) body += (body.empty() ? "" : " ") + blade;
      detail::latex_append(os, first, q, body);
    }
  }
  return os.str();
}

// Collected form sum h_{i,e} x_0^i \underline{x}^e, read off an axial pair
// (x^{2l} = (-1)^l t^l, x^{2l+1} = (-1)^l t^l x). Higher total degree first,
// then higher power of x_0. The P_k factor is omitted when append_pk is false.
inline std::string axial_to_latex(const AxialPair& pair, bool append_pk) {
  std::map<std::pair<unsigned, unsigned>, Rational> h;  // (total degree, x_0 power)
  auto collect = [&h](const ProfilePolynomial& prof, unsigned parity) {
    for (const auto& [key, q] : prof.terms()) {
      const auto [i, l] = key;
      const unsigned e = 2 * l + parity;
      h[{i + e, i}] += (l % 2 == 1) ? Rational(-q) : q;
    }
  };
  collect(pair.a, 0);
  collect(pair.b_reduced, 1);

  std::ostringstream os;
  bool first = true;
  for (auto it = h.rbegin(); it != h.rend(); ++it) {
    if (it->second == 0) continue;
    const auto [degree, i] = it->first;
    std::string body = detail::latex_power("x_0", i);
    const std::string xs = detail::latex_power("\\underline{x}", degree - i);
    if (!xs.empty()) body += (body.empty() ? "" : " ") + xs;
    detail::latex_append(os, first, it->second, body);
  }
  if (first) os << "0";
  std::string sum = os.str();
  if (!append_pk) return sum;
  const std::string pk = "\\mathbf{P}_{" + std::to_string(pair.k) + "}(\\underline{x})";
  if (sum == "1") return pk;
  return "\\left(" + sum + "\\right) " + pk;
}

}  // namespace monogenic
