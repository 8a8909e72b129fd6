#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "monogenic/polynomial.hpp"

namespace monogenic {

// Real polynomial in (x_0, t), where t stands for r^2 = x_1^2 + ... + x_m^2.
// Used for the profile functions of axial polynomials.
class ProfilePolynomial {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (power of x_0, power of t)
  using TermMap = std::map<Key, Rational>;

  ProfilePolynomial() = default;

  static ProfilePolynomial monomial(unsigned x0_power, unsigned t_power, const Rational& q) {
    ProfilePolynomial p;
    p.add_term(x0_power, t_power, q);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(unsigned i, unsigned l) const {
    const auto it = terms_.find({i, l});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(unsigned x0_power, unsigned t_power, const Rational& q) {
    if (q == 0) return;
    auto [it, inserted] = terms_.try_emplace(Key{x0_power, t_power}, q);
    if (!inserted) {
      it->second += q;
      if (it->second == 0) terms_.erase(it);
    }
  }

  ProfilePolynomial& operator+=(const ProfilePolynomial& o) {
    for (const auto& [key, q] : o.terms_) add_term(key.first, key.second, q);
    return *this;
  }
  ProfilePolynomial& operator-=(const ProfilePolynomial& o) {
    for (const auto& [key, q] : o.terms_) add_term(key.first, key.second, -q);
    return *this;
  }
  ProfilePolynomial& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [key, q] : terms_) q *= s;
    return *this;
  }

  friend ProfilePolynomial operator+(ProfilePolynomial a, const ProfilePolynomial& b) { return a += b; }
  friend ProfilePolynomial operator-(ProfilePolynomial a, const ProfilePolynomial& b) { return a -= b; }
  friend ProfilePolynomial operator*(ProfilePolynomial a, const Rational& s) { return a *= s; }
  friend ProfilePolynomial operator*(const Rational& s, ProfilePolynomial a) { return a *= s; }
  friend bool operator==(const ProfilePolynomial&, const ProfilePolynomial&) = default;

 private:
  TermMap terms_;
};

inline ProfilePolynomial derivative_x0(const ProfilePolynomial& p) {
  ProfilePolynomial out;
  for (const auto& [key, q] : p.terms())
    if (key.first > 0) out.add_term(key.first - 1, key.second, q * key.first);
  return out;
}

inline ProfilePolynomial derivative_t(const ProfilePolynomial& p) {
  ProfilePolynomial out;
  for (const auto& [key, q] : p.terms())
    if (key.second > 0) out.add_term(key.first, key.second - 1, q * key.second);
  return out;
}

inline ProfilePolynomial multiply_by_t(const ProfilePolynomial& p) {
  ProfilePolynomial out;
  for (const auto& [key, q] : p.terms()) out.add_term(key.first, key.second + 1, q);
  return out;
}

// Substitutes t = x_1^2 + ... + x_m^2 to get a scalar-valued CliffordPolynomial.
inline CliffordPolynomial to_polynomial(const ProfilePolynomial& p, const AlgebraContext& ctx) {
  CliffordPolynomial out(ctx);
  if (p.is_zero()) return out;
  unsigned max_t = 0;
  for (const auto& [key, q] : p.terms()) max_t = std::max(max_t, key.second);
  const CliffordPolynomial t = CliffordPolynomial::radius_squared(ctx);
  std::vector<CliffordPolynomial> t_powers{CliffordPolynomial::scalar(ctx, 1)};
  for (unsigned l = 1; l <= max_t; ++l) t_powers.push_back(t_powers.back() * t);
  for (const auto& [key, q] : p.terms()) out += shift_x0(t_powers[key.second], key.first) * q;
  return out;
}

inline std::string to_string(const ProfilePolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, q] : p.terms()) {
    if (!first) os << " + ";
    os << to_fraction_string(q);
    if (key.first > 0) os << "*x0" << (key.first > 1 ? "^" + std::to_string(key.first) : "");
    if (key.second > 0) os << "*t" << (key.second > 1 ? "^" + std::to_string(key.second) : "");
    first = false;
  }
  return os.str();
}

}  // namespace monogenic
