#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "monogenic/clifford.hpp"

namespace monogenic {

// Exponents (a_0, ..., a_m) of the monomial x_0^{a_0} ... x_m^{a_m}. Storage is
// fixed-width; entries past m are always zero.
class ExponentVector {
 public:
  static constexpr std::size_t kMaxVariables = AlgebraContext::kMaxDimension + 1;

  constexpr ExponentVector() = default;

  ExponentVector(std::initializer_list<unsigned> exps) {
    if (exps.size() > kMaxVariables) throw InvalidArgument("too many exponents");
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }

  static ExponentVector variable(std::size_t i, unsigned power = 1) {
    ExponentVector e;
    e.set(i, power);
    return e;
  }

  unsigned operator[](std::size_t i) const { return e_[i]; }

  void set(std::size_t i, unsigned value) {
    if (value > UINT16_MAX) throw InvalidArgument("exponent overflow");
    e_[i] = static_cast<std::uint16_t>(value);
  }

  unsigned degree() const {
    unsigned d = 0;
    for (auto v : e_) d += v;
    return d;
  }

  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) a.set(i, unsigned{a.e_[i]} + b.e_[i]);
    return a;
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  // Graded lexicographic: lower total degree first; within a degree, larger
  // power of the lower-indexed variable first (x_0^2 < x_0 x_1 < x_1^2).
  friend bool operator<(const ExponentVector& a, const ExponentVector& b) {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (a.e_[i] != b.e_[i]) return a.e_[i] > b.e_[i];
    return false;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> e_{};
};

// Polynomial in x_0..x_m with Multivector coefficients written on the left.
// Variables are real and central.
class CliffordPolynomial {
 public:
  using TermMap = std::map<ExponentVector, Multivector>;

  explicit CliffordPolynomial(AlgebraContext ctx) : ctx_(ctx) {}

  static CliffordPolynomial constant(const Multivector& c) {
    CliffordPolynomial p(c.context());
    p.add_term(ExponentVector{}, c);
    return p;
  }

  static CliffordPolynomial scalar(AlgebraContext ctx, const Rational& q) {
    return constant(Multivector::scalar(ctx, q));
  }

  // x_i for 0 <= i <= m (scalar-valued).
  static CliffordPolynomial variable(AlgebraContext ctx, std::size_t i) {
    check_index(ctx, i);
    CliffordPolynomial p(ctx);
    p.add_term(ExponentVector::variable(i), Multivector::scalar(ctx, 1));
    return p;
  }

  static CliffordPolynomial monomial(AlgebraContext ctx, const ExponentVector& e,
                                     const Multivector& c) {
    CliffordPolynomial p(ctx);
    p.add_term(e, c);
    return p;
  }

  // The vector variable x = sum_j x_j e_j.
  static CliffordPolynomial vector_variable(AlgebraContext ctx) {
    CliffordPolynomial p(ctx);
    for (unsigned j = 1; j <= ctx.dimension(); ++j)
      p.add_term(ExponentVector::variable(j), Multivector::generator(ctx, j));
    return p;
  }

  // x_0 + sum_j x_j e_j.
  static CliffordPolynomial paravector(AlgebraContext ctx) {
    return variable(ctx, 0) + vector_variable(ctx);
  }

  // |x|^2 = x_1^2 + ... + x_m^2.
  static CliffordPolynomial radius_squared(AlgebraContext ctx) {
    CliffordPolynomial p(ctx);
    for (unsigned j = 1; j <= ctx.dimension(); ++j)
      p.add_term(ExponentVector::variable(j, 2), Multivector::scalar(ctx, 1));
    return p;
  }

  const AlgebraContext& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::size_t variable_count() const { return ctx_.dimension() + 1; }

  Multivector coefficient(const ExponentVector& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Multivector(ctx_) : it->second;
  }

  void add_term(const ExponentVector& e, const Multivector& c) {
    if (!(c.context() == ctx_)) throw ContextMismatch();
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_term(const ExponentVector& e, Blade b, const Rational& q) {
    if (q == 0) return;
    auto it = terms_.try_emplace(e, ctx_).first;
    it->second.add_term(b, q);
    if (it->second.is_zero()) terms_.erase(it);
  }

  // Highest total degree; 0 for the zero polynomial.
  unsigned degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

  bool depends_on(std::size_t i) const {
    for (const auto& [e, c] : terms_)
      if (e[i] != 0) return true;
    return false;
  }

  bool is_scalar_valued() const {
    for (const auto& [e, c] : terms_)
      if (!c.is_scalar()) return false;
    return true;
  }

  bool is_vector_valued() const {
    for (const auto& [e, c] : terms_)
      if (!c.has_only_grade(1)) return false;
    return true;
  }

  // Coefficient of blade b, as a scalar polynomial.
  CliffordPolynomial component(Blade b) const {
    CliffordPolynomial out(ctx_);
    for (const auto& [e, c] : terms_) out.add_term(e, Blade::scalar(), c.coefficient(b));
    return out;
  }

  CliffordPolynomial homogeneous_part(unsigned d) const {
    CliffordPolynomial out(ctx_);
    for (const auto& [e, c] : terms_)
      if (e.degree() == d) out.terms_.emplace(e, c);
    return out;
  }

  CliffordPolynomial& operator+=(const CliffordPolynomial& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  CliffordPolynomial& operator-=(const CliffordPolynomial& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  CliffordPolynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend CliffordPolynomial operator+(CliffordPolynomial a, const CliffordPolynomial& b) {
    return a += b;
  }
  friend CliffordPolynomial operator-(CliffordPolynomial a, const CliffordPolynomial& b) {
    return a -= b;
  }
  friend CliffordPolynomial operator-(CliffordPolynomial a) { return a *= Rational(-1); }
  friend CliffordPolynomial operator*(CliffordPolynomial a, const Rational& s) { return a *= s; }
  friend CliffordPolynomial operator*(const Rational& s, CliffordPolynomial a) { return a *= s; }

  friend CliffordPolynomial operator*(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    a.require_same(b);
    CliffordPolynomial out(a.ctx_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        const ExponentVector e = ea + eb;
        for (const auto& [ba, qa] : ca.terms()) {
          for (const auto& [bb, qb] : cb.terms()) {
            const auto [sign, blade] = blade_multiply(ba, bb);
            Rational q = qa * qb;
            if (sign < 0) q = -q;
            out.add_term(e, blade, q);
          }
        }
      }
    }
    return out;
  }

  // Constant multivector acting from the left / right.
  friend CliffordPolynomial operator*(const Multivector& c, const CliffordPolynomial& p) {
    return constant(c) * p;
  }
  friend CliffordPolynomial operator*(const CliffordPolynomial& p, const Multivector& c) {
    return p * constant(c);
  }

  friend bool operator==(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

  void require_same(const CliffordPolynomial& o) const {
    if (!(ctx_ == o.ctx_)) throw ContextMismatch();
  }

  static void check_index(const AlgebraContext& ctx, std::size_t i) {
    if (i > ctx.dimension())
      throw InvalidArgument("variable index " + std::to_string(i) + " outside 0..m");
  }

 private:
  AlgebraContext ctx_;
  TermMap terms_;
};

inline CliffordPolynomial pow(const CliffordPolynomial& p, unsigned n) {
  CliffordPolynomial out = CliffordPolynomial::scalar(p.context(), 1);
  for (unsigned i = 0; i < n; ++i) out = out * p;
  return out;
}

inline CliffordPolynomial partial_derivative(const CliffordPolynomial& p, std::size_t i) {
  CliffordPolynomial::check_index(p.context(), i);
  CliffordPolynomial out(p.context());
  for (const auto& [e, c] : p.terms()) {
    const unsigned a = e[i];
    if (a == 0) continue;
    ExponentVector d = e;
    d.set(i, a - 1);
    out.add_term(d, c * Rational(a));
  }
  return out;
}

// Substitutes x_0 = 0.
inline CliffordPolynomial restrict_x0(const CliffordPolynomial& p) {
  CliffordPolynomial out(p.context());
  for (const auto& [e, c] : p.terms())
    if (e[0] == 0) out.add_term(e, c);
  return out;
}

// Multiplies by x_0^power.
inline CliffordPolynomial shift_x0(const CliffordPolynomial& p, unsigned power) {
  CliffordPolynomial out(p.context());
  const ExponentVector s = ExponentVector::variable(0, power);
  for (const auto& [e, c] : p.terms()) out.add_term(e + s, c);
  return out;
}

// True iff every monomial has total degree d; the zero polynomial qualifies for all d.
inline bool is_homogeneous(const CliffordPolynomial& p, unsigned d) {
  for (const auto& [e, c] : p.terms())
    if (e.degree() != d) return false;
  return true;
}

inline Multivector evaluate(const CliffordPolynomial& p, std::span<const Rational> point) {
  const auto& ctx = p.context();
  if (point.size() != ctx.dimension() + 1)
    throw InvalidArgument("evaluation point must have m+1 coordinates");
  Multivector out(ctx);
  for (const auto& [e, c] : p.terms()) {
    Rational v = 1;
    for (std::size_t i = 0; i < point.size(); ++i) {
      Rational f;
      mpz_pow_ui(f.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(f.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      v *= f;
    }
    out += c * v;
  }
  return out;
}

inline std::string monomial_name(const ExponentVector& e, std::size_t variables) {
  std::string s;
  for (std::size_t i = 0; i < variables; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string to_string(const CliffordPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    os << "(" << to_string(c) << ")";
    if (e.degree() > 0) os << "*" << monomial_name(e, p.variable_count());
    first = false;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const CliffordPolynomial& p) {
  return os << to_string(p);
}

// First term of a - b in monomial order, rendered for diagnostics; empty when equal.
inline std::string difference_witness(const CliffordPolynomial& a, const CliffordPolynomial& b) {
  const CliffordPolynomial diff = a - b;
  if (diff.is_zero()) return {};
  const auto& [e, c] = *diff.terms().begin();
  return monomial_name(e, diff.variable_count()) + ": " + to_string(c);
}

}  // namespace monogenic
