#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "monogenic/error.hpp"
#include "monogenic/rational.hpp"

namespace monogenic {

// The real Clifford algebra R_{0,m}: generators e_1..e_m with e_j^2 = -1 and
// e_j e_k = -e_k e_j for j != k.
class AlgebraContext {
 public:
  static constexpr unsigned kMaxDimension = 16;

  explicit AlgebraContext(unsigned m) : m_(m) {
    if (m < 1 || m > kMaxDimension)
      throw InvalidArgument("algebra dimension m must be in [1, 16], got " + std::to_string(m));
  }

  unsigned dimension() const { return m_; }
  std::uint32_t blade_count() const { return std::uint32_t{1} << m_; }

  friend bool operator==(const AlgebraContext&, const AlgebraContext&) = default;

 private:
  unsigned m_;
};

// Basis element e_A, stored as a bit set: bit (j-1) set iff e_j is a factor.
class Blade {
 public:
  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t mask) : mask_(mask) {}

  static constexpr Blade scalar() { return Blade{}; }
  static constexpr Blade generator(unsigned j) { return Blade{std::uint32_t{1} << (j - 1)}; }

  // Blade from generator indices in any order; duplicates are rejected.
  static Blade from_indices(const std::vector<unsigned>& indices, const AlgebraContext& ctx) {
    std::uint32_t mask = 0;
    for (unsigned j : indices) {
      if (j < 1 || j > ctx.dimension())
        throw InvalidArgument("generator index " + std::to_string(j) + " outside 1..m");
      const std::uint32_t bit = std::uint32_t{1} << (j - 1);
      if (mask & bit) throw InvalidArgument("repeated generator in blade");
      mask |= bit;
    }
    return Blade{mask};
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr unsigned grade() const { return static_cast<unsigned>(std::popcount(mask_)); }
  bool valid_in(const AlgebraContext& ctx) const { return mask_ < ctx.blade_count(); }

  // Generator indices in increasing order (1-based).
  std::vector<unsigned> indices() const {
    std::vector<unsigned> out;
    for (std::uint32_t rest = mask_; rest != 0; rest &= rest - 1)
      out.push_back(static_cast<unsigned>(std::countr_zero(rest)) + 1);
    return out;
  }

  friend constexpr bool operator==(Blade, Blade) = default;

  // Grade first, then lexicographic on the sorted index lists.
  friend constexpr bool operator<(Blade a, Blade b) {
    if (a.grade() != b.grade()) return a.grade() < b.grade();
    const std::uint32_t diff = a.mask_ ^ b.mask_;
    if (diff == 0) return false;
    return (a.mask_ >> std::countr_zero(diff)) & 1u;
  }

 private:
  std::uint32_t mask_ = 0;
};

struct BladeProduct {
  int sign;
  Blade blade;
};

// e_A e_B = sign * e_{A xor B}. The sign counts the transpositions needed to
// sort the concatenated factors, plus one factor -1 per repeated generator.
constexpr BladeProduct blade_multiply(Blade a, Blade b) {
  unsigned swaps = 0;
  for (std::uint32_t t = a.mask() >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b.mask());
  swaps += std::popcount(a.mask() & b.mask());
  return {(swaps & 1u) ? -1 : 1, Blade{a.mask() ^ b.mask()}};
}

inline BladeProduct blade_multiply(Blade a, Blade b, const AlgebraContext& ctx) {
  if (!a.valid_in(ctx) || !b.valid_in(ctx)) throw InvalidArgument("blade outside algebra");
  return blade_multiply(a, b);
}

// Sign of conj(e_A) = sign * e_A for a blade of grade g: (-1)^{g(g+1)/2}.
constexpr int conjugation_sign(Blade a) {
  const unsigned g = a.grade();
  return ((g * (g + 1) / 2) & 1u) ? -1 : 1;
}

class Multivector {
 public:
  using TermMap = std::map<Blade, Rational>;

  explicit Multivector(AlgebraContext ctx) : ctx_(ctx) {}

  static Multivector scalar(AlgebraContext ctx, const Rational& value) {
    Multivector out(ctx);
    out.add_term(Blade::scalar(), value);
    return out;
  }

  static Multivector basis(AlgebraContext ctx, Blade blade, const Rational& value = 1) {
    if (!blade.valid_in(ctx)) throw InvalidArgument("blade outside algebra");
    Multivector out(ctx);
    out.add_term(blade, value);
    return out;
  }

  static Multivector generator(AlgebraContext ctx, unsigned j) {
    if (j < 1 || j > ctx.dimension()) throw InvalidArgument("generator index outside 1..m");
    return basis(ctx, Blade::generator(j));
  }

  const AlgebraContext& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(Blade b) const {
    const auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Blade::scalar());
  }

  bool has_only_grade(unsigned g) const {
    for (const auto& [blade, q] : terms_)
      if (blade.grade() != g) return false;
    return true;
  }

  // Adds value * blade, dropping the entry if it cancels.
  void add_term(Blade blade, const Rational& value) {
    if (value == 0) return;
    auto [it, inserted] = terms_.try_emplace(blade, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Multivector& operator+=(const Multivector& o) {
    require_same(o);
    for (const auto& [b, q] : o.terms_) add_term(b, q);
    return *this;
  }

  Multivector& operator-=(const Multivector& o) {
    require_same(o);
    for (const auto& [b, q] : o.terms_) add_term(b, -q);
    return *this;
  }

  Multivector& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, q] : terms_) q *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= Rational(-1); }
  friend Multivector operator*(Multivector a, const Rational& s) { return a *= s; }
  friend Multivector operator*(const Rational& s, Multivector a) { return a *= s; }

  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.require_same(b);
    Multivector out(a.ctx_);
    for (const auto& [ba, qa] : a.terms_) {
      for (const auto& [bb, qb] : b.terms_) {
        const auto [sign, blade] = blade_multiply(ba, bb);
        Rational q = qa * qb;
        if (sign < 0) q = -q;
        out.add_term(blade, q);
      }
    }
    return out;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

  void require_same(const Multivector& o) const {
    if (!(ctx_ == o.ctx_)) throw ContextMismatch();
  }

 private:
  AlgebraContext ctx_;
  TermMap terms_;
};

inline Multivector conjugate(const Multivector& a) {
  Multivector out(a.context());
  for (const auto& [b, q] : a.terms()) out.add_term(b, conjugation_sign(b) < 0 ? Rational(-q) : q);
  return out;
}

inline Multivector grade_project(const Multivector& a, unsigned g) {
  if (g > a.context().dimension())
    throw InvalidArgument("grade " + std::to_string(g) + " exceeds m");
  Multivector out(a.context());
  for (const auto& [b, q] : a.terms())
    if (b.grade() == g) out.add_term(b, q);
  return out;
}

inline std::string blade_name(Blade b) {
  if (b.grade() == 0) return "1";
  std::string s = "e";
  const auto idx = b.indices();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0 && (idx[i] > 9 || idx[i - 1] > 9)) s += ",";
    s += std::to_string(idx[i]);
  }
  return s;
}

// Compact human form, e.g. "3/1 + 2/1*e1 - 1/2*e12".
inline std::string to_string(const Multivector& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, q] : a.terms()) {
    const Rational mag = abs(q);
    if (first)
      os << (q < 0 ? "-" : "");
    else
      os << (q < 0 ? " - " : " + ");
    os << to_fraction_string(mag);
    if (b.grade() > 0) os << "*" << blade_name(b);
    first = false;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Multivector& a) { return os << to_string(a); }

}  // namespace monogenic
