#pragma once

#include <span>
#include <string>
#include <vector>

#include "monogenic/ck.hpp"
#include "monogenic/coefficients.hpp"
#include "monogenic/pk.hpp"
#include "monogenic/report.hpp"

namespace monogenic {

// Configuration of one sequence {M_n^k}: the algebra, the initial term P_k
// (validated on construction), and the highest index to build.
class SequenceSpec {
 public:
  SequenceSpec(CliffordPolynomial pk, unsigned k, unsigned n_max)
      : pk_(std::move(pk)), k_(k), n_max_(n_max) {
    const auto report = validate_pk(pk_, k_);
    if (!report.all_pass()) {
      for (const auto& e : report.entries())
        if (!e.pass) throw InvalidPk("initial term fails " + e.identity);
    }
  }

  static SequenceSpec builtin(unsigned m, unsigned k, unsigned n_max) {
    const AlgebraContext ctx(m);
    return SequenceSpec(builtin_pk(ctx, k), k, n_max);
  }

  const AlgebraContext& context() const { return pk_.context(); }
  unsigned m() const { return context().dimension(); }
  unsigned k() const { return k_; }
  unsigned n_max() const { return n_max_; }
  const CliffordPolynomial& pk() const { return pk_; }

 private:
  CliffordPolynomial pk_;
  unsigned k_;
  unsigned n_max_;
};

// x^0, x^1, ..., x^n for the vector variable x.
inline std::vector<CliffordPolynomial> vector_variable_powers(const AlgebraContext& ctx, unsigned n) {
  const CliffordPolynomial x = CliffordPolynomial::vector_variable(ctx);
  std::vector<CliffordPolynomial> out{CliffordPolynomial::scalar(ctx, 1)};
  for (unsigned i = 1; i <= n; ++i) out.push_back(out.back() * x);
  return out;
}

namespace detail {
inline void check_index(const SequenceSpec& spec, unsigned n) {
  if (n > spec.n_max())
    throw InvalidArgument("index n = " + std::to_string(n) + " exceeds n_max = " +
                          std::to_string(spec.n_max()));
}
}  // namespace detail

// M_n^k = (sum_j binom(n,j) C_{k,n}(j) x_0^j x^{n-j}) P_k.
inline CliffordPolynomial build_M_explicit(const SequenceSpec& spec, unsigned n) {
  detail::check_index(spec, n);
  const auto& ctx = spec.context();
  const auto x_pow = vector_variable_powers(ctx, n);
  CliffordPolynomial h(ctx);
  for (unsigned j = 0; j <= n; ++j) {
    const Rational coeff = Rational(binomial(n, j)) * C_coeff(spec.m(), spec.k(), n, j);
    h += shift_x0(x_pow[n - j], j) * coeff;
  }
  return h * spec.pk();
}

// M_n^k = c_n CK[x^n P_k].
inline CliffordPolynomial build_M_ck(const SequenceSpec& spec, unsigned n) {
  detail::check_index(spec, n);
  const auto& ctx = spec.context();
  const CliffordPolynomial seed = pow(CliffordPolynomial::vector_variable(ctx), n) * spec.pk();
  return ck_extend(seed) * c_coeff(spec.m(), spec.k(), n);
}

// The classical Appell sequence with P_0 = 1.
inline CliffordPolynomial classical_P(unsigned m, unsigned n) {
  const AlgebraContext ctx(m);
  return build_M_explicit(SequenceSpec(CliffordPolynomial::scalar(ctx, 1), 0, n), n);
}

inline std::vector<CliffordPolynomial> generate_sequence(const SequenceSpec& spec) {
  std::vector<CliffordPolynomial> out;
  out.reserve(spec.n_max() + 1);
  for (unsigned n = 0; n <= spec.n_max(); ++n) out.push_back(build_M_explicit(spec, n));
  return out;
}

// Checks, for 1 <= n <= n_max, on a caller-supplied sequence:
//   appell.monogenic        cauchy_riemann(M_n) = 0
//   appell.derivative       (1/2) conj_cauchy_riemann(M_n) = n M_{n-1}
//   appell.homogeneous      M_n homogeneous of degree k + n
//   appell.route_equivalence  c_n CK[x^n P_k] = M_n
inline VerificationReport verify_appell(const SequenceSpec& spec,
                                        std::span<const CliffordPolynomial> sequence) {
  if (sequence.size() != spec.n_max() + 1)
    throw InvalidArgument("sequence length must be n_max + 1");
  const auto& ctx = spec.context();
  const unsigned m = spec.m(), k = spec.k();
  VerificationReport report;
  const CliffordPolynomial zero(ctx);
  for (unsigned n = 1; n <= spec.n_max(); ++n) {
    const CliffordPolynomial& mn = sequence[n];

    const CliffordPolynomial cr = cauchy_riemann(mn);
    report.add({.identity = "appell.monogenic", .m = m, .k = k, .n = n,
                .pass = cr.is_zero(), .witness = difference_witness(cr, zero)});

    const CliffordPolynomial lhs = hypercomplex_derivative(mn, MonogenicCheck::skipped);
    const CliffordPolynomial rhs = sequence[n - 1] * Rational(n);
    report.add({.identity = "appell.derivative", .m = m, .k = k, .n = n,
                .pass = lhs == rhs, .witness = difference_witness(lhs, rhs)});

    report.add({.identity = "appell.homogeneous", .m = m, .k = k, .n = n,
                .pass = is_homogeneous(mn, k + n)});

    const CliffordPolynomial via_ck = build_M_ck(spec, n);
    report.add({.identity = "appell.route_equivalence", .m = m, .k = k, .n = n,
                .pass = via_ck == mn, .witness = difference_witness(via_ck, mn)});
  }
  return report;
}

inline VerificationReport verify_appell(const SequenceSpec& spec) {
  const auto sequence = generate_sequence(spec);
  return verify_appell(spec, sequence);
}

}  // namespace monogenic
