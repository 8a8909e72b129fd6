#pragma once

#include "monogenic/appell.hpp"
#include "monogenic/profile.hpp"

namespace monogenic {

// (x_0 + i r)^n = u(x_0, r^2) + i r v_reduced(x_0, r^2).
struct HolomorphicPair {
  ProfilePolynomial u;
  ProfilePolynomial v_reduced;
  unsigned n = 0;
};

inline HolomorphicPair complex_power_uv(unsigned n) {
  HolomorphicPair pair{.n = n};
  for (unsigned j = 0; j <= n; ++j) {
    // (i r)^j = i^j t^{j/2} r^{j mod 2}; i^{2l} = (-1)^l.
    const unsigned l = j / 2;
    Rational q(binomial(n, j));
    if (l % 2 == 1) q = -q;
    if (j % 2 == 0)
      pair.u.add_term(n - j, l, q);
    else
      pair.v_reduced.add_term(n - j, l, q);
  }
  return pair;
}

// (u + (x/r) v) P_k = (u + x v_reduced) P_k with t = |x|^2.
inline CliffordPolynomial embed_axial(const HolomorphicPair& pair, const CliffordPolynomial& pk) {
  if (!is_valid_pk(pk, pk.degree()))
    throw InvalidPk("P_k is not a homogeneous monogenic polynomial");
  const auto& ctx = pk.context();
  const CliffordPolynomial x = CliffordPolynomial::vector_variable(ctx);
  return (to_polynomial(pair.u, ctx) + x * to_polynomial(pair.v_reduced, ctx)) * pk;
}

inline void require_odd_dimension(const AlgebraContext& ctx) {
  if (ctx.dimension() % 2 == 0) throw EvenDimension(ctx.dimension());
}

// Laplacian^{k + (m-1)/2} applied to the axial embedding of z^n.
inline CliffordPolynomial fueter_map(unsigned n, const CliffordPolynomial& pk, unsigned k) {
  const auto& ctx = pk.context();
  require_odd_dimension(ctx);
  if (!is_valid_pk(pk, k)) throw InvalidPk("P_k is not a homogeneous monogenic polynomial of degree k");
  CliffordPolynomial out = embed_axial(complex_power_uv(n), pk);
  const unsigned steps = k + (ctx.dimension() - 1) / 2;
  for (unsigned s = 0; s < steps && !out.is_zero(); ++s) out = laplacian(out);
  return out;
}

// (-1)^{k+(m-1)/2} (2k+m-1)!! alpha_k(n).
inline Rational fueter_constant(unsigned m, unsigned k, unsigned n) {
  Rational c(double_factorial(2L * k + m - 1) * alpha(m, k, n));
  if ((k + (m - 1) / 2) % 2 == 1) c = -c;
  return c;
}

// Ft[z^n, P_k] = (-1)^{k+(m-1)/2} (2k+m-1)!! alpha_k(n) CK[x^{n-(2k+m-1)} P_k].
inline VerificationReport check_ejfd(unsigned n, const CliffordPolynomial& pk, unsigned k) {
  const auto& ctx = pk.context();
  require_odd_dimension(ctx);
  const unsigned m = ctx.dimension();
  const Rational constant = fueter_constant(m, k, n);  // throws ArgumentTooSmall below threshold
  const unsigned shift = 2 * k + m - 1;
  const CliffordPolynomial lhs = fueter_map(n, pk, k);
  const CliffordPolynomial rhs =
      ck_extend(pow(CliffordPolynomial::vector_variable(ctx), n - shift) * pk) * constant;
  VerificationReport report;
  report.add({.identity = "fueter.ck_identity", .m = m, .k = k, .n = n, .pass = lhs == rhs,
              .witness = difference_witness(lhs, rhs),
              .detail = "constant=" + to_fraction_string(constant)});
  return report;
}

// lambda with Ft[z^{n+2k+m-1}, P_k] = lambda M_n^k.
inline Rational proportionality_lambda(unsigned m, unsigned k, unsigned n) {
  return fueter_constant(m, k, n + 2 * k + m - 1) / c_coeff(m, k, n);
}

inline VerificationReport check_prop2(unsigned n, const SequenceSpec& spec) {
  require_odd_dimension(spec.context());
  const unsigned m = spec.m(), k = spec.k();
  const Rational lambda = proportionality_lambda(m, k, n);
  const CliffordPolynomial lhs = fueter_map(n + 2 * k + m - 1, spec.pk(), k);
  // n may exceed spec.n_max().
  const SequenceSpec widened(spec.pk(), k, std::max(n, spec.n_max()));
  const CliffordPolynomial rhs = build_M_explicit(widened, n) * lambda;
  VerificationReport report;
  report.add({.identity = "fueter.proportional", .m = m, .k = k, .n = n, .pass = lhs == rhs,
              .witness = difference_witness(lhs, rhs),
              .detail = "lambda=" + to_fraction_string(lambda)});
  return report;
}

// Ft[z^n, P_k] = 0 for every n < 2k + m - 1.
inline VerificationReport check_fueter_vanishing(const CliffordPolynomial& pk, unsigned k) {
  const auto& ctx = pk.context();
  require_odd_dimension(ctx);
  const unsigned m = ctx.dimension();
  VerificationReport report;
  const CliffordPolynomial zero(ctx);
  for (unsigned n = 0; n < 2 * k + m - 1; ++n) {
    const CliffordPolynomial ft = fueter_map(n, pk, k);
    report.add({.identity = "fueter.vanishing", .m = m, .k = k, .n = n, .pass = ft.is_zero(),
                .witness = difference_witness(ft, zero)});
  }
  return report;
}

}  // namespace monogenic
