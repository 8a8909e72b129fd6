#pragma once

#include "monogenic/ck.hpp"
#include "monogenic/report.hpp"

namespace monogenic {

// (x_1 - e_1 e_2 x_2)^k. The base is left-monogenic of degree 1 and lives in the
// commutative subalgebra spanned by {1, e_1 e_2}, so every power stays monogenic.
inline CliffordPolynomial builtin_pk(const AlgebraContext& ctx, unsigned k) {
  if (k == 0) return CliffordPolynomial::scalar(ctx, 1);
  if (ctx.dimension() < 2)
    throw DimensionTooSmall("built-in P_k with k >= 1 needs m >= 2");
  const Multivector e12 = Multivector::basis(ctx, Blade{0b11});
  const CliffordPolynomial base =
      CliffordPolynomial::variable(ctx, 1) - e12 * CliffordPolynomial::variable(ctx, 2);
  return pow(base, k);
}

// Three independent checks; together they certify p as a P_k.
inline VerificationReport validate_pk(const CliffordPolynomial& p, unsigned k) {
  const unsigned m = p.context().dimension();
  VerificationReport report;
  report.add({.identity = "pk.independent_of_x0", .m = m, .k = k, .pass = !p.depends_on(0)});
  report.add({.identity = "pk.homogeneous", .m = m, .k = k, .pass = is_homogeneous(p, k)});
  const CliffordPolynomial d = dirac(p);
  report.add({.identity = "pk.dirac_null",
              .m = m,
              .k = k,
              .pass = d.is_zero(),
              .witness = difference_witness(d, CliffordPolynomial(p.context()))});
  return report;
}

}  // namespace monogenic
