#pragma once

#include "monogenic/diff_ops.hpp"
#include "monogenic/rational.hpp"

namespace monogenic {

inline bool is_monogenic(const CliffordPolynomial& p) { return cauchy_riemann(p).is_zero(); }

// Cauchy-Kovalevskaya extension of x_0-free data g:
//   CK[g] = sum_j (-x_0)^j / j! * dirac^j(g).
// dirac lowers degree, so the series stops after deg(g) + 1 terms.
inline CliffordPolynomial ck_extend(const CliffordPolynomial& g) {
  if (g.depends_on(0)) throw DependsOnX0();
  CliffordPolynomial out(g.context());
  CliffordPolynomial power = g;  // dirac^j(g)
  for (unsigned j = 0; !power.is_zero(); ++j) {
    Rational scale = make_rational(Integer(1), factorial(j));
    if (j % 2 == 1) scale = -scale;
    out += shift_x0(power, j) * scale;
    power = dirac(power);
  }
  return out;
}

// (1/2) conj_cauchy_riemann(CK[g]), -dirac(CK[g]) and CK[-dirac(g)] all coincide.
inline bool check_dck(const CliffordPolynomial& g) {
  const CliffordPolynomial f = ck_extend(g);
  const CliffordPolynomial half_conj = conj_cauchy_riemann(f) * Rational(1, 2);
  const CliffordPolynomial neg_dirac = -dirac(f);
  const CliffordPolynomial ck_of_derivative = ck_extend(-dirac(g));
  return half_conj == neg_dirac && neg_dirac == ck_of_derivative;
}

}  // namespace monogenic
