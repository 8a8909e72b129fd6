#pragma once

#include "monogenic/coefficients.hpp"
#include "monogenic/polynomial.hpp"

namespace monogenic {

// Dirac operator sum_j e_j d/dx_j, with e_j acting from the left.
inline CliffordPolynomial dirac(const CliffordPolynomial& p) {
  const auto& ctx = p.context();
  CliffordPolynomial out(ctx);
  for (const auto& [e, c] : p.terms()) {
    for (unsigned j = 1; j <= ctx.dimension(); ++j) {
      const unsigned a = e[j];
      if (a == 0) continue;
      ExponentVector d = e;
      d.set(j, a - 1);
      const Blade ej = Blade::generator(j);
      for (const auto& [b, q] : c.terms()) {
        const auto [sign, blade] = blade_multiply(ej, b);
        out.add_term(d, blade, sign < 0 ? Rational(-q * a) : Rational(q * a));
      }
    }
  }
  return out;
}

// d/dx_0 + dirac.
inline CliffordPolynomial cauchy_riemann(const CliffordPolynomial& p) {
  return partial_derivative(p, 0) + dirac(p);
}

// d/dx_0 - dirac.
inline CliffordPolynomial conj_cauchy_riemann(const CliffordPolynomial& p) {
  return partial_derivative(p, 0) - dirac(p);
}

enum class MonogenicCheck { enforced, skipped };

// (1/2) conj_cauchy_riemann(p). On monogenic p this is d/dx_0 p = -dirac(p).
// The skipped mode applies the operator as is to arbitrary input.
inline CliffordPolynomial hypercomplex_derivative(const CliffordPolynomial& p,
                                                  MonogenicCheck check = MonogenicCheck::enforced) {
  if (check == MonogenicCheck::enforced) {
    if (!cauchy_riemann(p).is_zero())
      throw NotMonogenic("hypercomplex derivative of a non-monogenic polynomial");
    return partial_derivative(p, 0);
  }
  return conj_cauchy_riemann(p) * Rational(1, 2);
}

inline CliffordPolynomial laplacian(const CliffordPolynomial& p) {
  CliffordPolynomial out(p.context());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < p.variable_count(); ++i) {
      const unsigned a = e[i];
      if (a < 2) continue;
      ExponentVector d = e;
      d.set(i, a - 2);
      out.add_term(d, c * Rational(a * (a - 1)));
    }
  }
  return out;
}

// dirac(phi g) == dirac(phi) g + phi dirac(g) for scalar-valued phi.
inline bool check_leibniz_scalar(const CliffordPolynomial& phi, const CliffordPolynomial& g) {
  if (!phi.is_scalar_valued()) throw NonScalarInput("first factor must be scalar-valued");
  return dirac(phi * g) == dirac(phi) * g + phi * dirac(g);
}

// dirac(f g) == dirac(f) g - f dirac(g) - 2 sum_j f_j d/dx_j g for vector-valued f.
inline bool check_leibniz_vector(const CliffordPolynomial& f, const CliffordPolynomial& g) {
  if (!f.is_vector_valued()) throw NonVectorInput("first factor must be vector-valued");
  const auto& ctx = f.context();
  CliffordPolynomial rhs = dirac(f) * g - f * dirac(g);
  for (unsigned j = 1; j <= ctx.dimension(); ++j) {
    const CliffordPolynomial fj = f.component(Blade::generator(j));
    rhs -= Rational(2) * (fj * partial_derivative(g, j));
  }
  return dirac(f * g) == rhs;
}

// Homogeneous of degree k, free of x_0, and annihilated by the Dirac operator.
inline bool is_valid_pk(const CliffordPolynomial& pk, unsigned k) {
  return !pk.depends_on(0) && is_homogeneous(pk, k) && dirac(pk).is_zero();
}

// dirac(x^n P_k) == -beta_k(n) x^{n-1} P_k.
inline bool check_ident1(unsigned n, const CliffordPolynomial& pk, unsigned k) {
  if (n < 1) throw InvalidArgument("identity requires n >= 1");
  if (!is_valid_pk(pk, k)) throw InvalidPk("P_k is not a homogeneous monogenic polynomial of degree k");
  const auto& ctx = pk.context();
  const CliffordPolynomial x = CliffordPolynomial::vector_variable(ctx);
  const CliffordPolynomial lower = pow(x, n - 1) * pk;
  const Rational b(static_cast<unsigned long>(beta(ctx.dimension(), k, n)));
  return dirac(x * lower) == -b * lower;
}

}  // namespace monogenic
