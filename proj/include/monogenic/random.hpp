#pragma once

#include <cstdint>
#include <random>

#include "monogenic/polynomial.hpp"

namespace monogenic {

// Seeded generators for the randomized identity suites. Coefficients are small
// rationals so that failures stay readable.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  unsigned uniform(unsigned lo, unsigned hi) {
    return std::uniform_int_distribution<unsigned>(lo, hi)(engine_);
  }

  Rational rational() {
    const long num = std::uniform_int_distribution<long>(-6, 6)(engine_);
    const long den = std::uniform_int_distribution<long>(1, 4)(engine_);
    return make_rational(num, den);
  }

  Multivector multivector(const AlgebraContext& ctx, unsigned terms = 3) {
    Multivector out(ctx);
    for (unsigned i = 0; i < terms; ++i)
      out.add_term(Blade{uniform(0, ctx.blade_count() - 1)}, rational());
    return out;
  }

  ExponentVector exponents(const AlgebraContext& ctx, unsigned max_degree, bool with_x0) {
    ExponentVector e;
    unsigned budget = uniform(0, max_degree);
    const std::size_t first = with_x0 ? 0 : 1;
    while (budget > 0) {
      const std::size_t var = uniform(static_cast<unsigned>(first), ctx.dimension());
      e.set(var, e[var] + 1);
      --budget;
    }
    return e;
  }

  CliffordPolynomial polynomial(const AlgebraContext& ctx, unsigned max_degree = 3,
                                unsigned terms = 4, bool with_x0 = true) {
    CliffordPolynomial p(ctx);
    for (unsigned i = 0; i < terms; ++i)
      p.add_term(exponents(ctx, max_degree, with_x0), multivector(ctx, 2));
    return p;
  }

  CliffordPolynomial scalar_polynomial(const AlgebraContext& ctx, unsigned max_degree = 3,
                                       unsigned terms = 4, bool with_x0 = true) {
    CliffordPolynomial p(ctx);
    for (unsigned i = 0; i < terms; ++i)
      p.add_term(exponents(ctx, max_degree, with_x0), Blade::scalar(), rational());
    return p;
  }

  CliffordPolynomial vector_polynomial(const AlgebraContext& ctx, unsigned max_degree = 3,
                                       unsigned terms = 4, bool with_x0 = true) {
    CliffordPolynomial p(ctx);
    for (unsigned i = 0; i < terms; ++i)
      p.add_term(exponents(ctx, max_degree, with_x0), Blade::generator(uniform(1, ctx.dimension())),
                 rational());
    return p;
  }

  // Random data on R^m: no x_0 dependence.
  CliffordPolynomial boundary_polynomial(const AlgebraContext& ctx, unsigned max_degree = 3,
                                         unsigned terms = 4) {
    return polynomial(ctx, max_degree, terms, false);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace monogenic
