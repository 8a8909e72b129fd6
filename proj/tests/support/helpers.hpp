#pragma once

#include <string>

#include "monogenic/monogenic.hpp"

namespace test_support {

using namespace monogenic;

inline CliffordPolynomial x(const AlgebraContext& ctx, std::size_t i) {
  return CliffordPolynomial::variable(ctx, i);
}

inline CliffordPolynomial xvec(const AlgebraContext& ctx) {
  return CliffordPolynomial::vector_variable(ctx);
}

inline CliffordPolynomial scalar(const AlgebraContext& ctx, long num, long den = 1) {
  return CliffordPolynomial::scalar(ctx, make_rational(num, den));
}

inline Multivector e(const AlgebraContext& ctx, std::initializer_list<unsigned> idx) {
  return Multivector::basis(ctx, Blade::from_indices(idx, ctx));
}

inline CliffordPolynomial constant(const Multivector& c) { return CliffordPolynomial::constant(c); }

inline std::string fixture(const std::string& name) { return std::string(MONOGENIC_FIXTURE_DIR) + "/" + name; }

}  // namespace test_support
