#pragma once

#include <cstdint>

#include "monogenic/error.hpp"
#include "monogenic/rational.hpp"

namespace monogenic {

// beta_k(0) = 1; beta_k(n) = n for even n >= 2; beta_k(n) = 2k + m + n - 1 for odd n.
inline std::uint64_t beta(unsigned m, unsigned k, unsigned n) {
  if (n == 0) return 1;
  if (n % 2 == 0) return n;
  return std::uint64_t{2} * k + m + n - 1;
}

inline Integer beta_product(unsigned m, unsigned k, unsigned n) {
  Integer prod = 1;
  for (unsigned s = 0; s <= n; ++s) prod *= static_cast<unsigned long>(beta(m, k, s));
  return prod;
}

// c_n = n! / prod_{s=0}^{n} beta_k(s); the value fixed by c_n = n c_{n-1} / beta_k(n), c_0 = 1.
inline Rational c_coeff(unsigned m, unsigned k, unsigned n) {
  return make_rational(factorial(n), beta_product(m, k, n));
}

// C_{k,n}(j) = (n-j)! / prod_{s=0}^{n-j} beta_k(s).
inline Rational C_coeff(unsigned m, unsigned k, unsigned n, unsigned j) {
  if (j > n) throw InvalidArgument("C_{k,n}(j) requires 0 <= j <= n");
  return c_coeff(m, k, n - j);
}

// Fueter constant: n!! / (n - 2k - m + 1)!! for even n, alpha_k(n - 1) for odd n.
// Defined for odd m and n >= 2k + m - 1.
inline Integer alpha(unsigned m, unsigned k, unsigned n) {
  const long threshold = 2L * k + m - 1;
  if (static_cast<long>(n) < threshold)
    throw ArgumentTooSmall("alpha_k(n) requires n >= 2k+m-1 = " + std::to_string(threshold));
  if (n % 2 == 1) return alpha(m, k, n - 1);
  return double_factorial(n) / double_factorial(static_cast<long>(n) - threshold);
}

}  // namespace monogenic
