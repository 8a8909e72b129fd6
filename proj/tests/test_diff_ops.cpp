#include <catch_amalgamated.hpp>

#include "support/helpers.hpp"

using namespace monogenic;
using namespace test_support;

TEST_CASE("dirac examples", "[diff_ops]") {
  for (unsigned m = 1; m <= 5; ++m) {
    const AlgebraContext ctx(m);
    CHECK(dirac(xvec(ctx)) == scalar(ctx, -static_cast<long>(m)));
    CHECK(dirac(scalar(ctx, 7)).is_zero());
  }
  const AlgebraContext ctx(3);
  CHECK(dirac(x(ctx, 1) - constant(e(ctx, {1, 2})) * x(ctx, 2)).is_zero());
  // e_j acts from the left: dirac(x_1 e_2) = e_1 e_2, not e_2 e_1.
  CHECK(dirac(x(ctx, 1) * constant(e(ctx, {2}))) == constant(e(ctx, {1, 2})));
}

TEST_CASE("cauchy_riemann examples", "[diff_ops]") {
  for (unsigned m = 1; m <= 5; ++m) {
    const AlgebraContext ctx(m);
    CHECK(cauchy_riemann(CliffordPolynomial::paravector(ctx)) == scalar(ctx, 1 - static_cast<long>(m)));
    CHECK(cauchy_riemann(scalar(ctx, 3)).is_zero());
  }
  for (unsigned m = 2; m <= 5; ++m) {
    for (unsigned k = 0; k <= 3; ++k) {
      const AlgebraContext ctx(m);
      const auto pk = builtin_pk(ctx, k);
      const auto m1 = (x(ctx, 0) + xvec(ctx) * make_rational(1, 2 * k + m)) * pk;
      CHECK(cauchy_riemann(m1).is_zero());
    }
  }
}

TEST_CASE("hypercomplex derivative", "[diff_ops]") {
  const AlgebraContext ctx(3);
  const unsigned k = 1;
  const auto pk = builtin_pk(ctx, k);
  const Rational w = make_rational(1, 2 * k + 3);
  const auto m1 = (x(ctx, 0) + xvec(ctx) * w) * pk;
  const auto m2 = (x(ctx, 0) * x(ctx, 0) + x(ctx, 0) * xvec(ctx) * (2 * w) + xvec(ctx) * xvec(ctx) * w) * pk;

  CHECK(hypercomplex_derivative(m1) == pk);
  CHECK(hypercomplex_derivative(pk).is_zero());
  CHECK(hypercomplex_derivative(m2) == m1 * Rational(2));

  // On monogenic input the three forms coincide.
  CHECK(conj_cauchy_riemann(m2) * Rational(1, 2) == -dirac(m2));
  CHECK(partial_derivative(m2, 0) == -dirac(m2));

  const auto para = CliffordPolynomial::paravector(ctx);
  CHECK_THROWS_AS(hypercomplex_derivative(para), NotMonogenic);
  // (1/2)(d0 - dirac)(x_0 + x) = (1 + m) / 2
  CHECK(hypercomplex_derivative(para, MonogenicCheck::skipped) == scalar(ctx, 2));
}

TEST_CASE("laplacian", "[diff_ops]") {
  const AlgebraContext ctx(3);
  const auto r2 = CliffordPolynomial::radius_squared(ctx);
  const auto p = x(ctx, 0) * x(ctx, 0) - r2 + x(ctx, 0) * xvec(ctx) * Rational(2);
  CHECK(laplacian(p) == scalar(ctx, -4));
  CHECK(laplacian(CliffordPolynomial::paravector(ctx) + scalar(ctx, 3)).is_zero());
}

TEST_CASE("laplacian factorizes through the Cauchy-Riemann pair", "[diff_ops][property]") {
  for (unsigned m : {2u, 3u, 4u}) {
    const AlgebraContext ctx(m);
    RandomSource rng(200 + m);
    for (int t = 0; t < 60; ++t) {
      const auto p = rng.polynomial(ctx, 4, 5);
      const auto lap = laplacian(p);
      REQUIRE(cauchy_riemann(conj_cauchy_riemann(p)) == lap);
      REQUIRE(conj_cauchy_riemann(cauchy_riemann(p)) == lap);
    }
  }
}

TEST_CASE("operators are linear over rationals", "[diff_ops][property]") {
  const AlgebraContext ctx(3);
  RandomSource rng(5);
  for (int t = 0; t < 40; ++t) {
    const auto p = rng.polynomial(ctx);
    const auto q = rng.polynomial(ctx);
    const Rational a = rng.rational(), b = rng.rational();
    REQUIRE(dirac(p * a + q * b) == dirac(p) * a + dirac(q) * b);
    REQUIRE(cauchy_riemann(p * a + q * b) == cauchy_riemann(p) * a + cauchy_riemann(q) * b);
    REQUIRE(laplacian(p * a + q * b) == laplacian(p) * a + laplacian(q) * b);
  }
}

TEST_CASE("scalar Leibniz rule", "[diff_ops]") {
  const AlgebraContext ctx(3);
  CHECK(check_leibniz_scalar(x(ctx, 1), constant(e(ctx, {2}))));
  CHECK(check_leibniz_scalar(scalar(ctx, 1), xvec(ctx) * xvec(ctx) * constant(e(ctx, {1, 3}))));
  CHECK_THROWS_AS(check_leibniz_scalar(xvec(ctx), xvec(ctx)), NonScalarInput);

  for (unsigned m : {2u, 3u, 4u}) {
    const auto report = run_leibniz_scalar_suite(m, {.seed = 9, .cases = 100});
    CHECK(report.all_pass());
  }
}

TEST_CASE("vector Leibniz rule", "[diff_ops]") {
  for (unsigned m = 1; m <= 5; ++m) {
    const AlgebraContext ctx(m);
    CHECK(check_leibniz_vector(xvec(ctx), scalar(ctx, 1)));
    CHECK(check_leibniz_vector(xvec(ctx), xvec(ctx)));
    // both sides of the (x, x) case equal -2x
    CHECK(dirac(xvec(ctx) * xvec(ctx)) == xvec(ctx) * Rational(-2));
  }
  const AlgebraContext ctx(3);
  CHECK_THROWS_AS(check_leibniz_vector(scalar(ctx, 1), xvec(ctx)), NonVectorInput);
  CHECK_THROWS_AS(check_leibniz_vector(constant(e(ctx, {1, 2})), xvec(ctx)), NonVectorInput);

  for (unsigned m : {2u, 3u, 4u}) {
    const auto report = run_leibniz_vector_suite(m, {.seed = 9, .cases = 100});
    CHECK(report.all_pass());
  }
}

TEST_CASE("dirac of x^n P_k", "[diff_ops]") {
  for (unsigned m = 1; m <= 5; ++m) {
    const AlgebraContext ctx(m);
    const auto one = scalar(ctx, 1);
    CHECK(check_ident1(1, one, 0));
    CHECK(check_ident1(2, one, 0));
    CHECK(dirac(xvec(ctx) * xvec(ctx)) == xvec(ctx) * Rational(-2));
  }
  const AlgebraContext ctx(3);
  const auto p1 = builtin_pk(ctx, 1);
  CHECK(check_ident1(1, p1, 1));
  // beta_1(1) = 2k + m = 5
  CHECK(dirac(xvec(ctx) * p1) == p1 * Rational(-5));

  CHECK_THROWS_AS(check_ident1(1, x(ctx, 1) * constant(e(ctx, {1})), 1), InvalidPk);
  CHECK_THROWS_AS(check_ident1(1, p1, 2), InvalidPk);
  CHECK_THROWS_AS(check_ident1(0, p1, 1), InvalidArgument);

  for (unsigned m : {2u, 3u, 4u}) {
    const auto report = run_ident1_suite(m, {.seed = 4, .cases = 100});
    CHECK(report.all_pass());
  }
}
