#include <catch_amalgamated.hpp>

#include "support/helpers.hpp"

using namespace monogenic;
using namespace test_support;

TEST_CASE("ck_extend examples", "[ck]") {
  for (unsigned m = 1; m <= 5; ++m) {
    const AlgebraContext ctx(m);
    CHECK(ck_extend(scalar(ctx, 1)) == scalar(ctx, 1));
    CHECK(ck_extend(xvec(ctx)) == xvec(ctx) + x(ctx, 0) * Rational(m));
    CHECK(ck_extend(CliffordPolynomial(ctx)).is_zero());
  }
  const AlgebraContext ctx(3);
  CHECK_THROWS_AS(ck_extend(x(ctx, 0)), DependsOnX0);
}

TEST_CASE("ck_extend of x^n P_k inverts c_n", "[ck]") {
  for (unsigned m : {2u, 3u}) {
    for (unsigned k = 0; k <= 2; ++k) {
      const auto spec = SequenceSpec::builtin(m, k, 4);
      const auto x_pow = vector_variable_powers(spec.context(), 4);
      for (unsigned n = 0; n <= 4; ++n) {
        const Rational inverse_c = make_rational(beta_product(m, k, n), factorial(n));
        REQUIRE(ck_extend(x_pow[n] * spec.pk()) == build_M_explicit(spec, n) * inverse_c);
      }
    }
  }
}

TEST_CASE("is_monogenic", "[ck]") {
  for (unsigned m = 2; m <= 5; ++m) {
    const AlgebraContext ctx(m);
    CHECK_FALSE(is_monogenic(CliffordPolynomial::paravector(ctx)));
    CHECK(is_monogenic(scalar(ctx, 1)));
  }
  // m = 1: x_0 + x_1 e_1 is the complex variable
  CHECK(is_monogenic(CliffordPolynomial::paravector(AlgebraContext(1))));
}

TEST_CASE("check_dck examples", "[ck]") {
  const AlgebraContext ctx(3);
  CHECK(check_dck(scalar(ctx, 1)));
  const auto pk = builtin_pk(ctx, 1);
  for (unsigned n = 0; n <= 4; ++n) CHECK(check_dck(pow(xvec(ctx), n) * pk));
  CHECK_THROWS_AS(check_dck(x(ctx, 0)), DependsOnX0);
}

TEST_CASE("CK extension properties on random data", "[ck][property]") {
  for (unsigned m : {2u, 3u, 4u}) {
    const auto report = run_ck_suite(m, {.seed = 21, .cases = 100});
    INFO(format_entry(report.entries().front()));
    CHECK(report.all_pass());
  }
}

TEST_CASE("CK extension preserves homogeneity", "[ck][property]") {
  const AlgebraContext ctx(3);
  RandomSource rng(8);
  for (int t = 0; t < 60; ++t) {
    const unsigned d = rng.uniform(0, 4);
    const auto g = rng.boundary_polynomial(ctx, 4, 6).homogeneous_part(d);
    REQUIRE(is_homogeneous(ck_extend(g), d));
  }
}
