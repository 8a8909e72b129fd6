#include <catch_amalgamated.hpp>

#include <vector>

#include "support/helpers.hpp"

using namespace monogenic;
using namespace test_support;

TEST_CASE("beta_k(n)", "[appell]") {
  for (unsigned m = 1; m <= 5; ++m) {
    for (unsigned k = 0; k <= 3; ++k) {
      CHECK(beta(m, k, 0) == 1);
      CHECK(beta(m, k, 1) == 2 * k + m);
      CHECK(beta(m, k, 2) == 2);
      CHECK(beta(m, k, 3) == 2 * k + m + 2);
      CHECK(beta(m, k, 4) == 4);
    }
  }
}

TEST_CASE("c_n and C_{k,n}(j)", "[appell]") {
  for (unsigned m = 1; m <= 5; ++m) {
    for (unsigned k = 0; k <= 3; ++k) {
      const Rational w = make_rational(1, 2 * k + m);
      CHECK(c_coeff(m, k, 0) == 1);
      CHECK(c_coeff(m, k, 1) == w);
      CHECK(c_coeff(m, k, 2) == w);
      for (unsigned n = 1; n <= 8; ++n)
        CHECK(c_coeff(m, k, n) == c_coeff(m, k, n - 1) * n / Rational(beta(m, k, n)));
      for (unsigned n = 0; n <= 6; ++n) CHECK(C_coeff(m, k, n, n) == 1);
      CHECK(C_coeff(m, k, 1, 0) == w);
      CHECK(C_coeff(m, k, 2, 1) == w);
      CHECK_THROWS_AS(C_coeff(m, k, 2, 3), InvalidArgument);
    }
  }
}

TEST_CASE("first terms match the closed displays", "[appell]") {
  for (unsigned m = 2; m <= 5; ++m) {
    for (unsigned k = 0; k <= 3; ++k) {
      const auto spec = SequenceSpec::builtin(m, k, 2);
      const auto& ctx = spec.context();
      const Rational w = make_rational(1, 2 * k + m);
      const auto x0 = x(ctx, 0);
      const auto xv = xvec(ctx);
      CHECK(build_M_explicit(spec, 0) == spec.pk());
      CHECK(build_M_explicit(spec, 1) == (x0 + xv * w) * spec.pk());
      CHECK(build_M_explicit(spec, 2) == (x0 * x0 + x0 * xv * (2 * w) + xv * xv * w) * spec.pk());
      CHECK(build_M_ck(spec, 0) == spec.pk());
      CHECK(build_M_ck(spec, 2) == build_M_explicit(spec, 2));
      CHECK_THROWS_AS(build_M_explicit(spec, 3), InvalidArgument);
    }
  }
  const auto spec = SequenceSpec::builtin(4, 0, 1);
  CHECK(build_M_ck(spec, 1) == x(spec.context(), 0) + xvec(spec.context()) * make_rational(1, 4));
}

TEST_CASE("classical sequence is the k = 0 case", "[appell]") {
  for (unsigned m = 1; m <= 5; ++m) {
    const AlgebraContext ctx(m);
    CHECK(classical_P(m, 0) == scalar(ctx, 1));
    CHECK(classical_P(m, 1) == x(ctx, 0) + xvec(ctx) * make_rational(1, m));
    const auto spec = SequenceSpec(scalar(ctx, 1), 0, 6);
    for (unsigned n = 0; n <= 6; ++n) CHECK(classical_P(m, n) == build_M_explicit(spec, n));
  }
}

TEST_CASE("SequenceSpec rejects invalid initial terms", "[appell]") {
  const AlgebraContext ctx(3);
  CHECK_THROWS_AS(SequenceSpec(x(ctx, 1) * constant(e(ctx, {1})), 1, 3), InvalidPk);
  CHECK_THROWS_AS(SequenceSpec(builtin_pk(ctx, 2), 1, 3), InvalidPk);
  CHECK_THROWS_AS(SequenceSpec::builtin(1, 1, 3), DimensionTooSmall);
}

TEST_CASE("verify_appell on sample specs", "[appell]") {
  const auto r1 = verify_appell(SequenceSpec::builtin(3, 0, 4));
  CHECK(r1.all_pass());
  CHECK(r1.entries().size() == 16);
  CHECK(verify_appell(SequenceSpec::builtin(2, 1, 4)).all_pass());
  CHECK(verify_appell(SequenceSpec(read_polynomial_file(fixture("pk_m3_k1.json")), 1, 4)).all_pass());
}

TEST_CASE("perturbed first term is caught", "[appell]") {
  const unsigned m = 3, k = 1;
  const auto spec = SequenceSpec::builtin(m, k, 3);
  auto sequence = generate_sequence(spec);
  const auto& ctx = spec.context();
  sequence[1] = (x(ctx, 0) + xvec(ctx) * make_rational(1, 2 * k + m + 1)) * spec.pk();

  const auto report = verify_appell(spec, sequence);
  const auto* derivative = report.find("appell.derivative", 1);
  REQUIRE(derivative != nullptr);
  CHECK_FALSE(derivative->pass);
  CHECK_FALSE(derivative->witness.empty());
  CHECK_FALSE(report.find("appell.monogenic", 1)->pass);
  CHECK_FALSE(report.find("appell.route_equivalence", 1)->pass);
  // n = 2 now compares M_2 against a wrong M_1
  CHECK_FALSE(report.find("appell.derivative", 2)->pass);
  CHECK(report.find("appell.derivative", 3)->pass);
}

TEST_CASE("Appell chain and degree", "[appell]") {
  for (unsigned k = 0; k <= 3; ++k) {
    const auto spec = SequenceSpec::builtin(3, k, 5);
    const auto sequence = generate_sequence(spec);
    for (unsigned n = 0; n <= 5; ++n) {
      CliffordPolynomial p = sequence[n];
      for (unsigned i = 0; i < n; ++i) p = hypercomplex_derivative(p);
      CHECK(p == spec.pk() * Rational(factorial(n)));
      CHECK(sequence[n].degree() == k + n);
      CHECK(is_homogeneous(sequence[n], k + n));
    }
  }
}
