#include <catch_amalgamated.hpp>

#include <complex>

#include "support/helpers.hpp"

using namespace monogenic;
using namespace test_support;

namespace {

Rational eval_profile(const ProfilePolynomial& p, long x0, long t) {
  Rational sum = 0;
  for (const auto& [key, q] : p.terms()) {
    Integer term = 1;
    for (unsigned i = 0; i < key.first; ++i) term *= x0;
    for (unsigned i = 0; i < key.second; ++i) term *= t;
    sum += q * term;
  }
  return sum;
}

}  // namespace

TEST_CASE("complex_power_uv examples", "[fueter]") {
  auto mono = ProfilePolynomial::monomial;
  const auto p1 = complex_power_uv(1);
  CHECK(p1.u == mono(1, 0, 1));
  CHECK(p1.v_reduced == mono(0, 0, 1));
  const auto p2 = complex_power_uv(2);
  CHECK(p2.u == mono(2, 0, 1) + mono(0, 1, -1));
  CHECK(p2.v_reduced == mono(1, 0, 2));
  const auto p3 = complex_power_uv(3);
  CHECK(p3.u == mono(3, 0, 1) + mono(1, 1, -3));
  CHECK(p3.v_reduced == mono(2, 0, 3) + mono(0, 1, -1));
  const auto p0 = complex_power_uv(0);
  CHECK(p0.u == mono(0, 0, 1));
  CHECK(p0.v_reduced.is_zero());
}

TEST_CASE("complex_power_uv agrees with Gaussian integer powers", "[fueter]") {
  for (unsigned n = 0; n <= 10; ++n) {
    const auto pair = complex_power_uv(n);
    for (long x0 = -3; x0 <= 3; ++x0) {
      for (long r = 0; r <= 3; ++r) {
        std::complex<long long> z(x0, r), power(1, 0);
        for (unsigned i = 0; i < n; ++i) power *= z;
        REQUIRE(eval_profile(pair.u, x0, r * r) == Rational(static_cast<long>(power.real())));
        REQUIRE(eval_profile(pair.v_reduced, x0, r * r) * r == Rational(static_cast<long>(power.imag())));
      }
    }
  }
}

TEST_CASE("embed_axial examples", "[fueter]") {
  const AlgebraContext ctx(3);
  const auto one = scalar(ctx, 1);
  const auto x0 = x(ctx, 0);
  CHECK(embed_axial(complex_power_uv(2), one) ==
        x0 * x0 - CliffordPolynomial::radius_squared(ctx) + x0 * xvec(ctx) * Rational(2));
  const auto pk = builtin_pk(ctx, 2);
  CHECK(embed_axial(complex_power_uv(0), pk) == pk);
  CHECK(embed_axial(complex_power_uv(1), pk) == CliffordPolynomial::paravector(ctx) * pk);
  CHECK_THROWS_AS(embed_axial(complex_power_uv(1), x(ctx, 1) * constant(e(ctx, {1}))), InvalidPk);
}

TEST_CASE("fueter_map examples", "[fueter]") {
  const AlgebraContext ctx(3);
  const auto one = scalar(ctx, 1);
  CHECK(fueter_map(2, one, 0) == scalar(ctx, -4));
  CHECK(fueter_map(1, one, 0).is_zero());
  CHECK(fueter_map(0, one, 0).is_zero());
  CHECK(fueter_map(0, builtin_pk(ctx, 2), 2).is_zero());
  CHECK(fueter_map(3, one, 0) == (xvec(ctx) + x(ctx, 0) * Rational(3)) * Rational(-4));

  CHECK_THROWS_AS(fueter_map(2, scalar(AlgebraContext(4), 1), 0), EvenDimension);
  CHECK_THROWS_AS(fueter_map(2, builtin_pk(ctx, 1), 2), InvalidPk);
}

TEST_CASE("alpha_k(n)", "[fueter]") {
  CHECK(alpha(3, 0, 2) == 2);
  CHECK(alpha(3, 0, 3) == 2);
  CHECK(alpha(3, 1, 4) == 8);
  CHECK(alpha(3, 1, 5) == 8);
  CHECK(alpha(3, 0, 6) == 6);  // 6!! / 4!!
  CHECK(alpha(5, 1, 10) == 10 * 8 * 6);  // 10!! / 4!!
  for (unsigned m : {3u, 5u})
    for (unsigned k = 0; k <= 2; ++k)
      for (unsigned n = 2 * k + m; n <= 2 * k + m + 8; n += 2) CHECK(alpha(m, k, n) == alpha(m, k, n - 1));
  CHECK_THROWS_AS(alpha(3, 0, 1), ArgumentTooSmall);
  CHECK_THROWS_AS(alpha(5, 2, 7), ArgumentTooSmall);
}

TEST_CASE("Fueter map against CK of x^{n-(2k+m-1)} P_k", "[fueter]") {
  const AlgebraContext ctx(3);
  const auto one = scalar(ctx, 1);
  const auto r2 = check_ejfd(2, one, 0);
  CHECK(r2.all_pass());
  CHECK(r2.entries().front().detail == "constant=-4/1");
  CHECK(check_ejfd(3, one, 0).all_pass());
  for (unsigned k = 0; k <= 2; ++k) CHECK(check_ejfd(2 * k + 2, builtin_pk(ctx, k), k).all_pass());
  CHECK_THROWS_AS(check_ejfd(1, one, 0), ArgumentTooSmall);
  CHECK_THROWS_AS(check_ejfd(4, scalar(AlgebraContext(2), 1), 0), EvenDimension);
}

TEST_CASE("Fueter map is proportional to M_n^k", "[fueter]") {
  const auto spec = SequenceSpec::builtin(3, 0, 4);
  CHECK(proportionality_lambda(3, 0, 0) == -4);
  CHECK(proportionality_lambda(3, 0, 1) == -12);
  const auto r0 = check_prop2(0, spec);
  CHECK(r0.all_pass());
  CHECK(r0.entries().front().detail == "lambda=-4/1");
  CHECK(check_prop2(1, spec).all_pass());
  CHECK(check_prop2(2, SequenceSpec::builtin(3, 1, 2)).all_pass());
  // n beyond the sequence's n_max is allowed
  CHECK(check_prop2(3, SequenceSpec::builtin(3, 1, 0)).all_pass());
}

TEST_CASE("Fueter outputs are monogenic and vanish below threshold", "[fueter]") {
  for (unsigned k = 0; k <= 2; ++k) {
    const auto pk = builtin_pk(AlgebraContext(3), k);
    CHECK(check_fueter_vanishing(pk, k).all_pass());
    CHECK(check_fueter_vanishing(pk, k).entries().size() == 2 * k + 2);
    for (unsigned n = 0; n <= 2 * k + 5; ++n) CHECK(is_monogenic(fueter_map(n, pk, k)));
  }
}
