#pragma once

#include <map>
#include <utility>

#include "monogenic/appell.hpp"
#include "monogenic/profile.hpp"

namespace monogenic {

// Profiles of an axial polynomial (A(x_0, r) + (x/r) B(x_0, r)) P_k with
// B(x_0, r) = r * b_reduced(x_0, r^2) and A(x_0, r) = a(x_0, r^2).
struct AxialPair {
  ProfilePolynomial a;
  ProfilePolynomial b_reduced;
  unsigned k = 0;
  unsigned m = 0;
};

// Writes p = H(x_0, x) P_k as (a + x b_reduced) P_k using x^{2l} = (-1)^l t^l
// and x^{2l+1} = (-1)^l t^l x. Each x_0-power and degree slice of p must be a
// rational multiple of x^e P_k; anything else is rejected.
inline AxialPair axial_decompose(const CliffordPolynomial& p, unsigned k, const CliffordPolynomial& pk) {
  p.require_same(pk);
  if (pk.is_zero()) throw NotAxialForm("P_k must be nonzero");
  const auto& ctx = p.context();
  AxialPair pair{.k = k, .m = ctx.dimension()};
  if (p.is_zero()) return pair;

  // (total degree, x_0 power) -> slice of p with x_0 stripped
  std::map<std::pair<unsigned, unsigned>, CliffordPolynomial> slices;
  for (const auto& [e, c] : p.terms()) {
    ExponentVector stripped = e;
    stripped.set(0, 0);
    slices.try_emplace({e.degree(), e[0]}, ctx).first->second.add_term(stripped, c);
  }

  const unsigned pk_degree = pk.degree();
  std::map<unsigned, CliffordPolynomial> x_power_times_pk;
  for (const auto& [key, slice] : slices) {
    const auto [degree, i] = key;
    if (degree < pk_degree + i) throw NotAxialForm("degree too low for a multiple of P_k");
    const unsigned e = degree - pk_degree - i;
    auto it = x_power_times_pk.find(e);
    if (it == x_power_times_pk.end())
      it = x_power_times_pk
               .emplace(e, pow(CliffordPolynomial::vector_variable(ctx), e) * pk)
               .first;
    const CliffordPolynomial& q = it->second;
    const auto& [lead_exp, lead_coeff] = *q.terms().begin();
    const auto& [lead_blade, lead_q] = *lead_coeff.terms().begin();
    const Rational h = slice.coefficient(lead_exp).coefficient(lead_blade) / lead_q;
    if (!(q * h == slice)) throw NotAxialForm("slice is not a multiple of x^e P_k");
    const unsigned l = e / 2;
    const Rational signed_h = (l % 2 == 1) ? Rational(-h) : h;
    if (e % 2 == 0)
      pair.a.add_term(i, l, signed_h);
    else
      pair.b_reduced.add_term(i, l, signed_h);
  }
  return pair;
}

// (a + x b_reduced) P_k with t = |x|^2.
inline CliffordPolynomial reconstruct(const AxialPair& pair, const CliffordPolynomial& pk) {
  const auto& ctx = pk.context();
  const CliffordPolynomial x = CliffordPolynomial::vector_variable(ctx);
  return (to_polynomial(pair.a, ctx) + x * to_polynomial(pair.b_reduced, ctx)) * pk;
}

// Vekua-type system in (x_0, r), rewritten through B = r b and d/dr = 2 r d/dt:
//   d_{x0} a - (b + 2t d_t b) = (2k + m - 1) b
//   d_{x0} b + 2 d_t a        = 0
inline bool vekua_check(const AxialPair& pair) {
  const ProfilePolynomial& a = pair.a;
  const ProfilePolynomial& b = pair.b_reduced;
  const Rational weight(2L * pair.k + pair.m - 1);
  const ProfilePolynomial first =
      derivative_x0(a) - (b + multiply_by_t(derivative_t(b)) * Rational(2)) - b * weight;
  const ProfilePolynomial second = derivative_x0(b) + derivative_t(a) * Rational(2);
  return first.is_zero() && second.is_zero();
}

// Restriction, reconstruction, axial decomposition and Vekua system for M_0..M_{n_max}.
inline VerificationReport verify_structure(const SequenceSpec& spec,
                                           std::span<const CliffordPolynomial> sequence) {
  if (sequence.size() != spec.n_max() + 1)
    throw InvalidArgument("sequence length must be n_max + 1");
  const unsigned m = spec.m(), k = spec.k();
  const auto x_pow = vector_variable_powers(spec.context(), spec.n_max());
  VerificationReport report;
  for (unsigned n = 0; n <= spec.n_max(); ++n) {
    const CliffordPolynomial& mn = sequence[n];

    const CliffordPolynomial restricted = restrict_x0(mn);
    const CliffordPolynomial expected = x_pow[n] * spec.pk() * c_coeff(m, k, n);
    report.add({.identity = "structure.restriction", .m = m, .k = k, .n = n,
                .pass = restricted == expected,
                .witness = difference_witness(restricted, expected)});

    const CliffordPolynomial rebuilt = ck_extend(restricted);
    report.add({.identity = "structure.ck_reconstruction", .m = m, .k = k, .n = n,
                .pass = rebuilt == mn, .witness = difference_witness(rebuilt, mn)});

    try {
      const AxialPair pair = axial_decompose(mn, k, spec.pk());
      const CliffordPolynomial back = reconstruct(pair, spec.pk());
      report.add({.identity = "structure.axial_reconstruction", .m = m, .k = k, .n = n,
                  .pass = back == mn, .witness = difference_witness(back, mn),
                  .detail = "A=" + to_string(pair.a) + "; B/r=" + to_string(pair.b_reduced)});
      report.add({.identity = "structure.vekua", .m = m, .k = k, .n = n,
                  .pass = vekua_check(pair)});
    } catch (const NotAxialForm& err) {
      report.add({.identity = "structure.axial_reconstruction", .m = m, .k = k, .n = n,
                  .pass = false, .witness = err.what()});
    }
  }
  return report;
}

}  // namespace monogenic
