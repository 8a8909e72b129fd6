#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "monogenic/ck.hpp"
#include "monogenic/pk.hpp"
#include "monogenic/random.hpp"
#include "monogenic/report.hpp"

namespace monogenic {

// Seeded randomized suites for the identities that hold for arbitrary input.
// Each suite contributes one report entry per dimension; a failing entry names
// the first failing case.
struct PropertySuiteConfig {
  std::uint64_t seed = 1;
  unsigned cases = 100;
};

namespace detail {
inline void run_suite(VerificationReport& report, const std::string& identity, unsigned m,
                      const PropertySuiteConfig& cfg, const std::function<std::string(RandomSource&)>& one_case) {
  // Each (identity, m) gets its own stream so suites can be rerun in isolation.
  std::uint64_t stream = cfg.seed * 1000003u + m;
  for (char c : identity) stream = stream * 131u + static_cast<unsigned char>(c);
  RandomSource rng(stream);
  std::string witness;
  unsigned failed_case = 0;
  for (unsigned i = 0; i < cfg.cases && witness.empty(); ++i) {
    witness = one_case(rng);
    failed_case = i;
  }
  report.add({.identity = identity, .m = m, .pass = witness.empty(),
              .witness = witness.empty() ? "" : "case " + std::to_string(failed_case) + ": " + witness,
              .detail = "cases=" + std::to_string(cfg.cases) + " seed=" + std::to_string(cfg.seed)});
}

// A random valid P_k: the built-in family times a random constant on the right,
// which keeps it left-monogenic and homogeneous.
inline std::pair<CliffordPolynomial, unsigned> random_pk(RandomSource& rng, const AlgebraContext& ctx,
                                                         unsigned max_k) {
  const unsigned k = ctx.dimension() >= 2 ? rng.uniform(0, max_k) : 0;
  Multivector c = rng.multivector(ctx, 2);
  if (c.is_zero()) c = Multivector::scalar(ctx, 1);
  return {builtin_pk(ctx, k) * c, k};
}
}  // namespace detail

inline VerificationReport run_leibniz_scalar_suite(unsigned m, const PropertySuiteConfig& cfg) {
  const AlgebraContext ctx(m);
  VerificationReport report;
  detail::run_suite(report, "property.leibniz_scalar", m, cfg, [&](RandomSource& rng) -> std::string {
    const auto phi = rng.scalar_polynomial(ctx);
    const auto g = rng.polynomial(ctx);
    return check_leibniz_scalar(phi, g) ? "" : "phi=" + to_string(phi) + " g=" + to_string(g);
  });
  return report;
}

inline VerificationReport run_leibniz_vector_suite(unsigned m, const PropertySuiteConfig& cfg) {
  const AlgebraContext ctx(m);
  VerificationReport report;
  detail::run_suite(report, "property.leibniz_vector", m, cfg, [&](RandomSource& rng) -> std::string {
    const auto f = rng.vector_polynomial(ctx);
    const auto g = rng.polynomial(ctx);
    return check_leibniz_vector(f, g) ? "" : "f=" + to_string(f) + " g=" + to_string(g);
  });
  return report;
}

inline VerificationReport run_ident1_suite(unsigned m, const PropertySuiteConfig& cfg) {
  const AlgebraContext ctx(m);
  VerificationReport report;
  detail::run_suite(report, "property.ident1", m, cfg, [&](RandomSource& rng) -> std::string {
    const auto [pk, k] = detail::random_pk(rng, ctx, 3);
    const unsigned n = rng.uniform(1, 6);
    return check_ident1(n, pk, k) ? ""
                                  : "n=" + std::to_string(n) + " k=" + std::to_string(k) + " P_k=" + to_string(pk);
  });
  return report;
}

// restrict_x0(CK[g]) = g, CK[g] monogenic, and the three-way derivative identity.
inline VerificationReport run_ck_suite(unsigned m, const PropertySuiteConfig& cfg) {
  const AlgebraContext ctx(m);
  VerificationReport report;
  detail::run_suite(report, "property.ck_extension", m, cfg, [&](RandomSource& rng) -> std::string {
    const auto g = rng.boundary_polynomial(ctx, 4, 4);
    const auto f = ck_extend(g);
    if (!(restrict_x0(f) == g)) return "restriction differs for g=" + to_string(g);
    if (!is_monogenic(f)) return "extension not monogenic for g=" + to_string(g);
    if (!check_dck(g)) return "derivative identity fails for g=" + to_string(g);
    return "";
  });
  return report;
}

inline VerificationReport run_property_suites(unsigned m, const PropertySuiteConfig& cfg) {
  VerificationReport report;
  report.append(run_ident1_suite(m, cfg));
  report.append(run_leibniz_scalar_suite(m, cfg));
  report.append(run_leibniz_vector_suite(m, cfg));
  report.append(run_ck_suite(m, cfg));
  return report;
}

}  // namespace monogenic
