#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "monogenic/appell.hpp"
#include "monogenic/axial.hpp"
#include "monogenic/fueter.hpp"
#include "monogenic/latex.hpp"
#include "monogenic/properties.hpp"
#include "monogenic/serialize.hpp"

namespace monogenic::cli {

enum class Command { generate, verify, fueter_compare, validate_pk };
enum class OutputFormat { json, latex, summary };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  Command command = Command::generate;
  std::optional<unsigned> m;  // required unless P_k comes from a file
  unsigned k = 0;
  unsigned n_max = 4;
  std::string pk_source = "builtin";  // "builtin" or a path to a polynomial JSON file
  OutputFormat format = OutputFormat::summary;
  std::uint64_t seed = 1;
  unsigned cases = 100;
  std::string file;        // validate-pk input
  std::string output;      // explicit output file
  std::string output_dir;  // default directory when no explicit output is given
};

inline const char* command_name(Command c) {
  switch (c) {
    case Command::generate: return "generate";
    case Command::verify: return "verify";
    case Command::fueter_compare: return "fueter-compare";
    case Command::validate_pk: return "validate-pk";
  }
  return "?";
}

inline const char* format_extension(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::latex: return "tex";
    case OutputFormat::summary: return "txt";
  }
  return "txt";
}

inline void validate(const RunConfig& cfg) {
  if (cfg.command == Command::validate_pk) {
    if (cfg.file.empty()) throw UsageError("validate-pk needs --file");
  } else if (cfg.pk_source == "builtin" && !cfg.m) {
    throw UsageError("--m is required with the built-in P_k");
  }
  if (cfg.format == OutputFormat::latex && cfg.command != Command::generate)
    throw UsageError("latex output is only available for generate");
  if (cfg.cases == 0) throw UsageError("--cases must be positive");
}

namespace detail {

inline SequenceSpec make_spec(const RunConfig& cfg) {
  if (cfg.pk_source == "builtin") return SequenceSpec::builtin(*cfg.m, cfg.k, cfg.n_max);
  CliffordPolynomial pk = read_polynomial_file(cfg.pk_source);
  if (cfg.m && *cfg.m != pk.context().dimension())
    throw UsageError("--m " + std::to_string(*cfg.m) + " does not match m = " +
                     std::to_string(pk.context().dimension()) + " in " + cfg.pk_source);
  return SequenceSpec(std::move(pk), cfg.k, cfg.n_max);
}

inline void write_report(std::ostream& os, const VerificationReport& report, const RunConfig& cfg,
                         bool with_seed) {
  if (cfg.format == OutputFormat::json) {
    json j = report_to_json(report);
    if (with_seed) j["seed"] = cfg.seed;
    os << j.dump(2) << "\n";
    return;
  }
  if (with_seed) os << "seed " << cfg.seed << "\n";
  for (const auto& e : report.entries()) os << format_entry(e) << "\n";
  os << report.entries().size() << " checks, " << report.failures() << " failed\n";
}

inline int generate(const RunConfig& cfg, std::ostream& os) {
  const SequenceSpec spec = make_spec(cfg);
  const auto sequence = generate_sequence(spec);
  switch (cfg.format) {
    case OutputFormat::json: {
      json seq = json::array();
      for (unsigned n = 0; n < sequence.size(); ++n)
        seq.push_back({{"n", n}, {"polynomial", polynomial_to_json(sequence[n])}});
      const json doc = {{"m", spec.m()}, {"k", spec.k()}, {"n_max", spec.n_max()},
                        {"pk", polynomial_to_json(spec.pk())}, {"sequence", seq}};
      os << doc.dump(2) << "\n";
      break;
    }
    case OutputFormat::latex: {
      const bool unit_pk = spec.pk() == CliffordPolynomial::scalar(spec.context(), 1);
      os << "% m = " << spec.m() << ", k = " << spec.k() << "\n";
      if (!unit_pk)
        os << "% \\mathbf{P}_{" << spec.k() << "}(\\underline{x}) = " << to_latex(spec.pk()) << "\n";
      os << "\\begin{align*}\n";
      for (unsigned n = 0; n < sequence.size(); ++n) {
        const AxialPair pair = axial_decompose(sequence[n], spec.k(), spec.pk());
        os << "\\mathsf{M}_{" << n << "}^{" << spec.k() << "}(x) &= " << axial_to_latex(pair, !unit_pk)
           << (n + 1 < sequence.size() ? " \\\\" : "") << "\n";
      }
      os << "\\end{align*}\n";
      break;
    }
    case OutputFormat::summary:
      for (unsigned n = 0; n < sequence.size(); ++n)
        os << "M_" << n << "^" << spec.k() << " = " << to_string(sequence[n]) << "\n";
      break;
  }
  return kExitOk;
}

inline int verify(const RunConfig& cfg, std::ostream& os) {
  const SequenceSpec spec = make_spec(cfg);
  const auto sequence = generate_sequence(spec);
  VerificationReport report = verify_appell(spec, sequence);
  report.append(verify_structure(spec, sequence));

  // n applications of the hypercomplex derivative take M_n to n! P_k.
  CliffordPolynomial chain = sequence.back();
  for (unsigned i = 0; i < spec.n_max(); ++i) chain = hypercomplex_derivative(chain, MonogenicCheck::skipped);
  const CliffordPolynomial expected = spec.pk() * Rational(factorial(spec.n_max()));
  report.add({.identity = "appell.chain", .m = spec.m(), .k = spec.k(), .n = spec.n_max(),
              .pass = chain == expected, .witness = difference_witness(chain, expected)});

  report.append(run_property_suites(spec.m(), {.seed = cfg.seed, .cases = cfg.cases}));
  write_report(os, report, cfg, true);
  return report.all_pass() ? kExitOk : kExitVerificationFailed;
}

inline int fueter_compare(const RunConfig& cfg, std::ostream& os) {
  const SequenceSpec spec = make_spec(cfg);
  require_odd_dimension(spec.context());
  const unsigned m = spec.m(), k = spec.k();
  const unsigned threshold = 2 * k + m - 1;
  VerificationReport report = check_fueter_vanishing(spec.pk(), k);
  for (unsigned n = threshold; n <= threshold + spec.n_max(); ++n) {
    report.append(check_ejfd(n, spec.pk(), k));
    report.add({.identity = "fueter.monogenic", .m = m, .k = k, .n = n,
                .pass = is_monogenic(fueter_map(n, spec.pk(), k))});
  }
  for (unsigned n = 0; n <= spec.n_max(); ++n) report.append(check_prop2(n, spec));
  write_report(os, report, cfg, false);
  return report.all_pass() ? kExitOk : kExitVerificationFailed;
}

inline int validate_pk_file(const RunConfig& cfg, std::ostream& os) {
  const CliffordPolynomial p = read_polynomial_file(cfg.file);
  const VerificationReport report = validate_pk(p, cfg.k);
  write_report(os, report, cfg, false);
  return report.all_pass() ? kExitOk : kExitVerificationFailed;
}

inline int dispatch(const RunConfig& cfg, std::ostream& os) {
  switch (cfg.command) {
    case Command::generate: return generate(cfg, os);
    case Command::verify: return verify(cfg, os);
    case Command::fueter_compare: return fueter_compare(cfg, os);
    case Command::validate_pk: return validate_pk_file(cfg, os);
  }
  return kExitInternal;
}

inline std::string default_output_path(const RunConfig& cfg) {
  std::string name = command_name(cfg.command);
  if (cfg.m) name += "_m" + std::to_string(*cfg.m);
  if (cfg.command != Command::validate_pk) name += "_k" + std::to_string(cfg.k);
  return (std::filesystem::path(cfg.output_dir) / (name + "." + format_extension(cfg.format))).string();
}

}  // namespace detail

// Runs one command. Artifacts go to cfg.output, else into cfg.output_dir, else to out.
// Returns 0 when every verdict passes, 1 on a failed verdict, 2 on bad input
// and 3 on anything unexpected.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    std::ostringstream buffer;
    const int status = detail::dispatch(cfg, buffer);
    std::string path = cfg.output;
    if (path.empty() && !cfg.output_dir.empty()) path = detail::default_output_path(cfg);
    if (path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(path, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + path + "'");
      file << buffer.str();
      err << "wrote " << path << "\n";
    }
    return status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const EvenDimension& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const InvalidPk& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const DimensionTooSmall& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const InvalidArgument& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace monogenic::cli
