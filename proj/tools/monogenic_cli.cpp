#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "monogenic/cli.hpp"

using monogenic::cli::Command;
using monogenic::cli::OutputFormat;
using monogenic::cli::RunConfig;

namespace {

void add_sequence_options(CLI::App* sub, RunConfig& cfg, unsigned& m) {
  sub->add_option("--m", m, "dimension of R^m (1..16)");
  sub->add_option("--k", cfg.k, "degree of the initial term P_k");
  sub->add_option("--n-max", cfg.n_max, "highest index n to build");
  sub->add_option("--pk", cfg.pk_source, "'builtin' or a polynomial JSON file");
}

void add_output_options(CLI::App* sub, RunConfig& cfg) {
  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::json}, {"latex", OutputFormat::latex}, {"summary", OutputFormat::summary}};
  sub->add_option("--format", cfg.format, "json | latex | summary")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Appell sequences of monogenic polynomials"};
  app.require_subcommand(1);

  RunConfig cfg;
  unsigned m = 0;

  auto* generate = app.add_subcommand("generate", "emit M_0^k .. M_{n_max}^k");
  add_sequence_options(generate, cfg, m);
  add_output_options(generate, cfg);

  auto* verify = app.add_subcommand("verify", "run the Appell, structure and identity suites");
  add_sequence_options(verify, cfg, m);
  add_output_options(verify, cfg);
  verify->add_option("--seed", cfg.seed, "seed for the randomized suites");
  verify->add_option("--cases", cfg.cases, "random cases per identity");

  auto* fueter = app.add_subcommand("fueter-compare", "compare the Fueter map with the sequence (odd m)");
  add_sequence_options(fueter, cfg, m);
  add_output_options(fueter, cfg);

  auto* validate = app.add_subcommand("validate-pk", "check a user-supplied P_k");
  validate->add_option("--file", cfg.file, "polynomial JSON file")->required();
  validate->add_option("--k", cfg.k, "expected degree")->required();
  add_output_options(validate, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : monogenic::cli::kExitUsage;
  }

  if (generate->parsed()) cfg.command = Command::generate;
  if (verify->parsed()) cfg.command = Command::verify;
  if (fueter->parsed()) cfg.command = Command::fueter_compare;
  if (validate->parsed()) cfg.command = Command::validate_pk;
  if (m != 0) cfg.m = m;
  if (const char* dir = std::getenv("MONOGENIC_OUTPUT_DIR")) cfg.output_dir = dir;

  return monogenic::cli::run(cfg, std::cout, std::cerr);
}
