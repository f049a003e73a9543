#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "sextic/error.hpp"

namespace {

int exit_code(const sextic::Error& e) {
  using sextic::Errc;
  switch (e.code()) {
    case Errc::NotSmooth:
      return sextic::cli::kNotSmooth;
    case Errc::NotPrime:
    case Errc::BadCongruence:
    case Errc::TooSmall:
    case Errc::BadParams:
    case Errc::GuardViolated:
    case Errc::Parse:
      return sextic::cli::kConfigError;
    default:
      return sextic::cli::kBindingFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace sextic::cli;
  CLI::App app{"Automorphism groups of smooth plane sextics over F_p"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string out_dir;
  app.add_option("--prime", cfg.prime, "Field characteristic, p = 1 mod 252")->capture_default_str();
  app.add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Samples per branch")->capture_default_str();
  app.add_option("--family", cfg.family, "Family name (classify) or sampler family filter (verify)");
  app.add_option("--branch", cfg.branch, "Sampler branch filter, e.g. ii-a");
  app.add_option("--params", cfg.params, "Parameter file with key = value lines");
  app.add_option("--out", out_dir, "Directory for JSONL reports");

  std::string target;
  auto* verify = app.add_subcommand("verify", "Check a theorem or family on random samples");
  verify->add_option("target", target, "fermat|klein|thm1|thm2|thm3|cor312|cor3123|strata|all")
      ->required()
      ->check(CLI::IsMember({"fermat", "klein", "thm1", "thm2", "thm3", "cor312", "cor3123", "strata", "all"}));

  auto* classify = app.add_subcommand("classify", "Stabilizer of one family member (needs --family)");

  std::string form_file, matrix;
  auto* smooth = app.add_subcommand("smooth", "Print true if the form in the file is smooth");
  smooth->add_option("form-file", form_file)->required();

  auto* transform = app.add_subcommand("transform", "Print F(M x) for a form file and a matrix");
  transform->add_option("form-file", form_file)->required();
  transform->add_option("matrix", matrix, "e.g. \"[Y:Z:X]\" or \"diag(1,zeta(21)^1,zeta(21)^-4)\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }
  if (!out_dir.empty()) cfg.out = out_dir;

  try {
    if (*verify) return cmd_verify(target, cfg, std::cout);
    if (*classify) {
      if (cfg.family.empty()) throw sextic::Error(sextic::Errc::BadParams, "classify needs --family");
      return cmd_classify(cfg, std::cout);
    }
    if (*smooth) return cmd_smooth(form_file, cfg, std::cout);
    if (*transform) return cmd_transform(form_file, matrix, cfg, std::cout);
  } catch (const sextic::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBindingFailure;
  }
  return kConfigError;
}
