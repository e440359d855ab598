#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "verlinde/cli_commands.hpp"
#include "verlinde/errors.hpp"

namespace {

// Exit codes: 0 success, 2 usage error, 3 precondition violation,
// 4 numerical residual failure.
constexpr int kUsageError = 2;
constexpr int kPreconditionError = 3;
constexpr int kResidualError = 4;

void add_common(CLI::App* cmd, verlinde::cli::Request& req, bool with_center) {
  cmd->add_option("--type", req.type, "Lie type, e.g. A3, D4, E6")->required();
  if (with_center)
    cmd->add_option("--center", req.center,
                    "center subgroup: trivial | full | gen:w1[,w2...]");
  cmd->add_option("--format", req.format, "output format: json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verlinde-type quantization numbers for simple Lie groups and "
               "their central quotients"};
  app.require_subcommand(1);

  verlinde::cli::Request req;
  if (const char* tol = std::getenv("VERLINDE_TOLERANCE")) {
    try {
      req.tolerance = std::stod(tol);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring unparsable VERLINDE_TOLERANCE\n";
    }
  }

  auto* roots = app.add_subcommand("roots", "root-system data for one type");
  add_common(roots, req, false);

  auto* lv = app.add_subcommand("levels", "basic levels k0, k1 of a center subgroup");
  add_common(lv, req, true);
  std::string gen_alias;
  lv->add_option("--gen", gen_alias, "shorthand for --center gen:<value>");

  auto* sm = app.add_subcommand("smatrix", "level-k S-matrix");
  add_common(sm, req, false);
  sm->add_option("--k", req.k, "level")->required();
  sm->add_flag("--normalized", req.normalized,
               "flip the global sign so the vacuum row is positive");

  auto* dl = app.add_subcommand("delta", "phase-factor table over Z x Z");
  add_common(dl, req, true);
  dl->add_option("--k", req.k, "level (multiple of k0)")->required();

  auto* vl = app.add_subcommand("verlinde", "quantization of the moduli space "
                                            "of flat bundles, genus g, one "
                                            "boundary");
  add_common(vl, req, true);
  vl->add_option("--k", req.k, "level (multiple of k0)")->required();
  vl->add_option("--genus", req.genus, "genus of the surface");
  vl->add_option("--mu", req.mu, "boundary weight labels, e.g. 1,0 (default: all)");
  vl->add_option("--phi", req.phi,
                 "2*genus character exponent tuples, e.g. 1;0 or 1,0;0,0");
  vl->add_option("--tolerance", req.tolerance, "integrality tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsageError;
  }

  try {
    if (!gen_alias.empty()) req.center = "gen:" + gen_alias;
    std::string out;
    if (roots->parsed()) out = verlinde::cli::cmd_roots(req);
    else if (lv->parsed()) out = verlinde::cli::cmd_levels(req);
    else if (sm->parsed()) out = verlinde::cli::cmd_smatrix(req);
    else if (dl->parsed()) out = verlinde::cli::cmd_delta(req);
    else out = verlinde::cli::cmd_verlinde(req);
    std::cout << out;
  } catch (const verlinde::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPreconditionError;
  } catch (const verlinde::residual_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResidualError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
