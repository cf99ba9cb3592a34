#include "cli/run.hpp"

#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/report.hpp"

namespace cauchy::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cauchy endomorphisms on the round 3-sphere: residual checks and the cylinder metric"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"human", Format::human}};
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Number of sample points")
      ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--tol", cfg.tolerance, "Pass/fail tolerance")
      ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--fd-step", cfg.fd_step, "Finite-difference step")
      ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->option_text("json|csv|human [json]");

  VerifyOptions vopt;
  std::string chirality = "left";
  auto* verify = app.add_subcommand("verify", "Flatness and Gauss-Codazzi residuals of a field");
  verify->add_option("--builtin", vopt.builtin, "plus-id | minus-id | left-133 | right-133");
  verify->add_option("--expr", vopt.expr, "diag(p,p,p), sym(p00,p01,p02,p11,p12,p22) or builtin:<name>");
  verify->add_option("--chirality", chirality, "Frame of --expr")
      ->check(CLI::IsMember({"left", "right"}));
  verify->add_flag("--rotate", vopt.rotate, "Apply a seeded random rotation to a builtin");
  verify->add_flag("--finite-difference", vopt.finite_difference, "Differentiate by central differences");

  bool grid_oracle = false;
  auto* classify = app.add_subcommand("classify", "Constant-frame solutions of the cyclic system");
  classify->add_flag("--grid-oracle", grid_oracle, "Cross-check by grid enumeration");

  auto* deform = app.add_subcommand("deform", "Infinitesimal deformations of the 1,-3,-3 solution");

  CylinderOptions copt;
  std::string t_text, s_text;
  auto* cylinder = app.add_subcommand("cylinder", "Generalized cylinder profile and 4D metric checks");
  cylinder->add_option("--t", t_text, "t range a..b");
  cylinder->add_option("--s", s_text, "s range a..b with a > 1/2");
  cylinder->add_flag("--probe-curvature", copt.probe_curvature, "Curvature proxy on a decreasing s grid");
  cylinder->add_option("--probe-points", copt.probe_points, "Points of the curvature probe")->capture_default_str();
  cylinder->add_flag("--to-singularity", copt.to_singularity, "Integrate backward to s = 1/2");

  auto* rigidity = app.add_subcommand("rigidity", "S2 rigidity residuals and the Codazzi equivalence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }

  try {
    CommandResult r;
    if (verify->parsed()) {
      vopt.chirality = chirality == "right" ? Chirality::right : Chirality::left;
      r = cmd_verify(vopt, cfg);
    } else if (classify->parsed()) {
      r = cmd_classify(grid_oracle, cfg);
    } else if (deform->parsed()) {
      r = cmd_deform(cfg);
    } else if (cylinder->parsed()) {
      if (!t_text.empty()) copt.t_range = parse_range(t_text);
      if (!s_text.empty()) copt.s_range = parse_range(s_text);
      r = cmd_cylinder(copt, cfg);
    } else if (rigidity->parsed()) {
      r = cmd_rigidity(cfg);
    }
    out << render(r, cfg.format);
    return r.exit_code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace cauchy::cli
