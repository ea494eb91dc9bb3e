// Command line front end: loads a surface, reads an operation payload as JSON
// (stdin or --in), writes the result as JSON (stdout or --out).
//
// Exit codes: 0 success, 1 verification found property failures, 2 usage /
// config / malformed input, 3 violated mathematical precondition.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dh/aut.hpp"
#include "dh/dhspace.hpp"
#include "dh/hodge.hpp"
#include "dh/json_io.hpp"
#include "dh/surface.hpp"
#include "dh/verify.hpp"

namespace {

struct Options {
  std::string surface_path;
  std::string in_path;   // empty: stdin
  std::string out_path = "-";
  std::uint64_t seed = 42;
  long long trials = 1000;
  double tolerance = 1e-9;
  bool tolerance_given = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dh::ConfigError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_payload(const Options& opt) {
  if (!opt.in_path.empty()) return read_file(opt.in_path);
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out_path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw dh::ConfigError("cannot write " + opt.out_path);
  out << text << "\n";
}

void apply_env_and_validate(Options& opt) {
  if (const char* env = std::getenv("DH_MODULI_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0') throw dh::ConfigError("DH_MODULI_TOL is not a number");
    opt.tolerance = v;
    opt.tolerance_given = true;
  }
  if (!(opt.tolerance > 0.0 && opt.tolerance < 1e-3))
    throw dh::ConfigError("tolerance must lie in (0, 1e-3)");
  if (opt.trials < 1 || opt.trials > 1000000)
    throw dh::ConfigError("trials must lie in [1, 1e6]");
}

int run(const std::string& command, Options& opt) {
  apply_env_and_validate(opt);
  const dh::PeriodMatrix pm = dh::parse_period_matrix(read_file(opt.surface_path));
  const dh::Surface surface(pm);
  const int g = surface.genus();

  if (command == "verify") {
    dh::VerifyOptions vopt;
    vopt.seed = opt.seed;
    vopt.trials = opt.trials;
    vopt.tolerance_override = opt.tolerance_given ? opt.tolerance : -1.0;
    const auto results = dh::run_properties(surface, vopt);
    write_output(opt, dh::report_json(pm, vopt, results));
    return dh::total_failures(results) > 0 ? 1 : 0;
  }

  const std::string payload = read_payload(opt);
  if (command == "normal-form") {
    const dh::Point p = dh::parse_point(payload, g);
    write_output(opt, dh::to_json(dh::normal_form(surface, p)));
  } else if (command == "glue") {
    const dh::Point p = dh::parse_point(payload, g);
    write_output(opt, dh::to_json(dh::glue(p)));
  } else if (command == "monodromy") {
    const dh::Point p = dh::parse_point(payload, g);
    write_output(opt, dh::to_json(dh::monodromy(surface, p)));
  } else if (command == "section-eval") {
    const dh::SectionEvalRequest req = dh::parse_section_eval_request(payload, g);
    write_output(opt, dh::to_json(dh::eval_section(req.section, req.z)));
  } else if (command == "section-fit") {
    const dh::PointPairRequest req = dh::parse_point_pair(payload, g);
    write_output(opt, dh::to_json(dh::fit_section(surface, req.a, req.b)));
  } else if (command == "aut-compose") {
    const dh::AutComposeRequest req = dh::parse_aut_compose(payload, surface);
    if (std::holds_alternative<dh::Aut0>(req.a) && std::holds_alternative<dh::Aut0>(req.b)) {
      write_output(opt, dh::to_json(dh::aut0_compose(surface, std::get<dh::Aut0>(req.a),
                                                     std::get<dh::Aut0>(req.b))));
    } else if (std::holds_alternative<dh::HodgeAut>(req.a) &&
               std::holds_alternative<dh::HodgeAut>(req.b)) {
      write_output(opt, dh::to_json(dh::hodge_aut_compose(surface, std::get<dh::HodgeAut>(req.a),
                                                          std::get<dh::HodgeAut>(req.b))));
    } else {
      throw dh::ConfigError("aut-compose needs two elements of the same kind (aut0 or hodge)");
    }
  } else if (command == "aut-apply") {
    const dh::AutApplyRequest req = dh::parse_aut_apply(payload, surface);
    dh::Point result;
    if (const dh::Aut0* a = std::get_if<dh::Aut0>(&req.aut)) {
      result = dh::aut0_apply(surface, *a, req.point);
    } else if (const dh::HodgeAut* t = std::get_if<dh::HodgeAut>(&req.aut)) {
      result = dh::hodge_aut_apply(surface, *t, req.point);
    } else {
      result = dh::gamma_apply(surface, std::get<dh::Gamma>(req.aut), req.point);
    }
    write_output(opt, dh::to_json(result));
  } else {
    throw dh::ConfigError("unknown command " + command);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-one Hodge and Deligne-Hitchin moduli spaces in harmonic coordinates"};
  app.set_help_all_flag("--help-all");
  Options opt;
  app.add_option("--surface", opt.surface_path, "surface JSON file {\"g\":..., \"tau\":...}")
      ->required();
  app.add_option("--seed", opt.seed, "RNG seed for verify");
  app.add_option("--trials", opt.trials, "trials per property for verify");
  auto* tol_opt = app.add_option("--tol", opt.tolerance, "tolerance override in (0, 1e-3)");
  app.add_option("--in", opt.in_path, "payload file (default: stdin)");
  app.add_option("--out", opt.out_path, "output file or - for stdout");

  const char* names[] = {"normal-form", "glue",        "monodromy",  "section-eval",
                         "section-fit", "aut-compose", "aut-apply",  "verify"};
  const char* descs[] = {"gauge-canonical representative of a point",
                         "move a point to the opposite chart over C^*",
                         "monodromy character of the flat connection D/lambda",
                         "value of a twistor section over a base point",
                         "the section through two points on distinct fibers",
                         "compose two automorphisms of the same kind",
                         "apply an automorphism to a point",
                         "run the randomized property suite and emit a report"};
  for (int i = 0; i < 8; ++i) app.add_subcommand(names[i], descs[i])->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  opt.tolerance_given = tol_opt->count() > 0;

  try {
    return run(app.get_subcommands().front()->get_name(), opt);
  } catch (const dh::ParseError& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 2;
  } catch (const dh::ConfigError& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 2;
  } catch (const dh::Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 3;
  }
}
