// Command-line front end: kodim <verb> [input] [--format text|json]
//   [--tolerance <rat>] [--dim 3|4] [--file <path>]

#include "kodim/command.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  CLI::App app{"Kodaira dimensions, Gromov norms and geometry tables for 3- and 4-manifolds"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format;
  std::string tolerance;
  int dim = 0;
  std::string file;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tolerance", tolerance, "Growth-fit or root tolerance (rational)");
  app.add_option("--dim", dim, "Dimension")->check(CLI::IsMember({3, 4}));
  app.add_option("--file", file, "Read the input from a file")->check(CLI::ExistingFile);

  std::string input;
  const char* help[] = {
      "Kodaira dimension kappa_t of a 3-manifold description",
      "kappa_s, kappa_l or kappa_h of a 4-dimensional record",
      "Li-Ruan dimension of product6(...) or liruan(...)",
      "Gromov norm of a 3-manifold or geom4(...)",
      "Geometry table (--dim 3|4)",
      "Check obstructions for a map claim (JSON)",
      "Shub entropy of homology matrices (JSON)",
      "Intersection products on M x Sigma_g",
      "Prime-summand shapes of a kappa_t <= 0 manifold",
      "Structural validation of a 3-manifold description",
  };
  std::vector<CLI::App*> subs;
  for (int v = 0; v <= static_cast<int>(kodim::Verb::Validate); ++v) {
    auto* sub = app.add_subcommand(std::string(kodim::to_string(static_cast<kodim::Verb>(v))), help[v]);
    sub->add_option("input", input, "Input text");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  kodim::Command cmd;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (subs[i]->parsed()) cmd.verb = static_cast<kodim::Verb>(i);

  if (format.empty())
    if (const char* env = std::getenv("KODIM_FORMAT")) format = env;
  if (!format.empty()) {
    const auto f = kodim::format_from_string(format);
    if (!f) {
      std::cerr << "error: unknown format '" << format << "' (expected text or json)\n";
      return 2;
    }
    cmd.format = *f;
  }
  if (!tolerance.empty()) cmd.tolerance = tolerance;
  if (dim != 0) cmd.dim = dim;

  if (!file.empty()) {
    if (!input.empty()) {
      std::cerr << "error: give the input either inline or with --file, not both\n";
      return 2;
    }
    std::ifstream in(file, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    input = ss.str();
  }
  cmd.input = input;

  const kodim::RunResult r = kodim::run(cmd);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
