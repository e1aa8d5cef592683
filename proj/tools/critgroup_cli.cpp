// critgroup: critical groups and spanning-tree counts of multigraphs.
//
//   critgroup family km-pn -m 3 -n 4 [--engine closed-form|snf|both] [--json]
//   critgroup graph edges.txt [--json]
//   critgroup snf matrix.txt [--show-transforms] [--json]
//   critgroup verify --m 3..5 --n 4..6 [--json]
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "critgroup/commands.hpp"
#include "critgroup/errors.hpp"

namespace {

constexpr int kExitUsage = 2;

int emit(const critgroup::Report& report, bool json) {
  if (json)
    std::cout << critgroup::to_json(report).dump(2) << '\n';
  else
    std::cout << critgroup::to_text(report);
  return critgroup::exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical groups (Laplacian cokernels) and spanning-tree counts"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");

  std::string family_name, engine_name = "both";
  std::size_t m = 0, n = 0;
  auto* family = app.add_subcommand("family", "Evaluate K_m v P_n or P_m v P_n");
  family->add_option("family", family_name, "km-pn or pm-pn")->required();
  family->add_option("-m,--m", m, "First parameter")->required();
  family->add_option("-n,--n", n, "Second parameter")->required();
  family->add_option("--engine", engine_name, "closed-form, snf or both")
      ->check(CLI::IsMember({"closed-form", "snf", "both"}));
  family->add_flag("--json", json, "Emit JSON instead of text");

  std::string graph_path;
  auto* graph = app.add_subcommand("graph", "Critical group of a multigraph edge list");
  graph->add_option("path", graph_path, "Edge-list file")->required();
  graph->add_flag("--json", json, "Emit JSON instead of text");

  std::string matrix_path;
  bool show_transforms = false;
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix file");
  snf->add_option("path", matrix_path, "Matrix file")->required();
  snf->add_flag("--show-transforms", show_transforms, "Also print P and Q with P*A*Q = diag(s)");
  snf->add_flag("--json", json, "Emit JSON instead of text");

  std::string m_range, n_range;
  auto* verify = app.add_subcommand("verify", "Cross-check closed forms, SNF and oracles");
  verify->add_option("--m", m_range, "Inclusive range A..B")->required();
  verify->add_option("--n", n_range, "Inclusive range A..B")->required();
  verify->add_flag("--json", json, "Emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*family) {
      return emit(critgroup::cmd_family(critgroup::parse_family(family_name), m, n,
                                        critgroup::parse_engine(engine_name)),
                  json);
    }
    if (*graph) return emit(critgroup::cmd_graph_file(graph_path), json);
    if (*snf) return emit(critgroup::cmd_snf_file(matrix_path, show_transforms), json);
    if (*verify) {
      return emit(critgroup::cmd_verify(critgroup::parse_range(m_range),
                                        critgroup::parse_range(n_range)),
                  json);
    }
  } catch (const critgroup::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const critgroup::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
