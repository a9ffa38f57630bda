#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pasp/parser.hpp"
#include "pasp/parteval.hpp"
#include "pasp/report.hpp"
#include "pasp/resolution.hpp"

namespace {

int run_solve(const pasp::PossProgram& p, const std::string& file,
              const std::string& engine, bool json, bool trace) {
  std::vector<std::string> trace_lines;
  std::vector<std::string>* tp = trace ? &trace_lines : nullptr;

  std::vector<pasp::PossAtomSet> models;
  std::optional<bool> agreement;
  if (engine == "resolution") {
    models = pasp::poss_answer_sets_resolution(p, tp);
  } else if (engine == "gppe") {
    models = pasp::poss_t_answer_sets(p, tp);
  } else {
    models = pasp::poss_answer_sets_resolution(p, tp);
    agreement = models == pasp::poss_t_answer_sets(p, tp);
  }
  for (const auto& line : trace_lines) std::cerr << line << "\n";

  pasp::SolveReport rep =
      pasp::make_solve_report(p, file, engine, models, agreement);
  std::cout << (json ? pasp::to_json(rep) + "\n" : pasp::to_text(rep));

  if (agreement && !*agreement) {
    std::cerr << "error: the two engines disagree on this program\n";
    return 3;
  }
  return models.empty() ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"possibilistic answer set solver"};
  app.require_subcommand(1);

  std::string file;
  std::string engine = "both";
  bool json = false;
  bool trace = false;

  CLI::App* solve =
      app.add_subcommand("solve", "compute possibilistic answer sets");
  solve->add_option("file", file, "program file")->required();
  solve->add_option("--engine", engine, "resolution, gppe, or both")
      ->check(CLI::IsMember({"resolution", "gppe", "both"}));
  solve->add_flag("--json", json, "machine-readable output");
  solve->add_flag("--trace", trace, "derivation log on stderr");

  CLI::App* analyze =
      app.add_subcommand("analyze", "consistency report for a program");
  analyze->add_option("file", file, "program file")->required();
  analyze->add_flag("--json", json, "machine-readable output");

  CLI::App* repair = app.add_subcommand(
      "repair", "cut an inconsistent program back to consistency");
  repair->add_option("file", file, "program file")->required();
  repair->add_flag("--json", json, "machine-readable output");

  CLI::App* check =
      app.add_subcommand("check", "parse and validate a program");
  check->add_option("file", file, "program file")->required();
  check->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    pasp::PossProgram p = pasp::parse_file(file);
    if (solve->parsed()) return run_solve(p, file, engine, json, trace);
    if (analyze->parsed()) {
      pasp::AnalyzeReport rep = pasp::make_analyze_report(p, file);
      std::cout << (json ? pasp::to_json(rep) + "\n" : pasp::to_text(rep));
      return 0;
    }
    if (repair->parsed()) {
      pasp::RepairReport rep = pasp::make_repair_report(p, file);
      std::cout << (json ? pasp::to_json(rep) + "\n" : pasp::to_text(rep));
      return 0;
    }
    if (check->parsed()) {
      if (json) {
        nlohmann::json doc{{"program_path", file},
                           {"clauses", p.clauses.size()},
                           {"atoms", p.atoms.size()},
                           {"lattice_elements", p.lattice->size()}};
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "ok: " << p.clauses.size() << " clauses, "
                  << p.atoms.size() << " atoms, lattice of "
                  << p.lattice->size() << " elements\n";
      }
      return 0;
    }
  } catch (const pasp::ParseError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
