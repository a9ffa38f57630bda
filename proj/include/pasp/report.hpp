/**
 * Result assembly for the CLI: per-model rows with inconsistency degrees
 * and preference marks, program-level diagnostics, and rendering to
 * plain text or JSON. Atom names are shown in display form, so a
 * strong-negation rename prints as -atom again. Certainty values are
 * serialized as their source labels.
 */

#ifndef PASP_REPORT_HPP
#define PASP_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pasp/model.hpp"

namespace pasp {

struct ModelReport {
  std::vector<std::pair<std::string, std::string>> atoms;  // (name, label)
  std::vector<std::string> projection;
  std::string incons_degree;
  bool preferred = false;
};

struct SolveReport {
  std::string program_path;
  std::string engine;  // resolution | gppe | both
  std::vector<ModelReport> models;
  bool consistent = false;
  std::string cons_cut_degree;
  std::optional<bool> engine_agreement;  // present when engine=both
};

struct AnalyzeReport {
  std::string program_path;
  bool consistent = false;
  std::string cons_cut_degree;
  bool irreparable = false;
  std::vector<ModelReport> models;
};

struct RepairReport {
  std::string program_path;
  std::string cut_degree;
  std::string repaired_program;  // source text of the strict cut
  std::vector<ModelReport> models;
};

SolveReport make_solve_report(const PossProgram& p, const std::string& path,
                              const std::string& engine,
                              const std::vector<PossAtomSet>& models,
                              std::optional<bool> engine_agreement);
AnalyzeReport make_analyze_report(const PossProgram& p,
                                  const std::string& path);
RepairReport make_repair_report(const PossProgram& p, const std::string& path);

std::string to_text(const SolveReport& r);
std::string to_text(const AnalyzeReport& r);
std::string to_text(const RepairReport& r);
std::string to_json(const SolveReport& r);
std::string to_json(const AnalyzeReport& r);
std::string to_json(const RepairReport& r);

}  // namespace pasp

#endif
