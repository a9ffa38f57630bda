#include "pasp/report.hpp"

#include <json.hpp>

#include "pasp/consistency.hpp"
#include "pasp/parser.hpp"

namespace pasp {

namespace {

std::vector<ModelReport> build_models(const PossProgram& p,
                                      const std::vector<PossAtomSet>& models) {
  const Lattice& l = *p.lattice;
  RenamePairs pairs = rename_pairs(p);
  std::vector<Lattice::Index> degrees;
  degrees.reserve(models.size());
  for (const auto& m : models) degrees.push_back(incons_degree(m, pairs));

  std::vector<ModelReport> out;
  for (std::size_t i = 0; i < models.size(); ++i) {
    ModelReport mr;
    for (const auto& [atom, value] : models[i].entries())
      mr.atoms.emplace_back(display_atom(p, atom), l.label(value));
    for (const auto& atom : models[i].project())
      mr.projection.push_back(display_atom(p, atom));
    mr.incons_degree = l.label(degrees[i]);
    mr.preferred = true;
    for (Lattice::Index d : degrees)
      if (l.strictly_less(d, degrees[i])) mr.preferred = false;
    out.push_back(std::move(mr));
  }
  return out;
}

std::string model_line(const ModelReport& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.atoms.size(); ++i) {
    if (i) out += ", ";
    out += "(" + m.atoms[i].first + ", " + m.atoms[i].second + ")";
  }
  return out + "}";
}

void append_models(std::string& out, const std::vector<ModelReport>& models) {
  for (std::size_t i = 0; i < models.size(); ++i) {
    out += "model " + std::to_string(i + 1) + ": " + model_line(models[i]) +
           "\n  inconsistency degree: " + models[i].incons_degree +
           (models[i].preferred ? "; preferred" : "") + "\n";
  }
}

nlohmann::json models_json(const std::vector<ModelReport>& models) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& m : models) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& [name, label] : m.atoms)
      atoms.push_back({name, label});
    arr.push_back({{"atoms", atoms},
                   {"projection", m.projection},
                   {"incons_degree", m.incons_degree},
                   {"preferred", m.preferred}});
  }
  return arr;
}

}  // namespace

SolveReport make_solve_report(const PossProgram& p, const std::string& path,
                              const std::string& engine,
                              const std::vector<PossAtomSet>& models,
                              std::optional<bool> engine_agreement) {
  SolveReport r;
  r.program_path = path;
  r.engine = engine;
  r.models = build_models(p, models);
  r.consistent = !models.empty();
  r.cons_cut_degree = p.lattice->label(cons_cut_degree(p));
  r.engine_agreement = engine_agreement;
  return r;
}

AnalyzeReport make_analyze_report(const PossProgram& p,
                                  const std::string& path) {
  ConsistencyReport rep = analyze(p);
  AnalyzeReport r;
  r.program_path = path;
  r.consistent = rep.program_consistent;
  r.cons_cut_degree = p.lattice->label(rep.cons_cut_degree);
  r.irreparable = rep.irreparable;
  r.models = build_models(p, rep.models);
  return r;
}

RepairReport make_repair_report(const PossProgram& p,
                                const std::string& path) {
  RepairResult res = repair(p);
  RepairReport r;
  r.program_path = path;
  r.cut_degree = p.lattice->label(res.cut_degree);
  r.repaired_program = unparse(res.program);
  r.models = build_models(res.program, res.models);
  return r;
}

std::string to_text(const SolveReport& r) {
  std::string out = "program: " + r.program_path + "\nengine: " + r.engine +
                    "\n";
  if (r.models.empty())
    out += "no possibilistic answer sets\n";
  else
    append_models(out, r.models);
  out += std::string("program diagnostics: ") +
         (r.consistent ? "consistent" : "inconsistent") +
         "; consistency-cut degree: " + r.cons_cut_degree + "\n";
  if (r.engine_agreement)
    out += std::string("engines agree: ") +
           (*r.engine_agreement ? "yes" : "NO") + "\n";
  return out;
}

std::string to_text(const AnalyzeReport& r) {
  std::string out = "program: " + r.program_path + "\nconsistent: " +
                    (r.consistent ? "yes" : "no") +
                    "\nconsistency-cut degree: " + r.cons_cut_degree + "\n";
  if (r.irreparable) out += "irreparable: no nonempty cut is consistent\n";
  append_models(out, r.models);
  return out;
}

std::string to_text(const RepairReport& r) {
  std::string out = "program: " + r.program_path + "\ncut degree: " +
                    r.cut_degree + "\nrepaired program:\n";
  out += r.repaired_program;
  if (r.models.empty())
    out += "no possibilistic answer sets\n";
  else
    append_models(out, r.models);
  return out;
}

std::string to_json(const SolveReport& r) {
  nlohmann::json j = {
      {"program_path", r.program_path},
      {"engine", r.engine},
      {"models", models_json(r.models)},
      {"program_diagnostics",
       {{"consistent", r.consistent},
        {"cons_cut_degree", r.cons_cut_degree}}}};
  if (r.engine_agreement) j["engine_agreement"] = *r.engine_agreement;
  return j.dump(2);
}

std::string to_json(const AnalyzeReport& r) {
  nlohmann::json j = {{"program_path", r.program_path},
                      {"consistent", r.consistent},
                      {"cons_cut_degree", r.cons_cut_degree},
                      {"irreparable", r.irreparable},
                      {"models", models_json(r.models)}};
  return j.dump(2);
}

std::string to_json(const RepairReport& r) {
  nlohmann::json j = {{"program_path", r.program_path},
                      {"cut_degree", r.cut_degree},
                      {"repaired_program", r.repaired_program},
                      {"models", models_json(r.models)}};
  return j.dump(2);
}

}  // namespace pasp
