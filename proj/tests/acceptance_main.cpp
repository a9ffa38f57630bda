// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit if
// anything fails. Golden values are frozen program outputs; the random
// criteria reuse one shared corpus so the equivalence, oracle and
// projection checks all see the same programs.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pasp/asp.hpp"
#include "pasp/consistency.hpp"
#include "pasp/lattice.hpp"
#include "pasp/model.hpp"
#include "pasp/parser.hpp"
#include "pasp/parteval.hpp"
#include "pasp/reduct.hpp"
#include "pasp/resolution.hpp"
#include "testutil.hpp"

using namespace pasp;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(int num, const std::string& what, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " " << num << ": " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

std::string program_file(const std::string& name) {
  return std::string(PASP_PROGRAMS_DIR) + "/" + name;
}

PossAtomSet pset(const LatticePtr& l,
                 const std::vector<std::pair<std::string, std::string>>& vs) {
  PossAtomSet s(l);
  for (const auto& [atom, label] : vs) s.set(atom, label);
  return s;
}

std::string join(const AtomSet& atoms, const std::string& sep) {
  std::string out;
  for (const auto& a : atoms) {
    if (!out.empty()) out += sep;
    out += a;
  }
  return out;
}

// One line per clause, order-insensitive, for golden listings.
std::vector<std::string> clause_lines(const PossProgram& q) {
  std::vector<std::string> out;
  for (const auto& c : q.clauses) {
    std::string s = q.necessity_label(c) + ": " + join(c.head, " | ");
    if (!c.pos_body.empty()) s += " :- " + join(c.pos_body, ", ");
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string describe_models(const std::vector<PossAtomSet>& models) {
  std::ostringstream os;
  os << models.size() << " model(s):";
  for (const auto& m : models) {
    os << " {";
    bool first = true;
    for (const auto& a : m.project()) {
      if (!first) os << ", ";
      first = false;
      os << "(" << a << "," << m.lattice()->label(*m.value_of(a)) << ")";
    }
    os << "}";
  }
  return os.str();
}

// 1. Two defaults against a disjunctive fact over the nine-step chain.
void criterion_two_default_golden() {
  PossProgram p = parse_file(program_file("example2.pasp"));
  const auto t0 = Clock::now();
  auto res = poss_answer_sets_resolution(p);
  auto gppe = poss_t_answer_sets(p);
  const double ms = ms_since(t0);

  std::vector<PossAtomSet> want{pset(p.lattice, {{"a", "0.6"}}),
                                pset(p.lattice, {{"b", "0.8"}})};
  bool ok = res == want && gppe == want && ms < 1000.0;
  report(1, "two-default disjunctive golden, both engines", ok,
         ok ? "" : describe_models(res) + " / " + describe_models(gppe));
}

// 2. Five-rule golden: engine values, the fixpoint extraction of the
//    {a,b,e} reduct, and cross-engine plus oracle agreement on {c}.
void criterion_five_rule_golden() {
  PossProgram p = parse_file(program_file("example5.pasp"));
  const auto t0 = Clock::now();
  auto res = poss_answer_sets_resolution(p);
  auto gppe = poss_t_answer_sets(p);
  const double ms = ms_since(t0);

  PossAtomSet abe = pset(p.lattice, {{"a", "0.7"}, {"b", "0.6"}, {"e", "0.6"}});
  bool ok = res.size() == 2 && gppe == res && res[0] == abe && ms < 1000.0;

  PossProgram reduct_abe = poss_reduct(p, {"a", "b", "e"});
  ok = ok && sem_min(pi_fixpoint(reduct_abe)) == abe;

  if (ok) {
    const PossAtomSet& c_model = res[1];
    PossProgram reduct_c = poss_reduct(p, {"c"});
    ok = c_model.project() == AtomSet{"c"} &&
         *c_model.value_of("c") == testutil::oracle_value(reduct_c, "c");
  }
  report(2, "five-rule golden, fixpoint extraction and oracle agree on {c}",
         ok, ok ? "" : describe_models(res));
}

// 3. The two reduction listings that separate this reduct from the
//    Gelfond-Lifschitz one: heads are intersected with M and clauses
//    with unsatisfied positive bodies are dropped.
void criterion_reduct_golden() {
  PossProgram p1 = parse(
      "lattice chain { 0.6, 0.7, 0.8 }\n"
      "0.6: a | b.\n"
      "0.7: c :- not a.\n"
      "0.8: c :- not b.\n");
  bool ok = clause_lines(poss_reduct(p1, {"b", "c"})) ==
            sorted({"0.6: b", "0.7: c"});

  PossProgram p2 = parse(
      "lattice chain { 0.6, 0.7, 0.8 }\n"
      "0.6: a :- not b.\n"
      "0.7: a :- b.\n"
      "0.8: b :- c.\n");
  ok = ok && clause_lines(poss_reduct(p2, {"a"})) ==
                 sorted({"0.6: a"});
  report(3, "reduct listings match clause-for-clause", ok);
}

// 4. Unfolding trace golden: one step and the full fixpoint of the
//    five-rule {a,b,e} reduct.
void criterion_unfolding_golden() {
  PossProgram p = parse_file(program_file("example5.pasp"));
  PossProgram reduct = poss_reduct(p, {"a", "b", "e"});

  bool ok = clause_lines(t_operator(reduct)) ==
            sorted({"0.7: a | b", "0.8: a :- b", "0.9: e :- b", "0.6: b :- a",
                    "0.5: b :- a", "0.7: a", "0.7: a | e", "0.6: b",
                    "0.5: b"});
  ok = ok && clause_lines(pi_fixpoint(reduct)) ==
                 sorted({"0.7: a | b", "0.8: a :- b", "0.9: e :- b",
                         "0.6: b :- a", "0.5: b :- a", "0.7: a", "0.7: a | e",
                         "0.6: b", "0.5: b", "0.6: a", "0.5: a", "0.6: e",
                         "0.5: e", "0.6: b | e", "0.5: b | e", "0.6: a | e",
                         "0.5: a | e"});
  report(4, "single unfolding step and fixpoint listings exact", ok);
}

// 5. Transplant scenario: the optimistic valued model is returned and
//    the claim of six possibilistic answer sets holds.
void criterion_medical_golden() {
  PossProgram p = parse_file(program_file("medical.pasp"));
  auto models = poss_t_answer_sets(p);

  PossAtomSet s = pset(p.lattice, {{"d_inf(present,0)", "certain"},
                                   {"r_inf(present,0)'", "certain"},
                                   {"o(terminal_insufficient_funct,0)", "certain"},
                                   {"cs(stable,0)", "certain"},
                                   {"action(transplant,0)", "confirmed"},
                                   {"o(good_graft_funct,1)", "confirmed"},
                                   {"cs(stable,1)", "plausible"},
                                   {"r_inf(present,1)'", "probable"}});
  bool has_s = std::find(models.begin(), models.end(), s) != models.end();
  bool count_ok = models.size() == 6;
  std::string detail;
  if (!count_ok)
    detail = "claimed six possibilistic answer sets, engine returned " +
             std::to_string(models.size());
  else if (!has_s)
    detail = "expected optimistic model missing; " + describe_models(models);
  report(5, "transplant scenario returns the listed model and six in total",
         has_s && count_ok, detail);
}

// 6. Inconsistency degrees: the infection branch scores confirmed, the
//    clean branch is preferred, and the three-cycle cuts at 0.3 with a
//    unique repaired model.
void criterion_inconsistency_golden() {
  PossProgram pv = parse_file(program_file("medical_v.pasp"));
  ConsistencyReport rep = analyze(pv);

  PossAtomSet base = pset(pv.lattice, {{"d_inf(present,0)", "certain"},
                                       {"r_inf(present,0)'", "certain"},
                                       {"o(terminal_insufficient_funct,0)", "certain"},
                                       {"cs(stable,0)", "certain"},
                                       {"action(transplant,0)", "confirmed"},
                                       {"o(good_graft_funct,1)", "confirmed"},
                                       {"cs(stable,1)", "plausible"},
                                       {"v(kidney,0)", "plausible"}});
  PossAtomSet s1 = base;
  s1.set("r_inf(present,1)'", "probable");
  PossAtomSet s2 = base;
  s2.set("r_inf(present,1)", "probable");
  s2.set("v(kidney,0)'", "probable");

  auto it1 = std::find(rep.models.begin(), rep.models.end(), s1);
  auto it2 = std::find(rep.models.begin(), rep.models.end(), s2);
  bool ok = it1 != rep.models.end() && it2 != rep.models.end();
  if (ok) {
    std::size_t i1 = static_cast<std::size_t>(it1 - rep.models.begin());
    std::size_t i2 = static_cast<std::size_t>(it2 - rep.models.begin());
    ok = pv.lattice->label(rep.per_model_degrees[i2]) == "confirmed" &&
         rep.preferred_models == std::vector<std::size_t>{i1};
  }

  PossProgram pinc = parse_file(program_file("p_inc.pasp"));
  ok = ok && pinc.lattice->label(cons_cut_degree(pinc)) == "0.3";
  RepairResult fixed = repair(pinc);
  ok = ok && pinc.lattice->label(fixed.cut_degree) == "0.3" &&
       fixed.models ==
           std::vector<PossAtomSet>{pset(pinc.lattice, {{"c", "0.6"}})};
  report(6, "cut degrees, model preference and three-cycle repair", ok);
}

// 7. Uniform disjunctive program versus its shifted normal variant.
void criterion_shift_golden() {
  PossProgram disj = parse_file(program_file("uniform_disj.pasp"));
  std::vector<PossAtomSet> want{
      pset(disj.lattice, {{"a", "0.5"}, {"b", "0.5"}})};
  bool ok = poss_answer_sets_resolution(disj) == want &&
            poss_t_answer_sets(disj) == want;

  PossProgram shifted = parse_file(program_file("shifted_normal.pasp"));
  ok = ok && poss_answer_sets_resolution(shifted).empty() &&
       poss_t_answer_sets(shifted).empty();
  report(7, "uniform disjunctive golden and its answer-set-free shift", ok);
}

struct Corpus {
  std::vector<PossProgram> programs;
  std::vector<std::vector<PossAtomSet>> models;  // resolution engine
};

// 8. Both engines agree on every program of a 500-strong random corpus.
Corpus criterion_engine_equivalence() {
  Corpus corpus;
  std::mt19937 rng(20260817);
  LatticePtr chain = testutil::make_chain(
      {"0", "0.1", "0.2", "0.3", "0.4", "0.5", "0.6", "0.7", "0.8", "0.9"});
  LatticePtr clinical = testutil::clinical_lattice();

  const auto t0 = Clock::now();
  int mismatches = 0;
  for (int i = 0; i < 500; ++i) {
    PossProgram p =
        testutil::random_program(rng, i % 2 ? clinical : chain);
    auto res = poss_answer_sets_resolution(p);
    if (res != poss_t_answer_sets(p)) ++mismatches;
    corpus.programs.push_back(std::move(p));
    corpus.models.push_back(std::move(res));
  }
  const double secs = ms_since(t0) / 1000.0;

  std::ostringstream os;
  os.precision(2);
  os << std::fixed << secs << " s";
  bool ok = mismatches == 0 && secs < 60.0;
  report(8, "engine equivalence on 500 random programs", ok,
         ok ? os.str()
            : std::to_string(mismatches) + " mismatches, " + os.str());
  return corpus;
}

// 9. The same corpus against the brute-force cut-level oracle.
void criterion_oracle_agreement(const Corpus& corpus) {
  int mismatches = 0;
  for (std::size_t i = 0; i < corpus.programs.size(); ++i)
    if (testutil::oracle_poss_answer_sets(corpus.programs[i]) !=
        corpus.models[i])
      ++mismatches;
  report(9, "oracle agreement on the same corpus", mismatches == 0,
         mismatches == 0 ? "" : std::to_string(mismatches) + " mismatches");
}

// 10. Projections are answer sets, and uniform programs lift uniformly.
void criterion_projection_uniform(const Corpus& corpus) {
  bool ok = true;
  for (std::size_t i = 0; i < corpus.programs.size() && ok; ++i) {
    auto classical = answer_sets(project(corpus.programs[i]));
    for (const auto& m : corpus.models[i])
      if (std::find(classical.begin(), classical.end(), m.project()) ==
          classical.end())
        ok = false;
  }

  std::mt19937 rng(404);
  LatticePtr chain = testutil::chain_0_to_1();
  for (int trial = 0; trial < 100 && ok; ++trial) {
    testutil::ProgramGenOptions opt;
    opt.allow_constraints = false;
    opt.uniform_necessity = rng() % chain->size();
    PossProgram p = testutil::random_program(rng, chain, opt);
    auto classical = answer_sets(project(p));
    auto models = poss_t_answer_sets(p);
    if (models.size() != classical.size()) ok = false;
    for (std::size_t i = 0; i < models.size() && ok; ++i) {
      if (models[i].project() != classical[i]) ok = false;
      for (const auto& a : classical[i])
        if (*models[i].value_of(a) != *opt.uniform_necessity) ok = false;
    }
  }
  report(10, "models project to answer sets; uniform programs lift uniformly",
         ok);
}

// 11. Lattice laws by brute force, and the possibilistic-set order has
//     real meets and joins on small domains.
void criterion_lattice_laws() {
  std::vector<LatticePtr> lattices{
      testutil::chain_0_to_1(), testutil::chain_01_to_09(),
      testutil::clinical_lattice(), testutil::make_chain({"0", "1"})};
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i)
    lattices.push_back(testutil::random_lattice(rng, 8));

  std::string violation;
  for (const auto& l : lattices) {
    violation = testutil::lattice_law_violation(*l);
    if (!violation.empty()) break;
  }
  bool ok = violation.empty();

  // Exhaustive universality of pset_meet/pset_join over every pair of
  // possibilistic sets on three atoms.
  std::vector<LatticePtr> small{
      testutil::make_chain({"0", "1"}),
      build_lattice({"bot", "x", "y", "top"},
                    {{"bot", "x"}, {"bot", "y"}, {"x", "top"}, {"y", "top"}}),
      testutil::random_lattice(rng, 4)};
  for (const auto& l : small) {
    if (!ok) break;
    std::vector<PossAtomSet> all;
    const std::size_t n = l->size();
    for (std::size_t ca = 0; ca <= n; ++ca)
      for (std::size_t cb = 0; cb <= n; ++cb)
        for (std::size_t cc = 0; cc <= n; ++cc) {
          PossAtomSet s(l);
          if (ca < n) s.set("p", ca);
          if (cb < n) s.set("q", cb);
          if (cc < n) s.set("r", cc);
          all.push_back(std::move(s));
        }
    for (const auto& a : all) {
      for (const auto& b : all) {
        PossAtomSet m = pset_meet(a, b);
        PossAtomSet j = pset_join(a, b);
        if (!pset_leq(m, a) || !pset_leq(m, b) || !pset_leq(a, j) ||
            !pset_leq(b, j)) {
          ok = false;
          break;
        }
        for (const auto& c : all) {
          if (pset_leq(c, a) && pset_leq(c, b) && !pset_leq(c, m)) ok = false;
          if (pset_leq(a, c) && pset_leq(b, c) && !pset_leq(j, c)) ok = false;
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
  }
  report(11, "lattice laws and possibilistic-set meet/join universality", ok,
         violation);
}

// 12. parse-unparse-parse is a fixpoint on the shipped programs and on
//     200 random ones.
void criterion_parser_roundtrip() {
  bool ok = true;
  for (const char* name :
       {"example2.pasp", "example5.pasp", "medical.pasp", "medical_v.pasp",
        "p_inc.pasp", "uniform_disj.pasp", "shifted_normal.pasp"}) {
    PossProgram p1 = parse_file(program_file(name));
    std::string text = unparse(p1);
    PossProgram p2 = parse(text);
    if (p2.clauses != p1.clauses || p2.atoms != p1.atoms ||
        unparse(p2) != text)
      ok = false;
  }

  std::mt19937 rng(1212);
  for (int trial = 0; trial < 200 && ok; ++trial) {
    testutil::ProgramGenOptions opt;
    opt.strong_neg_prob = trial % 3 ? 0.0 : 0.3;
    PossProgram p = testutil::random_program(
        rng, trial % 2 ? testutil::clinical_lattice() : testutil::chain_0_to_1(),
        opt);
    std::string text = unparse(p);
    PossProgram p2 = parse(text);
    if (p2.clauses != p.clauses || p2.atoms != p.atoms || unparse(p2) != text)
      ok = false;
  }
  report(12, "parser round-trip fixpoint on golden and random programs", ok);
}

}  // namespace

int main() {
  criterion_two_default_golden();
  criterion_five_rule_golden();
  criterion_reduct_golden();
  criterion_unfolding_golden();
  criterion_medical_golden();
  criterion_inconsistency_golden();
  criterion_shift_golden();
  Corpus corpus = criterion_engine_equivalence();
  criterion_oracle_agreement(corpus);
  criterion_projection_uniform(corpus);
  criterion_lattice_laws();
  criterion_parser_roundtrip();

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
