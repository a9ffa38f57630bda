#include "pasp/consistency.hpp"

#include "pasp/asp.hpp"
#include "pasp/parteval.hpp"

namespace pasp {

RenamePairs rename_pairs(const PossProgram& p) {
  RenamePairs pairs;
  for (const auto& [name, atom] : p.atoms)
    if (atom.strong_neg_of) pairs.emplace(name, *atom.strong_neg_of);
  return pairs;
}

bool consistent_set(const AtomSet& s, const RenamePairs& pairs) {
  for (const auto& [rename, base] : pairs)
    if (atomset_contains(s, rename) && atomset_contains(s, base))
      return false;
  return true;
}

Lattice::Index incons_degree(const PossAtomSet& s, const RenamePairs& pairs,
                             ValueCut cut) {
  const Lattice& l = *s.lattice();
  if (consistent_set(s.project(), pairs)) return l.bottom();
  std::vector<Lattice::Index> good;
  for (Lattice::Index a = 0; a < l.size(); ++a) {
    AtomSet kept;
    for (const auto& [atom, value] : s.entries()) {
      bool keep = cut == ValueCut::keep_not_below ? !l.strictly_less(value, a)
                                                  : l.leq(a, value);
      if (keep) atomset_insert(kept, atom);
    }
    if (consistent_set(kept, pairs)) good.push_back(a);
  }
  return l.glb(good);
}

Preference more_consistent(const PossAtomSet& m1, const PossAtomSet& m2,
                           const RenamePairs& pairs) {
  const Lattice& l = *m1.lattice();
  Lattice::Index d1 = incons_degree(m1, pairs);
  Lattice::Index d2 = incons_degree(m2, pairs);
  if (l.strictly_less(d1, d2)) return Preference::first;
  if (l.strictly_less(d2, d1)) return Preference::second;
  return Preference::neither;
}

namespace {

bool has_answer_set(const PossProgram& p) {
  return !answer_sets(project(p)).empty();
}

}  // namespace

Lattice::Index cons_cut_degree(const PossProgram& p) {
  const Lattice& l = *p.lattice;
  if (has_answer_set(p)) return l.bottom();
  std::vector<Lattice::Index> good;
  for (Lattice::Index a = 0; a < l.size(); ++a)
    if (has_answer_set(strict_alpha_cut(p, a))) good.push_back(a);
  return l.glb(good);
}

Lattice::Index inc_program_degree(const PossProgram& p) {
  return cons_cut_degree(p);
}

RepairResult repair(const PossProgram& p) {
  RepairResult r;
  r.cut_degree = cons_cut_degree(p);
  r.program = has_answer_set(p) ? p : strict_alpha_cut(p, r.cut_degree);
  r.models = poss_t_answer_sets(r.program);
  return r;
}

ConsistencyReport analyze(const PossProgram& p) {
  ConsistencyReport rep;
  rep.models = poss_t_answer_sets(p);
  rep.program_consistent = !rep.models.empty();
  rep.cons_cut_degree = cons_cut_degree(p);
  rep.irreparable =
      !rep.program_consistent && rep.cons_cut_degree == p.lattice->top();

  RenamePairs pairs = rename_pairs(p);
  for (const auto& m : rep.models)
    rep.per_model_degrees.push_back(incons_degree(m, pairs));

  const Lattice& l = *p.lattice;
  for (std::size_t i = 0; i < rep.models.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < rep.models.size() && !dominated; ++j)
      dominated =
          l.strictly_less(rep.per_model_degrees[j], rep.per_model_degrees[i]);
    if (!dominated) rep.preferred_models.push_back(i);
  }
  return rep;
}

}  // namespace pasp
