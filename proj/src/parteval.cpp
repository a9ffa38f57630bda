#include "pasp/parteval.hpp"

#include <algorithm>
#include <iterator>
#include <utility>

#include "pasp/asp.hpp"
#include "pasp/reduct.hpp"

namespace pasp {

namespace {

AtomSet atomset_union(const AtomSet& a, const AtomSet& b) {
  AtomSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

AtomSet atomset_without(const AtomSet& a, const std::string& x) {
  AtomSet out;
  out.reserve(a.size());
  for (const auto& e : a)
    if (e != x) out.push_back(e);
  return out;
}

std::string join(const AtomSet& atoms, const char* sep) {
  std::string out;
  for (const auto& a : atoms) {
    if (!out.empty()) out += sep;
    out += a;
  }
  return out;
}

std::string fmt_clause(const PossProgram& p, const PossClause& c) {
  std::string out = p.necessity_label(c) + ": " + join(c.head, " | ");
  if (!c.pos_body.empty()) out += " :- " + join(c.pos_body, ", ");
  return out;
}

bool program_contains(const PossProgram& p, const PossClause& c) {
  return std::find(p.clauses.begin(), p.clauses.end(), c) != p.clauses.end();
}

// The clause store is a structural set, so repeated input clauses
// collapse before any unfolding happens.
PossProgram dedup(const PossProgram& q) {
  PossProgram out;
  out.lattice = q.lattice;
  out.atoms = q.atoms;
  for (const auto& c : q.clauses)
    if (!program_contains(out, c)) out.clauses.push_back(c);
  return out;
}

// One round of T on top of `q`, appending fresh clauses and, when
// tracing, one line per new clause. Returns whether anything was added.
// Pairs are drawn from a snapshot so appends cannot invalidate them.
bool t_round(PossProgram& q, std::vector<std::string>* trace) {
  std::vector<PossClause> snap = q.clauses;
  bool changed = false;
  for (const PossClause& r1 : snap) {
    if (r1.pos_body.empty() || !r1.neg_body.empty()) continue;
    for (const PossClause& fact : snap) {
      if (!fact.has_empty_body()) continue;
      for (const auto& b : r1.pos_body) {
        if (!atomset_contains(fact.head, b)) continue;
        PossClause r = g_gppe(*q.lattice, r1, fact, b);
        if (program_contains(q, r)) continue;
        if (trace)
          trace->push_back("unfold (" + fmt_clause(q, r1) + ") with (" +
                           fmt_clause(q, fact) + ") on " + b + " -> (" +
                           fmt_clause(q, r) + ")");
        q.clauses.push_back(std::move(r));
        changed = true;
      }
    }
  }
  return changed;
}

}  // namespace

PossClause g_gppe(const Lattice& l, const PossClause& r1,
                  const PossClause& r2, const std::string& b) {
  if (!r2.has_empty_body())
    throw NotApplicable("the second clause must be a fact");
  if (!atomset_contains(r2.head, b))
    throw NotApplicable("atom " + b + " is not in the fact's head");
  if (!atomset_contains(r1.pos_body, b))
    throw NotApplicable("atom " + b +
                        " is not in the first clause's positive body");
  if (!r1.neg_body.empty())
    throw NotApplicable("the first clause must be positive");
  PossClause out;
  out.necessity = l.glb(r1.necessity, r2.necessity);
  out.head = atomset_union(r1.head, atomset_without(r2.head, b));
  out.pos_body = atomset_without(r1.pos_body, b);
  return out;
}

PossProgram t_operator(const PossProgram& q) {
  PossProgram out = dedup(q);
  t_round(out, nullptr);
  return out;
}

PossProgram pi_fixpoint(const PossProgram& q,
                        std::vector<std::string>* trace) {
  PossProgram out = dedup(q);
  while (t_round(out, trace)) {
  }
  return out;
}

PossAtomSet sem_min(const PossProgram& q) {
  PossAtomSet m(q.lattice);
  for (const auto& c : q.clauses) {
    if (!c.has_empty_body() || c.head.size() != 1) continue;
    const std::string& x = c.head.front();
    if (auto prev = m.value_of(x))
      m.set(x, q.lattice->lub(*prev, c.necessity));
    else
      m.set(x, c.necessity);
  }
  return m;
}

std::vector<PossAtomSet> poss_t_answer_sets(const PossProgram& p,
                                            std::vector<std::string>* trace) {
  std::vector<PossAtomSet> out;
  for (const auto& s : answer_sets(project(p))) {
    PossAtomSet m = sem_min(pi_fixpoint(poss_reduct(p, s), trace));
    if (m.project() != s)
      throw ProjectionMismatch(
          "model projection diverged from its answer set");
    if (trace)
      for (const auto& [atom, value] : m.entries())
        trace->push_back("optimal necessity of " + atom + ": " +
                         p.lattice->label(value));
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace pasp
