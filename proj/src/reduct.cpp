#include "pasp/reduct.hpp"

#include <algorithm>

namespace pasp {

PossProgram poss_reduct(const PossProgram& p, const AtomSet& m) {
  PossProgram out;
  out.lattice = p.lattice;
  out.atoms = p.atoms;
  for (const auto& c : p.clauses) {
    AtomSet new_head;
    for (const auto& a : c.head)
      if (atomset_contains(m, a)) atomset_insert(new_head, a);
    if (new_head.empty()) continue;

    bool blocked = false;
    for (const auto& a : c.neg_body)
      if (atomset_contains(m, a)) {
        blocked = true;
        break;
      }
    if (blocked) continue;
    bool applicable = true;
    for (const auto& a : c.pos_body)
      if (!atomset_contains(m, a)) {
        applicable = false;
        break;
      }
    if (!applicable) continue;

    PossClause r{c.necessity, std::move(new_head), c.pos_body, {}};
    if (std::find(out.clauses.begin(), out.clauses.end(), r) ==
        out.clauses.end())
      out.clauses.push_back(std::move(r));
  }
  return out;
}

}  // namespace pasp
