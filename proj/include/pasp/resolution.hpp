/**
 * Possibilistic resolution engine.
 *
 * Works on necessity-valued disjunctions. A program clause
 * α: A ← B⁺, not B⁻ becomes the disjunction A ∨ ∼B⁺ ∨ B⁻ valued α (the
 * body is negated as it crosses the arrow, so default-negated atoms come
 * out positive). Resolution combines parent valuations by GLB; the
 * optimal necessity of an atom is found by adding (∼a ⊤), saturating,
 * and joining the valuations of every empty clause derived.
 *
 * With a partially ordered scale one clause shape can be derivable at
 * several incomparable valuations, so each shape carries a maximal
 * antichain of valuations rather than a single best value. The final
 * per-atom value is the LUB over the empty clause's antichain: necessity
 * lower bounds are closed under joins, and this is what makes the engine
 * agree with the partial-evaluation one.
 */

#ifndef PASP_RESOLUTION_HPP
#define PASP_RESOLUTION_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "pasp/model.hpp"

namespace pasp {

struct NoPivot : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// No refutation exists; the queried atom is not classically entailed.
struct NotEntailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PossDisjunction {
  AtomSet pos_literals;
  AtomSet neg_literals;                    // ∼-side
  std::vector<Lattice::Index> valuations;  // maximal antichain

  bool empty_clause() const {
    return pos_literals.empty() && neg_literals.empty();
  }
  bool tautology() const;
  bool operator==(const PossDisjunction&) const = default;
};

/// One disjunction per clause, in clause order; no merging of equal
/// shapes (that happens during saturation).
std::vector<PossDisjunction> to_clausal(const PossProgram& q);

/// Classical resolvent on `pivot` with all valuation pairs combined by
/// GLB and reduced to the maximal antichain. The pivot must occur
/// positively in one parent and negatively in the other, else NoPivot.
/// The resolvent may be a tautology; callers discard those.
PossDisjunction resolve(const Lattice& l, const PossDisjunction& c1,
                        const PossDisjunction& c2, const std::string& pivot);

struct RefutationResult {
  std::string atom;
  Lattice::Index optimal_value = 0;
  std::vector<std::string> trace;  // resolution steps, if requested
};

/// Adds (∼atom ⊤), saturates, and returns the LUB of all empty-clause
/// valuations. Throws NotEntailed when no refutation exists.
RefutationResult optimal_necessity(const Lattice& l,
                                   const std::vector<PossDisjunction>& clauses,
                                   const std::string& atom,
                                   bool want_trace = false);

/// The full pipeline: for every answer set S of the projection, compute
/// the optimal necessity of each atom of S from the clausal form of the
/// possibilistic reduct. One model per answer set, in projection order.
std::vector<PossAtomSet> poss_answer_sets_resolution(
    const PossProgram& p, std::vector<std::string>* trace = nullptr);

}  // namespace pasp

#endif
