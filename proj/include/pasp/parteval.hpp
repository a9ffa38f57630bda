/**
 * Partial-evaluation engine.
 *
 * The second way to value an answer set: instead of refuting atoms one
 * by one, unfold the positive reduct until it is closed under graded
 * partial evaluation and read the per-atom values off the derived
 * facts. A single unfolding step (g_gppe) replaces a positive body atom
 * B of one clause with the residue of a disjunctive fact containing B,
 * grading the result by the GLB of the two necessities. The operator T
 * adds every single-step unfolding; its fixed point Pi exists because
 * the clause universe over finitely many atoms and lattice values is
 * finite and T only grows the program. Sem_min then assigns each atom
 * the LUB of the necessities of its derived singleton facts.
 *
 * Clauses are deduplicated structurally on (head, body, necessity), so
 * the same shape at two necessities is kept twice and Sem_min's LUB
 * picks the final value. Disjunctive facts never contribute to Sem_min
 * directly, only through further unfolding.
 */

#ifndef PASP_PARTEVAL_HPP
#define PASP_PARTEVAL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "pasp/model.hpp"

namespace pasp {

struct NotApplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// A computed model's projection differs from its answer set. This
/// would contradict the semantics; it is a bug assertion, not a user
/// error.
struct ProjectionMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

/// Unfolds atom b in the positive body of r1 against the fact r2
/// (empty body, b in its head): GLB(n1,n2): head1 ∪ (head2\{b}) ← body1\{b}.
PossClause g_gppe(const Lattice& l, const PossClause& r1,
                  const PossClause& r2, const std::string& b);

/// Q plus every applicable single-step unfolding, deduplicated.
PossProgram t_operator(const PossProgram& q);

/// Iterates t_operator to its least fixed point.
PossProgram pi_fixpoint(const PossProgram& q,
                        std::vector<std::string>* trace = nullptr);

/// Per-atom LUB over the singleton-head empty-body clauses of Q.
PossAtomSet sem_min(const PossProgram& q);

/// The full pipeline: for every answer set S of the projection,
/// sem_min(pi_fixpoint(poss_reduct(P, S))). One model per answer set,
/// in projection order.
std::vector<PossAtomSet> poss_t_answer_sets(
    const PossProgram& p, std::vector<std::string>* trace = nullptr);

}  // namespace pasp

#endif
