/**
 * The possibilistic reduction P_M.
 *
 * Not the Gelfond-Lifschitz reduct: a clause survives only when its head
 * meets M, its negative body avoids M, and its positive body lies inside
 * M; the surviving clause keeps its necessity, its head is cut down to
 * head ∩ M, and its positive body is kept as the new body. Constraints
 * never survive (their empty head cannot meet M); constraint checking
 * already happened when M was computed as an answer set.
 */

#ifndef PASP_REDUCT_HPP
#define PASP_REDUCT_HPP

#include "pasp/model.hpp"

namespace pasp {

/// Returns a positive possibilistic program. Exact duplicates are
/// collapsed; clauses that differ only in necessity are all kept (each
/// matters to the optimal-value search).
PossProgram poss_reduct(const PossProgram& p, const AtomSet& m);

}  // namespace pasp

#endif
