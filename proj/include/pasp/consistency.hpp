/**
 * Inconsistency analytics.
 *
 * Two distinct notions live here. A set of valued atoms is inconsistent
 * when it contains an atom together with its strong-negation rename;
 * its inconsistency degree is the GLB of the cut levels at which the
 * conflict disappears, and that degree induces a preference between
 * models (lower degree preferred, consistent models first). A program
 * is inconsistent when it has no possibilistic answer set at all; its
 * consistency-cut degree is the GLB of the levels whose strict cut is
 * consistent again, and repair solves that strict cut.
 *
 * Cut semantics deserve a note. For set degrees the cut retains entries
 * whose value is not strictly below the level, so incomparable values
 * survive; the literal reading (keep values >= level) coincides with
 * this on total orders but gives different answers on partial orders,
 * and is available as ValueCut::keep_geq for comparison. For program
 * degrees the cut is strict (necessity > level). Both choices follow
 * the worked behavior of the definitions on their intended examples.
 */

#ifndef PASP_CONSISTENCY_HPP
#define PASP_CONSISTENCY_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pasp/model.hpp"

namespace pasp {

enum class ValueCut { keep_not_below, keep_geq };
enum class Preference { first, second, neither };

/// Strong-negation rename -> base atom, read off the program's atom table.
using RenamePairs = std::map<std::string, std::string>;

RenamePairs rename_pairs(const PossProgram& p);

/// True when no atom occurs together with its rename.
bool consistent_set(const AtomSet& s, const RenamePairs& pairs);

/// Bottom for consistent sets; otherwise the GLB of the cut levels
/// whose cut of S is consistent (top when only no level works).
Lattice::Index incons_degree(const PossAtomSet& s, const RenamePairs& pairs,
                             ValueCut cut = ValueCut::keep_not_below);

/// Strict comparison of inconsistency degrees; equal or incomparable
/// degrees prefer neither.
Preference more_consistent(const PossAtomSet& m1, const PossAtomSet& m2,
                           const RenamePairs& pairs);

/// Bottom for programs with at least one possibilistic answer set;
/// otherwise the GLB of the levels whose strict cut has one.
Lattice::Index cons_cut_degree(const PossProgram& p);

/// The program-inconsistency degree coincides with cons_cut_degree;
/// kept as one implementation with two names.
Lattice::Index inc_program_degree(const PossProgram& p);

struct RepairResult {
  PossProgram program;
  std::vector<PossAtomSet> models;
  Lattice::Index cut_degree = 0;
};

/// Identity on consistent programs; otherwise the strict cut at
/// cons_cut_degree together with its possibilistic answer sets.
RepairResult repair(const PossProgram& p);

struct ConsistencyReport {
  bool program_consistent = false;
  Lattice::Index cons_cut_degree = 0;
  std::vector<PossAtomSet> models;
  std::vector<Lattice::Index> per_model_degrees;  // parallel to models
  std::vector<std::size_t> preferred_models;      // degree-minimal, sorted
  // Set when even the most aggressive nonempty cut stays inconsistent,
  // so only the trivial empty subprogram is left.
  bool irreparable = false;
};

ConsistencyReport analyze(const PossProgram& p);

}  // namespace pasp

#endif
