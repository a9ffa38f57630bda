/**
 * Core data model.
 *
 * Two program representations live here. The classical one (Clause,
 * Program) carries no certainty annotations and feeds the answer-set
 * engine. The possibilistic one (PossClause, PossProgram) annotates each
 * clause with a necessity value from a finite lattice; projecting it strips
 * the annotations.
 *
 * A PossAtomSet maps atoms to certainty values and forms a lattice of its
 * own under ⊑ (domain inclusion with pointwise ≤); pset_meet/pset_join are
 * its meet and join.
 *
 * Atom sets inside clauses are kept sorted and duplicate-free so that
 * structural equality is plain vector equality.
 */

#ifndef PASP_MODEL_HPP
#define PASP_MODEL_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pasp/lattice.hpp"

namespace pasp {

struct LatticeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Atom {
  std::string name;
  // set when this atom is the fresh rename a' standing for the strong
  // negation of some base atom a
  std::optional<std::string> strong_neg_of;

  bool operator==(const Atom&) const = default;
};

using AtomSet = std::vector<std::string>;  // sorted, unique

/// Inserts keeping the set sorted and duplicate-free.
void atomset_insert(AtomSet& set, const std::string& name);
bool atomset_contains(const AtomSet& set, std::string_view name);

struct Clause {
  AtomSet head;      // empty for constraints
  AtomSet pos_body;  // plain body atoms
  AtomSet neg_body;  // atoms under default negation

  bool is_constraint() const { return head.empty(); }
  bool operator==(const Clause&) const = default;
};

struct Program {
  std::vector<Clause> clauses;

  /// All atoms mentioned anywhere, sorted.
  AtomSet signature() const;
  /// Atoms occurring in some head, sorted.
  AtomSet head_atoms() const;
};

struct PossClause {
  Lattice::Index necessity = 0;  // n(r)
  AtomSet head;
  AtomSet pos_body;
  AtomSet neg_body;

  bool is_constraint() const { return head.empty(); }
  bool has_empty_body() const { return pos_body.empty() && neg_body.empty(); }
  Clause project() const { return Clause{head, pos_body, neg_body}; }
  bool operator==(const PossClause&) const = default;
};

struct PossProgram {
  LatticePtr lattice;
  std::vector<PossClause> clauses;
  // every atom of the program, keyed by name; carries the strong-negation
  // pairings collected by the parser
  std::map<std::string, Atom> atoms;

  const std::string& necessity_label(const PossClause& c) const {
    return lattice->label(c.necessity);
  }
};

/// Strips all necessity annotations; clause order is preserved.
Program project(const PossProgram& p);

/// Keeps clauses with n(c) ≥ α (resp. n(c) > α). A clause whose necessity
/// is incomparable with α is dropped by both cuts.
PossProgram alpha_cut(const PossProgram& p, std::string_view alpha);
PossProgram strict_alpha_cut(const PossProgram& p, std::string_view alpha);
PossProgram alpha_cut(const PossProgram& p, Lattice::Index alpha);
PossProgram strict_alpha_cut(const PossProgram& p, Lattice::Index alpha);

/**
 * A set of atoms annotated with certainty values; each atom occurs at most
 * once (enforced structurally by the map). Always tied to a lattice.
 */
class PossAtomSet {
public:
  PossAtomSet() = default;
  explicit PossAtomSet(LatticePtr lattice) : lattice_(std::move(lattice)) {}

  const LatticePtr& lattice() const { return lattice_; }
  const std::map<std::string, Lattice::Index>& entries() const {
    return entries_;
  }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  void set(const std::string& atom, Lattice::Index value) {
    entries_[atom] = value;
  }
  void set(const std::string& atom, std::string_view value_label) {
    entries_[atom] = lattice_->index_of(value_label);
  }
  std::optional<Lattice::Index> value_of(const std::string& atom) const;

  /// The projection S*: just the atoms, sorted.
  AtomSet project() const;

  /// Equality is structural: same lattice order, same atoms, same values
  /// (compared by canonical label, so indices may differ).
  bool operator==(const PossAtomSet& other) const;

private:
  LatticePtr lattice_;
  std::map<std::string, Lattice::Index> entries_;
};

/// ⊓: intersection of domains, values combined by GLB.
PossAtomSet pset_meet(const PossAtomSet& a, const PossAtomSet& b);
/// ⊔: union of domains, shared atoms take the LUB.
PossAtomSet pset_join(const PossAtomSet& a, const PossAtomSet& b);
/// ⊑: domain inclusion and pointwise ≤ on shared atoms.
bool pset_leq(const PossAtomSet& a, const PossAtomSet& b);

/**
 * The ⊑-maximal members of a family. A member is dominated only by another
 * member with the same projection and pointwise greater values; members
 * whose projections differ are never compared (dropping e.g. {(a,2)}
 * because {(a,2),(b,1)} ⊒ it would contradict the defining illustration).
 */
std::vector<PossAtomSet> i_greatest(const std::vector<PossAtomSet>& family);

}  // namespace pasp

#endif
