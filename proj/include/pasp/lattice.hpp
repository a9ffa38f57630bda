/**
 * Finite certainty lattices.
 *
 * A lattice is built once from declared elements and order edges, validated
 * eagerly (closure, antisymmetry, unique GLB/LUB for every pair), and is
 * immutable afterwards. All queries are table lookups, so sharing one
 * lattice across concurrent solves is safe.
 *
 * Elements are referred to either by label (as written in the source) or by
 * index (dense, in declaration order). Labels that look like decimal numbers
 * are identified by exact value: "0.50" names the same element as "0.5".
 */

#ifndef PASP_LATTICE_HPP
#define PASP_LATTICE_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pasp {

struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CycleError : LatticeError {
  using LatticeError::LatticeError;
};
struct NotALattice : LatticeError {
  using LatticeError::LatticeError;
};
struct DuplicateElement : LatticeError {
  using LatticeError::LatticeError;
};
struct UnknownElement : LatticeError {
  using LatticeError::LatticeError;
};

class Lattice {
public:
  using Index = std::size_t;

  std::size_t size() const { return labels_.size(); }

  /// Label as first written in the declaration (used for all output).
  const std::string& label(Index i) const { return labels_.at(i); }

  /// Throws UnknownElement if the label names no element.
  Index index_of(std::string_view label) const;
  bool contains(std::string_view label) const;

  Index top() const { return top_; }
  Index bottom() const { return bottom_; }

  bool leq(Index a, Index b) const { return leq_[a * size() + b]; }
  bool strictly_less(Index a, Index b) const { return a != b && leq(a, b); }
  Index glb(Index a, Index b) const { return glb_[a * size() + b]; }
  Index lub(Index a, Index b) const { return lub_[a * size() + b]; }

  /// Folds over a set of elements; empty input returns top (for glb)
  /// or bottom (for lub), the usual complete-lattice convention.
  Index glb(const std::vector<Index>& xs) const;
  Index lub(const std::vector<Index>& xs) const;

  /// Structural equality: same elements (by canonical label) and same order.
  /// Indices may differ between the two lattices.
  bool same_structure(const Lattice& other) const;

  /// Edges of the Hasse diagram (transitive reduction), as index pairs
  /// ordered by (lower, upper) index. Used by the unparser.
  std::vector<std::pair<Index, Index>> hasse_edges() const;

private:
  friend std::shared_ptr<const Lattice> build_lattice(
      const std::vector<std::string>&,
      const std::vector<std::pair<std::string, std::string>>&);

  std::vector<std::string> labels_;   // display spelling, declaration order
  std::vector<std::string> keys_;     // canonical form (decimals normalized)
  std::vector<bool> leq_;             // n*n closure matrix
  std::vector<Index> glb_, lub_;      // n*n meet/join tables
  Index top_ = 0, bottom_ = 0;
};

using LatticePtr = std::shared_ptr<const Lattice>;

/**
 * Validates and builds a lattice.
 *
 * `edges` are declared order relations (a, b) meaning a < b; the stored
 * order is their reflexive-transitive closure. Throws DuplicateElement,
 * UnknownElement (edge endpoint not declared), CycleError (antisymmetry
 * fails) or NotALattice (some pair lacks a unique GLB or LUB).
 */
LatticePtr build_lattice(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& edges);

/// Label-based wrappers over the index queries; throw UnknownElement.
std::string glb(const Lattice& l, const std::vector<std::string>& labels);
std::string lub(const Lattice& l, const std::vector<std::string>& labels);
bool leq(const Lattice& l, std::string_view a, std::string_view b);
bool strictly_less(const Lattice& l, std::string_view a, std::string_view b);

/// Canonical form of a label: decimal literals are normalized ("0.50" ->
/// "0.5", "1.0" -> "1"), anything else is returned unchanged.
std::string canonical_label(std::string_view label);

}  // namespace pasp

#endif
