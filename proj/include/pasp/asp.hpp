/**
 * Classical answer-set engine for ground extended disjunctive programs.
 *
 * Semantics: S is an answer set of P iff S is a minimal model of the
 * reduct P^S (delete every rule whose negative body meets S, strip the
 * remaining default negation). Constraints are head-less rules: a model
 * must falsify their body. Complementary atom pairs are allowed in answer
 * sets; nothing rejects them here.
 *
 * The engine enumerates candidate sets exhaustively over the atoms that
 * occur in rule heads (atoms outside every head can never enter a minimal
 * model), as bitmasks. That is intentional: target programs are desk
 * scale, and keeping the engine self-contained lets it double as the
 * trusted oracle for the possibilistic machinery. A guard refuses
 * signatures too large to enumerate.
 *
 * answer_sets runs the candidate sweep with OpenMP when the space is big
 * enough to pay off; answer_sets_serial is the plain loop kept as the
 * reference implementation. Both return identical, deterministically
 * sorted output.
 */

#ifndef PASP_ASP_HPP
#define PASP_ASP_HPP

#include <stdexcept>

#include "pasp/model.hpp"

namespace pasp {

struct SignatureTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AspOptions {
  std::size_t max_atoms = 24;  // candidate-enumeration guard
  bool parallel = true;        // let answer_sets use OpenMP
};

/// The reduct P^S. Duplicate rules arising from negation stripping are
/// collapsed; rule order is otherwise preserved.
Program gl_reduct(const Program& p, const AtomSet& s);

/// True iff s satisfies every clause of the positive program q and no
/// proper subset of s does. Throws std::invalid_argument if q still
/// contains default negation.
bool is_minimal_model(const Program& q, const AtomSet& s);

/// All answer sets, sorted lexicographically by atom list. An
/// inconsistent program yields an empty collection.
std::vector<AtomSet> answer_sets(const Program& p, const AspOptions& opt = {});
std::vector<AtomSet> answer_sets_serial(const Program& p,
                                        const AspOptions& opt = {});

/// Classical entailment for positive programs: true iff every model of q
/// contains the atom. Exhaustive over the full signature.
bool entails(const Program& q, const std::string& atom,
             const AspOptions& opt = {});

}  // namespace pasp

#endif
