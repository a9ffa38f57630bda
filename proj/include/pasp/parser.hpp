/**
 * Textual program format.
 *
 * A program file declares one lattice and then clauses:
 *
 *   % a six-element certainty scale
 *   lattice {
 *     elements: open, supported, plausible, probable, confirmed, certain;
 *     order: open < supported; supported < plausible;
 *       supported < probable; plausible < confirmed;
 *       probable < confirmed; confirmed < certain;
 *   }
 *
 *   probable: a | b :- c, not d.   % disjunctive rule
 *   certain: c.                    % fact
 *   :- a, b.                       % constraint (necessity is the top)
 *
 * Totally ordered scales can use the shorthand
 *
 *   lattice chain { 0, 0.1, 0.2, 0.3 }
 *
 * which orders elements by position. A missing necessity label defaults to
 * the top of the lattice; an explicit label on a constraint must BE the
 * top. Strong negation is written `-a` and is parsed away immediately: the
 * clause stores a fresh atom `a'` and the program records the pairing. No
 * complementary-pair constraints are added on behalf of the user.
 *
 * Predicate-looking atoms such as `cs(stable,0)` are tolerated but opaque:
 * the whole spelling is one flat atom name. Comments run from `%` to end
 * of line.
 */

#ifndef PASP_PARSER_HPP
#define PASP_PARSER_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "pasp/model.hpp"

namespace pasp {

struct SourceLocation {
  std::size_t line = 0;
  std::size_t col = 0;
};

struct ParseError : std::runtime_error {
  SourceLocation where;
  ParseError(const std::string& msg, SourceLocation loc);
};

struct SyntaxError : ParseError {
  using ParseError::ParseError;
};
/// Necessity label that is not a lattice element.
struct UnknownLabel : ParseError {
  using ParseError::ParseError;
};
/// Constraints carry the top of the lattice; any other label is an error.
struct NonTopConstraintLabel : ParseError {
  using ParseError::ParseError;
};
/// A clause with no head and no body.
struct EmptyRule : ParseError {
  using ParseError::ParseError;
};

PossProgram parse(std::string_view text);
PossProgram parse_file(const std::string& path);

/// Deterministic source text; parse(unparse(p)) is structurally equal to p.
std::string unparse(const PossProgram& p);

/// How an atom is written in rules: `-a` for strong-negation renames,
/// the plain name otherwise.
std::string display_atom(const PossProgram& p, const std::string& name);

/// Structural program equality: same lattice order, same clauses (necessity
/// compared by canonical label), same strong-negation pairings.
bool same_program(const PossProgram& a, const PossProgram& b);

}  // namespace pasp

#endif
