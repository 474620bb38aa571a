#pragma once

#include <string>
#include <string_view>

#include "lpa/element.hpp"

namespace lpa {

// Element expression syntax:
//
//   expression := ['+'|'-'] term (('+'|'-') term)*
//   term       := scalar | [scalar '*'] factor ('.' factor)*
//   factor     := atom ['*' | '^*']
//   atom       := vertex | edge | bundle '[' natural ']' | '(' expression ')'
//   scalar     := integer ['/' integer] | integer 'mod' prime
//
// A trailing '*' on an atom is the involution (ghost edge). A bare scalar
// term means that multiple of the unit (sum of all vertices). Adjacent edge
// factors must compose; a vertex factor multiplies like any other element.

/// Parses and normalizes. Throws ParseError with the byte offset of the
/// offending token.
Element parse_element(const GraphPtr& g, Field f, std::string_view text);

/// Parses `3`, `-3/2` or `5 mod 7` in the given field.
Scalar parse_scalar(Field f, std::string_view text);

/// Canonical printing: terms in monomial order, ghost edges marked with a
/// trailing '*'. Re-parses to the same normal form.
std::string format_element(const Element& x);
std::string format_monomial(const Graph& g, const Monomial& m);

}  // namespace lpa
