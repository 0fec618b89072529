#pragma once

#include <stdexcept>

#include "hsect/graph/dynkin.hpp"
#include "hsect/graph/multigraph.hpp"

namespace hsect {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar (whitespace-insensitive):
//   encoding      := literal | fiber+ intersection*
//   fiber         := ("AA"|"DD"|"A") "[" INT "]" "(" group (";" group)* ")"
//   group         := INT ("," INT)*
//   intersection  := "(" INT "x" INT ")"  (angle brackets also accepted)
//   literal       := "K(4)" | "K(3,3)" | "3K(2)"
// The first fiber is the minimal affine fiber Phi and fixes the section
// count: AA[n] gives n+1 sections (one per cycle vertex, in cyclic order),
// DD[5] gives 8 (two per monovalent vertex a1..a4; groups list a1..a4).
// Elliptic A[m] lists its path vertices in order (ends carry two sections,
// inner vertices one; A[1] is a single vertex carrying three).
Multigraph parse_encoding(const std::string& text);

// Canonical printer: deterministic on isomorphism classes; parse(print(g))
// is isomorphic to g.
std::string print_encoding(const Multigraph& g);

}  // namespace hsect
