#pragma once

// Right application computed directly on decreasing polynomials.
//
// For decreasing P1, P2 the canonical form of (P1 P2) is obtained by raising
// every degree of P2 (giving B P2), composing P1 o (B P2) back into
// decreasing order, then dropping the trailing degree-0 units and lowering
// every remaining degree by one.

#include "brho/degree_seq.hpp"

namespace brho {

/// Every degree plus one: the canonical form of B P.
DegreeSeq raise(const DegreeSeq& s);

/// Every degree minus one. Throws std::invalid_argument if min degree is 0.
DegreeSeq lower(const DegreeSeq& s);

/// Decreasing form of s1 ++ s2. Each run of s2 is inserted from the right
/// of s1 as a block: a unit passing a run of r smaller units gains r.
DegreeSeq compose_decreasing(const DegreeSeq& s1, const DegreeSeq& s2);

/// Removes trailing zero degrees, then lowers the rest. Throws AllZero.
DegreeSeq strip_and_lower(const DegreeSeq& s);

/// Canonical form of the application (P1 P2).
DegreeSeq apply_poly(const DegreeSeq& s1, const DegreeSeq& s2);

}  // namespace brho
