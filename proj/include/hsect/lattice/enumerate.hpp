#pragma once

#include "hsect/lattice/lattice.hpp"

namespace hsect {

// The complete finite list {u : u.u = norm, u.h = pairing} on a hyperbolic
// polarized lattice (sigma_+ = 1, norm <= 0). Fincke-Pohst over the coset of
// the negative definite h-perp determined by the pairing; exact arithmetic.
// Output sorted lexicographically. Throws if sigma_+ != 1 or norm > 0.
std::vector<IntVec> vectors_with(const PolarizedLattice& n, const Int& norm, const Int& pairing);

// no exceptional divisor (-2, 0) and no r-isotropic vector (0, r), 1 <= r <= m
bool is_m_admissible(const PolarizedLattice& n, int m);

}  // namespace hsect
