#pragma once

#include "hsect/lattice/fqf.hpp"

namespace hsect {

struct Extension {
    IsotropicSubgroup kernel;   // in discriminant-form coordinates of the base
    PolarizedLattice lattice;   // the overlattice, own basis
    IntMat basis_in_base;       // rows: overlattice basis * denom, in base coords
    Int denom = 1;              // common denominator of the basis
    Int index = 1;              // [extension : base] = |kernel|
};

// Rational coordinates of a base-lattice vector in the extension basis.
IntVec to_extension_coords(const Extension& e, const IntVec& x_base);

// All finite index even overlattices of n, one per isotropic subgroup of
// discr(n); the trivial extension (n itself) comes first.
std::vector<Extension> finite_index_extensions(const PolarizedLattice& n);

}  // namespace hsect
