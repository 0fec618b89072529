#pragma once

#include <optional>

#include "hsect/exact/inertia.hpp"
#include "hsect/exact/snf.hpp"

namespace hsect {

// A nondegenerate even lattice with a distinguished polarization class h,
// h^2 = degree > 0. Callers quotient radicals before constructing one.
struct PolarizedLattice {
    IntMat gram;
    IntVec h;
    Int degree;

    PolarizedLattice() = default;
    PolarizedLattice(IntMat g, IntVec hh);

    std::size_t rank() const { return gram.rows(); }
    Int pair(const IntVec& x, const IntVec& y) const { return pair_with(gram, x, y); }
    Int norm(const IntVec& x) const { return pair_with(gram, x, x); }
    Int pair_h(const IntVec& x) const { return pair_with(gram, x, h); }
};

// Checks h^2 > 0, symmetry, even diagonal, nondegeneracy.
void validate_lattice(const PolarizedLattice& n);

bool is_even(const IntMat& gram);

// Solve a x = b exactly over Q; a square nondegenerate.
RatVec solve_rational(const IntMat& a, const RatVec& b);

}  // namespace hsect
