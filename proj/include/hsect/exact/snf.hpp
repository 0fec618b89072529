#pragma once

#include "hsect/exact/mat.hpp"

namespace hsect {

struct SmithForm {
    IntMat d;  // diagonal, d_i >= 0, d_i | d_{i+1}
    IntMat u;  // unimodular, u * m * v = d
    IntMat v;  // unimodular
};

// Row/column reduction with size-minimizing pivot selection.
SmithForm smith_normal_form(const IntMat& m);

// Integral basis of {x : m x = 0}, one vector per column-kernel dimension,
// saturated (a basis of the kernel as a direct summand of Z^n).
std::vector<IntVec> integer_kernel(const IntMat& m);

// One integral solution of m x = b, if any.
bool solve_integer(const IntMat& m, const IntVec& b, IntVec& x);

// Row-style Hermite normal form of the lattice spanned by the rows;
// returns a matrix whose nonzero rows are a basis (row echelon, positive
// pivots, entries above pivots reduced).
IntMat hnf_rows(const IntMat& m);

Int det(const IntMat& m);

}  // namespace hsect
