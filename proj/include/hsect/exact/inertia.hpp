#pragma once

#include "hsect/exact/mat.hpp"

namespace hsect {

struct Inertia {
    int sigma_plus = 0;
    int sigma_zero = 0;
    int sigma_minus = 0;

    bool operator==(const Inertia&) const = default;
    bool hyperbolic() const { return sigma_plus == 1; }
    bool elliptic() const { return sigma_plus == 0 && sigma_zero == 0; }
    bool parabolic() const { return sigma_plus == 0 && sigma_zero > 0; }
    int rank() const { return sigma_plus + sigma_minus; }
    int dim() const { return sigma_plus + sigma_zero + sigma_minus; }
};

// Exact signature by rational congruence reduction (Sylvester).
// Throws std::invalid_argument on non-symmetric input.
Inertia inertia(const IntMat& m);

// Independent method: sign changes in the characteristic polynomial
// coefficient sequence (valid for symmetric matrices, all roots real).
Inertia inertia_charpoly(const IntMat& m);

// Characteristic polynomial coefficients of det(xI - m), index k holds the
// coefficient of x^k (Faddeev-LeVerrier, exact integer divisions).
std::vector<Int> char_poly(const IntMat& m);

struct RadicalQuotient {
    std::vector<IntVec> kernel_basis;   // integral basis of the radical
    std::vector<IntVec> complement;     // complement basis, in input coordinates
    IntMat quotient_gram;               // induced nondegenerate form on the complement
};

// Splits a symmetric matrix into its radical and an induced nondegenerate
// quotient form. Throws on non-symmetric input.
RadicalQuotient radical_quotient(const IntMat& m);

}  // namespace hsect
