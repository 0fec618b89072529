#pragma once

#include <map>
#include <optional>

#include "hsect/lattice/lattice.hpp"

namespace hsect {

// Finite quadratic form q : A -> Q/2Z with polar pairing b : A x A -> Q/Z,
// q(x+y) - q(x) - q(y) = 2 b(x,y) mod 2Z. Generators may have any orders > 1.
class FiniteQuadraticForm {
public:
    FiniteQuadraticForm() = default;
    // orders[i] > 1; qv[i] = q(g_i) mod 2Z; bv[i][j] = b(g_i, g_j) mod Z.
    FiniteQuadraticForm(IntVec orders, RatVec qv, std::vector<RatVec> bv);

    std::size_t gens() const { return orders_.size(); }
    const IntVec& orders() const { return orders_; }
    Int group_order() const;
    Int exponent() const;

    // elements are coefficient tuples mod orders
    Rat q_of(const IntVec& x) const;
    Rat b_of(const IntVec& x, const IntVec& y) const;
    Int order_of(const IntVec& x) const;
    IntVec reduce(IntVec x) const;

    // all group elements; throws if the group order exceeds cap
    std::vector<IntVec> all_elements(unsigned long cap = 1u << 22) const;

    FiniteQuadraticForm negated() const;
    static FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);

    // minimal number of generators of the p-part
    int length_at(const Int& p) const;
    // ranks r_k of (Z/p^k)^{r_k} in the p-part, index k >= 1
    std::vector<int> scale_ranks(const Int& p) const;

    struct PrimaryPart;
    std::vector<PrimaryPart> primary_decomposition() const;

private:
    IntVec orders_;
    RatVec q_;
    std::vector<RatVec> b_;
};

struct FiniteQuadraticForm::PrimaryPart {
    Int p;
    FiniteQuadraticForm form;
    std::vector<IntVec> lifts;  // generator lifts in parent coordinates
};

// q and rational generator coordinates in the lattice basis.
struct DiscriminantData {
    FiniteQuadraticForm form;
    std::vector<RatVec> gen_coords;
};

// N*/N with q(x) = x.x mod 2Z; gram must be nondegenerate and even.
DiscriminantData discriminant_form(const IntMat& gram);
inline DiscriminantData discriminant_form(const PolarizedLattice& n) { return discriminant_form(n.gram); }

// --- Gauss sum invariants -------------------------------------------------

// G = sqrt(2)^nu * zeta_8^sigma, or zero. Only for forms on 2-groups.
struct Gauss2 {
    bool zero = false;
    int nu = 0;
    int sigma = 0;  // mod 8
    bool operator==(const Gauss2&) const = default;
};

// Gauss sum of x -> 2^j q(x) over a form on a 2-group, exact.
Gauss2 gauss2(const FiniteQuadraticForm& q2, int j);

// signature mod 8 of a nondegenerate finite quadratic form (Milgram direction)
int signature_mod8(const FiniteQuadraticForm& q);

// exact isomorphism test of finite quadratic forms
bool fqf_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);

// --- odd primary normal form ----------------------------------------------

// Diagonal block <v / p^k>: cyclic of order p^k with q(g) = v / p^k mod 2Z.
struct OddBlock {
    int k;
    Int v;  // prime to p
};

// Orthogonal diagonalization of a form on an odd p-group.
std::vector<OddBlock> diagonalize_odd(const FiniteQuadraticForm& qp, const Int& p);

// --- isotropic subgroups ----------------------------------------------------

struct IsotropicSubgroup {
    std::vector<IntVec> gens;  // in discriminant-form coordinates
    Int order = 1;
};

// All subgroups on which q vanishes identically (including the trivial one).
std::vector<IsotropicSubgroup> isotropic_subgroups(const FiniteQuadraticForm& q);

}  // namespace hsect
