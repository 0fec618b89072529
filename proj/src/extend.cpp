#include <algorithm>
#include <stdexcept>

#include "hsect/lattice/extend.hpp"

namespace hsect {

IntVec to_extension_coords(const Extension& e, const IntVec& x_base) {
    // solve y * (B/denom) = x  =>  (B^T) y' = denom * x with y = y'
    std::size_t n = x_base.size();
    RatVec rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = Rat(e.denom * x_base[i]);
    RatVec y = solve_rational(e.basis_in_base.transpose(), rhs);
    IntVec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (y[i].get_den() != 1) throw std::runtime_error("to_extension_coords: vector not in extension");
        out[i] = y[i].get_num();
    }
    return out;
}

std::vector<Extension> finite_index_extensions(const PolarizedLattice& n) {
    DiscriminantData dd = discriminant_form(n);
    std::vector<IsotropicSubgroup> subs = isotropic_subgroups(dd.form);
    // trivial kernel first, then by increasing order
    std::stable_sort(subs.begin(), subs.end(),
                     [](const IsotropicSubgroup& a, const IsotropicSubgroup& b) { return a.order < b.order; });

    std::size_t r = n.rank();
    std::vector<Extension> out;
    for (const IsotropicSubgroup& sg : subs) {
        Extension e;
        e.kernel = sg;
        e.index = sg.order;
        // denominators of the adjoined vectors
        Int denom = 1;
        std::vector<RatVec> added;
        for (const IntVec& g : sg.gens) {
            RatVec v(r, Rat(0));
            for (std::size_t i = 0; i < dd.gen_coords.size(); ++i)
                for (std::size_t k = 0; k < r; ++k) v[k] += Rat(g[i]) * dd.gen_coords[i][k];
            for (const Rat& x : v) denom = lcm(denom, x.get_den());
            added.push_back(std::move(v));
        }
        // HNF of denom * (base basis + added vectors)
        IntMat gen(r + added.size(), r);
        for (std::size_t i = 0; i < r; ++i) gen(i, i) = denom;
        for (std::size_t i = 0; i < added.size(); ++i)
            for (std::size_t k = 0; k < r; ++k) {
                Rat v = added[i][k] * Rat(denom);
                gen(r + i, k) = v.get_num();  // integral by construction
            }
        IntMat h = hnf_rows(gen);
        IntMat basis(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < r; ++k) basis(i, k) = h(i, k);
        // gram' = (B/denom) G (B/denom)^T
        IntMat bg = basis * n.gram * basis.transpose();
        IntMat gram(r, r);
        Int d2 = denom * denom;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < r; ++k) {
                if (mod_floor(bg(i, k), d2) != 0)
                    throw std::runtime_error("finite_index_extensions: non-integral overlattice gram");
                gram(i, k) = bg(i, k) / d2;
            }
        if (!is_even(gram)) throw std::runtime_error("finite_index_extensions: overlattice not even");
        e.basis_in_base = basis;
        e.denom = denom;
        e.lattice.gram = gram;
        e.lattice.degree = n.degree;
        e.lattice.h = to_extension_coords(e, n.h);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace hsect
