#include <algorithm>
#include <set>
#include <stdexcept>

#include "hsect/search/analysis.hpp"

namespace hsect {

std::vector<FragmentOccurrence> bouquet_at(const Multigraph& g, std::size_t line,
                                           const std::vector<Multigraph>& catalogue) {
    std::vector<FragmentOccurrence> out;
    for (auto& occ : find_fragments(g, catalogue)) {
        if (std::find(occ.vertices.begin(), occ.vertices.end(), line) != occ.vertices.end())
            out.push_back(occ);
    }
    return out;
}

long multiplicity_at(const Multigraph& g, std::size_t line, const std::vector<Multigraph>& catalogue) {
    return static_cast<long>(bouquet_at(g, line, catalogue).size());
}

std::vector<DynkinClass> star_decomposition(const Multigraph& g, std::size_t line) {
    std::vector<std::size_t> nb = g.neighbors(line);
    Multigraph star = g.induced(nb);
    std::vector<DynkinClass> out;
    for (auto& comp : star.components()) out.push_back(dynkin_classify(star.induced(comp)));
    return out;
}

StarShape star_shape(const Multigraph& g, std::size_t line) {
    StarShape s;
    for (const DynkinClass& dc : star_decomposition(g, line)) {
        if (dc.kind == DynkinClass::affine && dc.label == DynkinLabel{'A', 2, true})
            ++s.p;
        else if (dc.kind == DynkinClass::elliptic && dc.label == DynkinLabel{'A', 1, false})
            ++s.q;
        else
            s.other = true;
    }
    return s;
}

QuarticBound quartic_bound(long mult_cap, long fn_cap) {
    return {mult_cap, fn_cap, mult_cap * fn_cap / 4};
}

std::vector<QuarticBound> quartic_bound_report() {
    // star table caps the bouquet multiplicity at 6; refining to 5 after the
    // six-fragment-bouquet search gives the second line
    return {quartic_bound(6, 48), quartic_bound(5, 48)};
}

const std::vector<int>& quartic_star_table() {
    static const std::vector<int> qmax = {12, 10, 9, 7, 6, 3, 2};  // p = 0..6
    return qmax;
}

std::vector<Int> hyperelliptic_census(const Int& degree, long n1, long n2) {
    long twod = to_long(degree);
    auto binom = [](long m, long k) {
        Int b;
        if (k < 0 || k > m) return Int(0);
        mpz_bin_uiui(b.get_mpz_t(), m, k);
        return b;
    };
    std::vector<Int> out;
    if (twod == 2) {
        if (n1 < 0 || n1 % 2 != 0) throw std::invalid_argument("hyperelliptic: |Fn| must be even");
        out.push_back(Int(n1 / 2));
        return out;
    }
    if (twod == 4) {
        if (n2 < 0) throw std::invalid_argument("hyperelliptic: degree 4 takes (n1, n2)");
        if (n1 < 0 || n1 > 12 || n2 > 12) throw std::invalid_argument("hyperelliptic: n_i <= 12");
        out.push_back(Int(n1) * Int(n2));
        return out;
    }
    if (twod == 6 || twod == 8) {
        long nmax = (twod == 6) ? 9 : 8;
        if (n1 < 0 || n1 > nmax)
            throw std::invalid_argument("hyperelliptic: n out of range (n <= " + std::to_string(nmax) +
                                        " with both lines present)");
        long d = twod / 2;
        std::set<Int> vals;
        for (long m = 0; m <= n1; ++m) vals.insert(binom(m, d - 1));
        out.assign(vals.begin(), vals.end());
        return out;
    }
    throw std::invalid_argument("hyperelliptic: degree must be 2, 4, 6 or 8");
}

Multigraph hyperelliptic_model(const Int& degree, long n, bool with_lines) {
    long twod = to_long(degree);
    if (twod == 2) {
        Multigraph g(2);
        g.set_mult(0, 1, 3);
        return g;
    }
    if (twod == 4) {
        // n pairs in each ruling is a separate model; here: the h-fragment
        // (two pairs, matched singly)
        Multigraph g(4);
        g.set_mult(0, 1, 2);
        g.set_mult(2, 3, 2);
        g.set_mult(0, 2, 1);
        g.set_mult(1, 3, 1);
        return g;
    }
    if (twod != 6 && twod != 8) throw std::invalid_argument("hyperelliptic_model: degree 2..8");
    // ell1, ell2 (if present) then n pairs m_i1, m_i2
    std::size_t base = with_lines ? 2 : 0;
    Multigraph g(base + 2 * n);
    if (with_lines && twod == 6) g.set_mult(0, 1, 1);  // ell1.ell2 forced by 3-regularity of the fragment
    for (long i = 0; i < n; ++i) {
        std::size_t a = base + 2 * i, b = base + 2 * i + 1;
        g.set_mult(a, b, 2);
        if (with_lines) {
            g.set_mult(a, 0, 1);
            g.set_mult(b, 1, 1);
        }
    }
    return g;
}

}  // namespace hsect
