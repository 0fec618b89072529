#pragma once

// Test-only oracles, independent of the library implementation paths they
// check: bounded box search for short vectors, brute-force automorphism
// counting, and naive cubic graph generation with canonical rejection.

#include <algorithm>
#include <set>

#include "hsect/graph/canonical.hpp"
#include "hsect/lattice/lattice.hpp"

namespace hsect::testsupport {

// all x with |x_i| <= box, x.x = norm, x.h = pairing
inline std::vector<IntVec> box_search(const PolarizedLattice& n, const Int& norm, const Int& pairing,
                                      long box) {
    std::vector<IntVec> out;
    std::size_t r = n.rank();
    IntVec x(r, -box);
    for (;;) {
        if (n.norm(x) == norm && n.pair_h(x) == pairing) out.push_back(x);
        std::size_t i = 0;
        while (i < r) {
            x[i] += 1;
            if (x[i] <= box) break;
            x[i] = -box;
            ++i;
        }
        if (i == r) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// |Aut| by enumeration of all vertex permutations
inline long brute_aut(const Multigraph& g) {
    std::vector<std::size_t> perm(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) perm[i] = i;
    long count = 0;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < g.size() && ok; ++i)
            for (std::size_t j = i + 1; j < g.size() && ok; ++j)
                if (g.mult(i, j) != g.mult(perm[i], perm[j])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// all connected cubic simple graphs on n vertices, by edge augmentation with
// canonical-form rejection at every level
inline std::vector<Multigraph> cubic_graphs(std::size_t n) {
    std::vector<Multigraph> level{Multigraph(n)};
    std::set<std::string> seen;
    std::size_t edges_needed = 3 * n / 2;
    for (std::size_t e = 0; e < edges_needed; ++e) {
        std::vector<Multigraph> next;
        std::set<std::string> next_seen;
        for (const Multigraph& g : level) {
            // the lowest-indexed unsaturated vertex must gain an edge
            std::size_t u = 0;
            while (u < n && g.degree(u) == 3) ++u;
            for (std::size_t v = 0; v < n; ++v) {
                if (v == u || g.degree(v) == 3 || g.mult(u, v) > 0) continue;
                Multigraph g2 = g;
                g2.set_mult(u, v, 1);
                std::string key = canonical_key(g2);
                if (next_seen.count(key)) continue;
                next_seen.insert(key);
                next.push_back(std::move(g2));
            }
        }
        level = std::move(next);
    }
    std::vector<Multigraph> out;
    for (Multigraph& g : level)
        if (g.regular(3) && g.connected()) out.push_back(std::move(g));
    return out;
}

}  // namespace hsect::testsupport
