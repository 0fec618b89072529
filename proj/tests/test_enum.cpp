#include <doctest.h>

#include <random>

#include "hsect/fragment/fano.hpp"
#include "hsect/fragment/encoding.hpp"
#include "support.hpp"

using namespace hsect;

TEST_CASE("vectors_with agrees with the box oracle on small lattices") {
    std::mt19937 rng(59);
    std::uniform_int_distribution<int> d(-3, 3);
    int done = 0;
    while (done < 40) {
        int n = 2 + static_cast<int>(rng() % 4);
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) {
            m(i, i) = 2 * d(rng);
            for (int j = i + 1; j < n; ++j) {
                m(i, j) = d(rng);
                m(j, i) = m(i, j);
            }
        }
        Inertia sig = inertia(m);
        if (sig.sigma_plus != 1 || sig.sigma_zero != 0) continue;
        // a primitive h of positive norm
        IntVec h(n, 0);
        bool found = false;
        for (int a = -2; a <= 2 && !found; ++a)
            for (int b = -2; b <= 2 && !found; ++b) {
                h.assign(n, 0);
                h[0] = a;
                h[1] = b;
                if (pair_with(m, h, h) > 0) found = true;
            }
        if (!found) continue;
        PolarizedLattice lat(m, h);
        for (Int norm : {Int(-2), Int(0)}) {
            for (Int pairing : {Int(0), Int(1), Int(2)}) {
                auto fast = vectors_with(lat, norm, pairing);
                auto slow = testsupport::box_search(lat, norm, pairing, 12);
                // the box may be too small only if the fast list has big coords:
                bool in_box = true;
                for (auto& v : fast)
                    for (auto& c : v)
                        if (abs(c) > 12) in_box = false;
                if (!in_box) continue;
                CHECK(fast == slow);
            }
        }
        ++done;
    }
}

TEST_CASE("Fano graph of K(4) at degree 4 contains the four vertex classes") {
    Multigraph k4 = parse_encoding("K(4)");
    FanoLattice fl = fano_lattice(k4, 4);
    CHECK(fl.lattice.rank() == 4);
    auto verts = vectors_with(fl.lattice, -2, 1);
    for (const IntVec& img : fl.vertex_image)
        CHECK(std::find(verts.begin(), verts.end(), img) != verts.end());
}

TEST_CASE("1-admissibility means no exceptional divisors by definition") {
    Multigraph k4 = parse_encoding("K(4)");
    FanoLattice fl = fano_lattice(k4, 4);
    CHECK(is_m_admissible(fl.lattice, 1));
    CHECK(vectors_with(fl.lattice, -2, 0).empty());
}

TEST_CASE("saturation of K(3,3) at degree 6 cross-checked by box search") {
    Multigraph k33 = parse_encoding("K(3,3)");
    FanoLattice fl = fano_lattice(k33, 6);
    auto fast = vectors_with(fl.lattice, -2, 1);
    auto slow = testsupport::box_search(fl.lattice, -2, 1, 12);
    CHECK(fast == slow);
    // vertices belong to the list
    for (const IntVec& img : fl.vertex_image)
        CHECK(std::find(fast.begin(), fast.end(), img) != fast.end());
}

TEST_CASE("saturate is a fixed point and restores a removed vertex") {
    Multigraph prism = parse_encoding("AA[2](1;2;3) (1x2)(1x3)(2x3)");
    Saturation s1 = saturate(prism, 6);
    Saturation s2 = saturate(s1.fano.graph, 6);
    CHECK(isomorphic(s1.fano.graph, s2.fano.graph));
    // drop one vertex: the saturation contains the missing one
    std::vector<std::size_t> five{0, 1, 2, 3, 4};
    Multigraph removed = prism.induced(five);
    Saturation s3 = saturate(removed, 6);
    CHECK(s3.fano.graph.size() >= 6);
    CHECK(!find_induced(s3.fano.graph, prism).empty());
}
