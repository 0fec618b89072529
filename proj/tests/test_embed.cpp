#include <doctest.h>

#include <random>

#include "hsect/lattice/k3.hpp"

using namespace hsect;

namespace {

IntMat random_even(std::mt19937& rng, int n, int span) {
    for (;;) {
        IntMat m(n, n);
        std::uniform_int_distribution<int> d(-span, span);
        for (int i = 0; i < n; ++i) {
            m(i, i) = 2 * d(rng);
            for (int j = i + 1; j < n; ++j) {
                m(i, j) = d(rng);
                m(j, i) = m(i, j);
            }
        }
        if (det(m) != 0) return m;
    }
}

IntMat direct_sum(const IntMat& a, const IntMat& b) {
    IntMat m(a.rows() + b.rows(), a.rows() + b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j) m(a.rows() + i, a.rows() + j) = b(i, j);
    return m;
}

}  // namespace

TEST_CASE("even lattice existence: soundness on constructed lattices") {
    std::mt19937 rng(31);
    int done = 0;
    while (done < 80) {
        IntMat m = random_even(rng, 1 + static_cast<int>(rng() % 4), 3);
        DiscriminantData dd = discriminant_form(m);
        if (dd.form.group_order() > 1500) continue;
        Inertia sig = inertia(m);
        CHECK(even_lattice_exists(sig.sigma_plus, sig.sigma_minus, dd.form));
        ++done;
    }
}

TEST_CASE("even lattice existence: known negatives") {
    FiniteQuadraticForm trivial;
    // no even unimodular lattice of rank 1 or signature (2,0)
    CHECK(!even_lattice_exists(1, 0, trivial));
    CHECK(!even_lattice_exists(0, 1, trivial));
    CHECK(!even_lattice_exists(2, 0, trivial));
    CHECK(even_lattice_exists(1, 1, trivial));   // U
    CHECK(even_lattice_exists(9, 1, trivial));   // U + E8
    CHECK(even_lattice_exists(0, 8, trivial));   // -E8
    CHECK(!even_lattice_exists(0, 4, trivial));
    // <2> realizes Z/2 with q = 1/2, and nothing of signature (0,1) does
    FiniteQuadraticForm q2({2}, {Rat(1, 2)}, {{Rat(1, 2)}});
    CHECK(even_lattice_exists(1, 0, q2));
    CHECK(!even_lattice_exists(0, 1, q2));
}

TEST_CASE("embeds_in_K3 basics") {
    SUBCASE("U embeds") {
        PolarizedLattice u(IntMat{{0, 1}, {1, 0}}, IntVec{1, 1});
        CHECK(embeds_in_K3(u) == Embed::yes);
    }
    SUBCASE("rank 21 hyperbolic cannot embed") {
        IntMat m(21, 21);
        m(0, 1) = m(1, 0) = 1;
        for (int i = 2; i < 21; ++i) m(i, i) = -2;
        IntVec h(21, 0);
        h[0] = h[1] = 1;
        PolarizedLattice n(m, h);
        CHECK(embeds_in_K3(n) == Embed::no);
    }
    SUBCASE("half-rank shortcut agrees with the complement test near the boundary") {
        // U + k<-2>, rank k+2 up to 11: both paths must say yes
        std::mt19937 rng(41);
        for (int k = 0; k <= 9; ++k) {
            IntMat m(k + 2, k + 2);
            m(0, 1) = m(1, 0) = 1;
            for (int i = 2; i < k + 2; ++i) m(i, i) = -2;
            IntVec h(k + 2, 0);
            h[0] = h[1] = 1;
            PolarizedLattice n(m, h);
            CHECK(embeds_in_K3(n) == Embed::yes);
            // complement route: T of signature (2, 20-rank) with -q exists
            FiniteQuadraticForm qt = discriminant_form(n).form.negated();
            CHECK(even_lattice_exists(2, 20 - (k + 2), qt));
        }
        (void)rng;
    }
}

TEST_CASE("geometric extensions obey the determinant identity") {
    // A prism Fano lattice at degree 6 (built by hand): vertices of the
    // 3-prism with h; quotient is rank 6 already (nondegenerate)
    IntMat m(7, 7);
    auto edge = [&](int a, int b) { m(a, b) = m(b, a) = 1; };
    for (int i = 0; i < 6; ++i) {
        m(i, i) = -2;
        m(i, 6) = m(6, i) = 1;
    }
    edge(0, 1);
    edge(1, 2);
    edge(0, 2);
    edge(3, 4);
    edge(4, 5);
    edge(3, 5);
    edge(0, 3);
    edge(1, 4);
    edge(2, 5);
    m(6, 6) = 6;
    RadicalQuotient rq = radical_quotient(m);
    REQUIRE(rq.quotient_gram.rows() == 6);
    // h image: solve in the quotient basis is covered by fano_lattice elsewhere;
    // here check the identity [N~ : N]^2 |det N~| = |det N| over all extensions
    PolarizedLattice n;
    n.gram = rq.quotient_gram;
    // find h as an integer combination: h = sum of one triangle + ... use any
    // vector of positive norm: the identity does not involve h
    n.h = IntVec(6, 0);
    n.h[0] = 1;
    n.degree = 1;  // placeholder; extensions only use the gram
    Int base_det = abs(det(n.gram));
    for (const Extension& e : finite_index_extensions(n)) {
        CHECK(e.index * e.index * abs(det(e.lattice.gram)) == base_det);
    }
}
