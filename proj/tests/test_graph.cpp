#include <doctest.h>

#include <random>

#include "hsect/fragment/encoding.hpp"
#include "hsect/graph/canonical.hpp"
#include "hsect/graph/dynkin.hpp"
#include "support.hpp"

using namespace hsect;

namespace {

Multigraph petersen() {
    return parse_encoding("AA[4](1;2;3;4;5) (1x3)(1x4)(2x4)(2x5)(3x5)");
}

Multigraph relabel(const Multigraph& g, std::mt19937& rng) {
    std::vector<std::size_t> p(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    Multigraph h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) h.set_mult(p[i], p[j], g.mult(i, j));
    return h;
}

}  // namespace

TEST_CASE("automorphism orders of the named graphs") {
    CHECK(aut_order(parse_encoding("K(4)")) == 24);
    CHECK(aut_order(parse_encoding("K(3,3)")) == 72);
    CHECK(aut_order(petersen()) == 120);
    CHECK(aut_order(parse_encoding("AA[2](1;2;3) (1x2)(1x3)(2x3)")) == 12);
}

TEST_CASE("canonical keys are relabeling-invariant") {
    std::mt19937 rng(67);
    for (const char* enc : {"K(4)", "K(3,3)", "AA[2](1;2;3) (1x2)(1x3)(2x3)",
                            "AA[3](1;2;3;4) (1x2)(1x4)(2x3)(3x4)"}) {
        Multigraph g = parse_encoding(enc);
        std::string key = canonical_key(g);
        for (int t = 0; t < 60; ++t) CHECK(canonical_key(relabel(g, rng)) == key);
    }
}

TEST_CASE("aut order matches brute force on graphs with <= 8 vertices") {
    std::mt19937 rng(71);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 3 + rng() % 5;
        Multigraph g(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng() % 2) g.set_mult(i, j, 1 + static_cast<int>(rng() % 2));
        CHECK(aut_order(g) == testsupport::brute_aut(g));
    }
}

TEST_CASE("girth") {
    CHECK(parse_encoding("AA[2](1;2;3) (1x2)(1x3)(2x3)").girth() == 3);
    CHECK(petersen().girth() == 5);
    Multigraph tree(4);
    tree.set_mult(0, 1, 1);
    tree.set_mult(1, 2, 1);
    tree.set_mult(1, 3, 1);
    CHECK(tree.girth() == 0);  // no cycle
    Multigraph dbl(2);
    dbl.set_mult(0, 1, 2);
    CHECK(dbl.girth() == 2);
}

TEST_CASE("dynkin classification") {
    SUBCASE("triangle is affine A2 with kappa (1,1,1)") {
        Multigraph t(3);
        t.set_mult(0, 1, 1);
        t.set_mult(1, 2, 1);
        t.set_mult(0, 2, 1);
        DynkinClass dc = dynkin_classify(t);
        CHECK(dc.kind == DynkinClass::affine);
        CHECK(dc.label == DynkinLabel{'A', 2, true});
        CHECK(dc.fundamental_cycle == std::vector<Int>{1, 1, 1});
    }
    SUBCASE("4-vertex path is elliptic A4") {
        Multigraph p(4);
        p.set_mult(0, 1, 1);
        p.set_mult(1, 2, 1);
        p.set_mult(2, 3, 1);
        DynkinClass dc = dynkin_classify(p);
        CHECK(dc.kind == DynkinClass::elliptic);
        CHECK(dc.label == DynkinLabel{'A', 4, false});
    }
    SUBCASE("4-cycle is affine A3") {
        Multigraph c(4);
        for (int i = 0; i < 4; ++i) c.set_mult(i, (i + 1) % 4, 1);
        DynkinClass dc = dynkin_classify(c);
        CHECK(dc.kind == DynkinClass::affine);
        CHECK(dc.label == DynkinLabel{'A', 3, true});
        CHECK(dc.fundamental_cycle == std::vector<Int>{1, 1, 1, 1});
    }
    SUBCASE("D~5") {
        Multigraph d = affine_diagram(DynkinLabel{'D', 5, true});
        DynkinClass dc = dynkin_classify(d);
        CHECK(dc.kind == DynkinClass::affine);
        CHECK(dc.label == DynkinLabel{'D', 5, true});
        // kappa: leaves 1, centers 2
        Int sum = 0;
        for (const Int& c : dc.fundamental_cycle) sum += c;
        CHECK(sum == 8);
    }
    SUBCASE("affine matches the parabolic inertia") {
        for (DynkinLabel l : {DynkinLabel{'A', 4, true}, DynkinLabel{'D', 6, true}, DynkinLabel{'E', 7, true}}) {
            Multigraph g = affine_diagram(l);
            IntMat gram(g.size(), g.size());
            for (std::size_t i = 0; i < g.size(); ++i) {
                gram(i, i) = -2;
                for (std::size_t j = 0; j < g.size(); ++j)
                    if (i != j) gram(i, j) = g.mult(i, j);
            }
            Inertia sig = inertia(gram);
            CHECK(sig.sigma_plus == 0);
            CHECK(sig.sigma_zero == 1);
        }
    }
}

TEST_CASE("phi taxonomy of the prism") {
    Multigraph prism = parse_encoding("AA[2](1;2;3) (1x2)(1x3)(2x3)");
    PhiTaxonomy tax = phi_taxonomy(prism);
    CHECK(tax.phi_label == DynkinLabel{'A', 2, true});
    CHECK(tax.fibers.size() == 1);  // only Phi: the other triangle meets Phi
    CHECK(tax.sections.size() == 3);
    // the sections are pairwise adjacent
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) CHECK(prism.mult(tax.sections[i], tax.sections[j]) == 1);
}

TEST_CASE("phi taxonomy of the degree-8 H1: A~2 plus two A1 fibers") {
    Multigraph h1 = parse_encoding("AA[2](1;2;3) A[1](1,2,3) A[1](1,2,3)");
    PhiTaxonomy tax = phi_taxonomy(h1);
    CHECK(tax.phi_label == DynkinLabel{'A', 2, true});
    CHECK(tax.fibers.size() == 3);
    CHECK(tax.sections.size() == 3);
}
