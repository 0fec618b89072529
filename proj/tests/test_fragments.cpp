#include <doctest.h>

#include "hsect/fragment/fragments.hpp"
#include "hsect/fragment/encoding.hpp"
#include "support.hpp"

using namespace hsect;

TEST_CASE("fragment catalogues at low degrees") {
    SUBCASE("degree 2: the 3-fold double line") {
        const auto& cat = enumerate_fragments(2);
        REQUIRE(cat.size() == 1);
        CHECK(cat[0].graph.mult(0, 1) == 3);
        CHECK(cat[0].rank == 2);
    }
    SUBCASE("degree 4: K(4) only") {
        const auto& cat = enumerate_fragments(4);
        REQUIRE(cat.size() == 1);
        CHECK(cat[0].key == canonical_key(parse_encoding("K(4)")));
        CHECK(cat[0].rank == 4);
        CHECK(cat[0].girth == 3);
        CHECK(cat[0].aut == 24);
    }
    SUBCASE("degree 6: prism and K(3,3)") {
        const auto& cat = enumerate_fragments(6);
        REQUIRE(cat.size() == 2);
        CHECK(cat[0].rank == 6);
        CHECK(cat[0].girth == 3);
        CHECK(cat[0].aut == 12);
        CHECK(cat[1].girth == 4);
        CHECK(cat[1].aut == 72);
        CHECK(cat[1].key == canonical_key(parse_encoding("K(3,3)")));
    }
    SUBCASE("degree 8: the three published fragments") {
        const auto& cat = enumerate_fragments(8);
        REQUIRE(cat.size() == 3);
        CHECK(cat[0].aut == 12);
        CHECK(cat[1].aut == 16);
        CHECK(cat[2].aut == 48);
        CHECK(cat[0].rank == 8);
        CHECK(cat[1].rank == 8);
        CHECK(cat[2].rank == 8);
    }
}

TEST_CASE("brute-force oracle agrees at degrees 4, 6, 8") {
    for (long d : {4L, 6L, 8L}) {
        auto all = testsupport::cubic_graphs(static_cast<std::size_t>(d));
        std::set<std::string> oracle;
        for (const Multigraph& g : all)
            if (fragment_check(g, d)) oracle.insert(canonical_key(g));
        std::set<std::string> mine;
        for (const HFragment& f : enumerate_fragments(d)) mine.insert(f.key);
        CHECK(oracle == mine);
    }
}

TEST_CASE("H3 at degree 8 fails nothing while H1 has a 3-isotropic vector") {
    const auto& cat = enumerate_fragments(8);
    FanoLattice h1 = fano_lattice(cat[0].graph, 8);  // (8,3,12)
    FanoLattice h3 = fano_lattice(cat[2].graph, 8);  // (8,4,48)
    CHECK(is_m_admissible(h1.lattice, 2));
    CHECK(!is_m_admissible(h1.lattice, 3));
    CHECK(is_m_admissible(h3.lattice, 2));
}

TEST_CASE("h-part of a fragment contains it") {
    const auto& cat = enumerate_fragments(8);
    auto patterns = fragment_graphs(8);
    HPart hp = h_part(cat[1].graph, 8, patterns);
    CHECK(hp.graph.size() >= 8);
    CHECK(!find_induced(hp.graph, cat[1].graph).empty());
}
