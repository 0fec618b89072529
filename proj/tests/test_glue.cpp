#include <doctest.h>

#include "hsect/fragment/encoding.hpp"
#include "hsect/search/analysis.hpp"
#include "hsect/search/glue.hpp"

using namespace hsect;

namespace {

// the figure labeling of the degree-8 cube: edges of fig.h=8 item (3)
Multigraph cube_paper() {
    Multigraph g(8);
    auto e = [&](int a, int b) { g.set_mult(a, b, 1); };
    e(0, 1);
    e(1, 5);
    e(5, 4);
    e(4, 0);
    e(2, 6);
    e(6, 7);
    e(7, 3);
    e(3, 2);
    e(0, 2);
    e(1, 3);
    e(4, 6);
    e(5, 7);
    return g;
}

}  // namespace

TEST_CASE("perfect subgraphs of the cube match the published four classes") {
    Multigraph h3 = cube_paper();
    auto subs = perfect_subgraphs(h3);
    // proper nonempty classes: {0}, {0,2} edge, {0,7} antipodal, {0,1,2,3} face
    // plus the empty set and the whole graph
    std::vector<std::pair<std::size_t, std::size_t>> sizes;  // (|delta|, |complement|)
    for (const auto& ps : subs) sizes.push_back({ps.delta.size(), ps.complement.size()});
    CHECK(std::count(sizes.begin(), sizes.end(), std::make_pair<std::size_t, std::size_t>(1, 4)) == 1);
    CHECK(std::count(sizes.begin(), sizes.end(), std::make_pair<std::size_t, std::size_t>(2, 2)) == 1);
    CHECK(std::count(sizes.begin(), sizes.end(), std::make_pair<std::size_t, std::size_t>(2, 0)) == 1);
    CHECK(std::count(sizes.begin(), sizes.end(), std::make_pair<std::size_t, std::size_t>(4, 0)) == 1);
    CHECK(subs.size() == 6);
}

TEST_CASE("perfect subgraphs of the prism match the published three classes") {
    Multigraph prism = parse_encoding("AA[2](1;2;3) (1x2)(1x3)(2x3)");
    auto subs = perfect_subgraphs(prism);
    std::vector<std::pair<std::size_t, std::size_t>> sizes;
    for (const auto& ps : subs) sizes.push_back({ps.delta.size(), ps.complement.size()});
    CHECK(std::count(sizes.begin(), sizes.end(), std::make_pair<std::size_t, std::size_t>(1, 2)) == 1);
    CHECK(std::count(sizes.begin(), sizes.end(), std::make_pair<std::size_t, std::size_t>(2, 0)) == 1);
    CHECK(std::count(sizes.begin(), sizes.end(), std::make_pair<std::size_t, std::size_t>(3, 0)) == 1);
    CHECK(subs.size() == 5);
}

TEST_CASE("star decomposition") {
    Multigraph k4 = parse_encoding("K(4)");
    StarShape s = star_shape(k4, 0);
    CHECK(s.p == 1);  // the other three vertices form a triangle
    CHECK(s.q == 0);
    Multigraph prism = parse_encoding("AA[2](1;2;3) (1x2)(1x3)(2x3)");
    StarShape sp = star_shape(prism, 0);
    CHECK(sp.p == 0);
    CHECK(sp.q >= 1);
}

TEST_CASE("quartic bound chain") {
    auto rep = quartic_bound_report();
    REQUIRE(rep.size() == 2);
    CHECK(rep[0].bound == 72);
    CHECK(rep[1].bound == 60);
    CHECK(quartic_bound(6, 0).bound == 0);
    CHECK(quartic_star_table().size() == 7);
}

TEST_CASE("hyperelliptic census values") {
    CHECK(hyperelliptic_census(8, 8) ==
          std::vector<Int>{0, 1, 4, 10, 20, 35, 56});
    CHECK(hyperelliptic_census(6, 9) ==
          std::vector<Int>{0, 1, 3, 6, 10, 15, 21, 28, 36});
    CHECK(hyperelliptic_census(4, 12, 12) == std::vector<Int>{144});
    CHECK(hyperelliptic_census(6, 0) == std::vector<Int>{0});
    CHECK(hyperelliptic_census(2, 144) == std::vector<Int>{72});
    CHECK_THROWS(hyperelliptic_census(6, 10));
    CHECK_THROWS(hyperelliptic_census(8, 9));
    CHECK_THROWS(hyperelliptic_census(4, 13, 1));
}
