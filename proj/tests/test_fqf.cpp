#include <doctest.h>

#include <random>

#include "hsect/lattice/fqf.hpp"

using namespace hsect;

namespace {

IntMat u_lattice() { return IntMat{{0, 1}, {1, 0}}; }

// random small even nondegenerate gram
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

}  // namespace

TEST_CASE("discriminant form basics") {
    SUBCASE("unimodular U is trivial") {
        CHECK(discriminant_form(u_lattice()).form.gens() == 0);
    }
    SUBCASE("<-2> gives Z/2 with q = -1/2") {
        DiscriminantData dd = discriminant_form(IntMat{{-2}});
        REQUIRE(dd.form.gens() == 1);
        CHECK(dd.form.orders()[0] == 2);
        CHECK(dd.form.q_of(IntVec{1}) == Rat(3, 2));  // -1/2 mod 2Z
    }
    SUBCASE("A2 gram gives Z/3 with q = -2/3 on a generator") {
        DiscriminantData dd = discriminant_form(IntMat{{-2, 1}, {1, -2}});
        REQUIRE(dd.form.gens() == 1);
        CHECK(dd.form.orders()[0] == 3);
        Rat q = dd.form.q_of(IntVec{1});
        // -2/3 mod 2Z is 4/3; the other generator gives the same class
        CHECK((q == Rat(4, 3)));
    }
    SUBCASE("group order equals |det|") {
        std::mt19937 rng(5);
        for (int t = 0; t < 50; ++t) {
            IntMat m = random_even(rng, 1 + static_cast<int>(rng() % 4), 3);
            CHECK(discriminant_form(m).form.group_order() == abs(det(m)));
        }
    }
}

TEST_CASE("Milgram: signature of the discriminant form matches the lattice") {
    std::mt19937 rng(17);
    int done = 0;
    while (done < 120) {
        IntMat m = random_even(rng, 1 + static_cast<int>(rng() % 4), 4);
        Inertia sig = inertia(m);
        DiscriminantData dd = discriminant_form(m);
        if (dd.form.group_order() > 4000) continue;
        int expect = ((sig.sigma_plus - sig.sigma_minus) % 8 + 8) % 8;
        CHECK(signature_mod8(dd.form) == expect);
        ++done;
    }
}

TEST_CASE("gauss2 on elementary blocks") {
    // <1/2> on Z/2: sigma = 1; <3/2>: sigma = 7
    FiniteQuadraticForm a({2}, {Rat(1, 2)}, {{Rat(1, 2)}});
    CHECK(gauss2(a, 0) == Gauss2{false, 1, 1});
    FiniteQuadraticForm b({2}, {Rat(3, 2)}, {{Rat(1, 2)}});
    CHECK(gauss2(b, 0) == Gauss2{false, 1, 7});
    // u_1: sigma = 0, v_1: sigma = 4
    FiniteQuadraticForm u({2, 2}, {Rat(0), Rat(0)}, {{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(0)}});
    CHECK(gauss2(u, 0) == Gauss2{false, 2, 0});
    FiniteQuadraticForm v({2, 2}, {Rat(1), Rat(1)}, {{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(0)}});
    CHECK(gauss2(v, 0) == Gauss2{false, 2, 4});
    // scaled sum 2^j q kills the form on (Z/2)^2
    CHECK(gauss2(v, 1).zero == false);
    CHECK(gauss2(v, 1).sigma == 0);
}

TEST_CASE("odd diagonalization recovers the group") {
    std::mt19937 rng(23);
    int done = 0;
    while (done < 60) {
        IntMat m = random_even(rng, 2 + static_cast<int>(rng() % 3), 3);
        DiscriminantData dd = discriminant_form(m);
        if (dd.form.group_order() > 2000) continue;
        for (const auto& part : dd.form.primary_decomposition()) {
            if (part.p == 2) continue;
            auto blocks = diagonalize_odd(part.form, part.p);
            Int tot = 1;
            for (const OddBlock& b : blocks) tot *= pow_int(part.p, b.k);
            CHECK(tot == part.form.group_order());
        }
        ++done;
    }
}

TEST_CASE("fqf isomorphism distinguishes u_1 from <1/2>+<3/2>") {
    FiniteQuadraticForm u({2, 2}, {Rat(0), Rat(0)}, {{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(0)}});
    FiniteQuadraticForm mixed({2, 2}, {Rat(1, 2), Rat(3, 2)}, {{Rat(1, 2), Rat(0)}, {Rat(0), Rat(1, 2)}});
    CHECK(!fqf_isomorphic(u, mixed));
    CHECK(fqf_isomorphic(u, u));
    // direct sums commute
    FiniteQuadraticForm s1 = FiniteQuadraticForm::direct_sum(u, mixed);
    FiniteQuadraticForm s2 = FiniteQuadraticForm::direct_sum(mixed, u);
    CHECK(fqf_isomorphic(s1, s2));
}

TEST_CASE("isotropic subgroups") {
    SUBCASE("unimodular lattice has only the trivial kernel") {
        auto subs = isotropic_subgroups(discriminant_form(u_lattice()).form);
        CHECK(subs.size() == 1);
        CHECK(subs[0].order == 1);
    }
    SUBCASE("U(2) has nontrivial isotropic subgroups") {
        // U scaled by 2: discriminant u_1 on (Z/2)^2, isotropic elements e1, e2
        IntMat u2{{0, 2}, {2, 0}};
        auto subs = isotropic_subgroups(discriminant_form(u2).form);
        // {0}, <e1>, <e2>  (e1+e2 has q = 2b = 1)
        CHECK(subs.size() == 3);
    }
}
