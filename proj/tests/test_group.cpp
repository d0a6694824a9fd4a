#include <doctest.h>

#include <random>

#include "hat/group.hpp"

using namespace hat;

namespace {
Permutation cyc(const std::string& s, std::uint32_t d) { return parse_cycle_string(s, d); }
}

TEST_CASE("orders of small groups") {
    CHECK(PermutationGroup({cyc("(1 2 3)", 3), cyc("(1 2)", 3)}).order() == 6);
    CHECK(PermutationGroup({cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)}).order() == 4);
    CHECK(PermutationGroup({cyc("(1 2 3 4)", 4)}).order() == 4);
    CHECK(PermutationGroup::trivial(5).order() == 1);
}

TEST_CASE("A8 from the two-generator set") {
    PermutationGroup A8({cyc("(1 2 3)", 8), cyc("(2 3 4 5 6 7 8)", 8)});
    CHECK(A8.order() == 20160);
    CHECK(A8.contains(cyc("(1 4 5)", 8)));
    CHECK_FALSE(A8.contains(cyc("(1 2)", 8)));
    CHECK(A8.point_stabilizer(0).order() == 2520);
}

TEST_CASE("chain order and membership agree with exhaustive enumeration") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        std::uint32_t d = 3 + rng() % 5;  // degrees 3..7
        std::vector<Permutation> gens;
        for (int k = 0; k < 2; ++k) {
            std::vector<std::uint32_t> img(d);
            for (std::uint32_t i = 0; i < d; ++i) img[i] = i;
            std::shuffle(img.begin(), img.end(), rng);
            gens.emplace_back(std::move(img));
        }
        PermutationGroup G(gens);
        ElementSet all = ElementSet::closure(gens);
        CHECK(G.order() == all.size());
        for (const auto& e : all.elements()) CHECK(G.contains(e));
        // and some non-members
        for (int k = 0; k < 5; ++k) {
            std::vector<std::uint32_t> img(d);
            for (std::uint32_t i = 0; i < d; ++i) img[i] = i;
            std::shuffle(img.begin(), img.end(), rng);
            Permutation p(std::move(img));
            CHECK(G.contains(p) == all.contains(p));
        }
    }
}

TEST_CASE("orbits") {
    PermutationGroup G({cyc("(1 2 3)", 4)});
    auto o = G.orbit(0);
    CHECK(o == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(G.orbit(3) == std::vector<std::uint32_t>{3});
    CHECK(G.orbits().size() == 2);
    CHECK(PermutationGroup({cyc("(1 2)(3 4)", 4)}).orbit(2) == std::vector<std::uint32_t>{2, 3});
}

TEST_CASE("transitivity flags") {
    PermutationGroup S3({cyc("(1 2 3)", 3), cyc("(1 2)", 3)});
    CHECK(S3.is_transitive());
    CHECK_FALSE(S3.is_semiregular());
    CHECK_FALSE(S3.is_regular());

    PermutationGroup C3on4({cyc("(1 2 3)", 4)});
    CHECK_FALSE(C3on4.is_transitive());
    CHECK_FALSE(C3on4.is_semiregular());  // point 4 is fixed

    PermutationGroup Z4({cyc("(1 2 3 4)", 4)});
    CHECK(Z4.is_regular());
}

TEST_CASE("orbit-stabilizer relation") {
    PermutationGroup G({cyc("(1 2 3 4 5)", 6), cyc("(1 2)", 6)});
    for (std::uint32_t p = 0; p < 6; ++p)
        CHECK(G.order() == G.orbit(p).size() * G.point_stabilizer(p).order());
}

TEST_CASE("element enumeration") {
    PermutationGroup K({cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)});
    CHECK(K.enumerate_elements().size() == 4);
    PermutationGroup A8({cyc("(1 2 3)", 8), cyc("(2 3 4 5 6 7 8)", 8)});
    CHECK_THROWS_AS(A8.enumerate_elements(10000), OverCapError);
}

TEST_CASE("normal closures in S3") {
    PermutationGroup S3({cyc("(1 2 3)", 3), cyc("(1 2)", 3)});
    CHECK(normal_closure(S3, {cyc("(1 2 3)", 3)}).order() == 3);
    CHECK(normal_closure(S3, {cyc("(1 2)", 3)}).order() == 6);
    CHECK(is_normal(S3, PermutationGroup({cyc("(1 2 3)", 3)})));
    CHECK_FALSE(is_normal(S3, PermutationGroup({cyc("(1 2)", 3)})));
}

TEST_CASE("derived series and solvability") {
    PermutationGroup S3({cyc("(1 2 3)", 3), cyc("(1 2)", 3)});
    CHECK(derived_subgroup(S3).order() == 3);
    CHECK(is_solvable(S3));
    PermutationGroup A5({cyc("(1 2 3)", 5), cyc("(1 2 3 4 5)", 5)});
    CHECK(A5.order() == 60);
    CHECK_FALSE(is_solvable(A5));
    CHECK(is_simple(A5));
    CHECK_FALSE(is_simple(S3));
}

TEST_CASE("core computation") {
    PermutationGroup S3({cyc("(1 2 3)", 3), cyc("(1 2)", 3)});
    ElementSet H = ElementSet::closure({cyc("(1 2)", 3)});
    CHECK(core_of(H, S3).size() == 1);
    ElementSet A3 = ElementSet::closure({cyc("(1 2 3)", 3)});
    CHECK(core_of(A3, S3) == A3);
}

TEST_CASE("core equals the kernel of the coset action") {
    // S4 with H = D8 (Sylow 2): core = Klein four-group
    PermutationGroup S4({cyc("(1 2 3 4)", 4), cyc("(1 2)", 4)});
    ElementSet H = ElementSet::closure({cyc("(1 2 3 4)", 4), cyc("(1 3)", 4)});
    CHECK(H.size() == 8);
    ElementSet core = core_of(H, S4);
    CHECK(core.size() == 4);
    // kernel cross-check: k fixes every coset (Hxk = Hx ⟺ xkx⁻¹ ∈ H),
    // and conversely every kernel element lies in the core
    ElementSet all = S4.enumerate_elements();
    for (const auto& k : all.elements()) {
        bool in_kernel = true;
        for (const auto& x : all.elements())
            if (!H.contains(compose(compose(x, k), inverse(x)))) {
                in_kernel = false;
                break;
            }
        CHECK(in_kernel == core.contains(k));
    }
}

TEST_CASE("minimal normal subgroups") {
    PermutationGroup S3({cyc("(1 2 3)", 3), cyc("(1 2)", 3)});
    auto mins = minimal_normal_subgroups(S3);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0].order() == 3);

    PermutationGroup S4({cyc("(1 2 3 4)", 4), cyc("(1 2)", 4)});
    auto mins4 = minimal_normal_subgroups(S4);
    REQUIRE(mins4.size() == 1);
    CHECK(mins4[0].order() == 4);  // the Klein four-group
}

TEST_CASE("primitivity") {
    PermutationGroup S3({cyc("(1 2 3)", 3), cyc("(1 2)", 3)});
    CHECK(is_primitive(S3));
    PermutationGroup Z4({cyc("(1 2 3 4)", 4)});
    CHECK_FALSE(is_primitive(Z4));
    PermutationGroup A5({cyc("(1 2 3)", 5), cyc("(1 2 3 4 5)", 5)});
    CHECK(is_primitive(A5));
}
