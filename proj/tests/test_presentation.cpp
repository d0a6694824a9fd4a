#include <doctest.h>

#include "hat/group.hpp"
#include "hat/presentation.hpp"

using namespace hat;

TEST_CASE("Klein presentation closes at 4 cosets") {
    FinitePresentation p;
    p.generator_count = 2;
    p.relators = {{1, 1}, {2, 2}, {1, 2, 1, 2}};
    auto en = todd_coxeter(p);
    CHECK(en.coset_count == 4);
    PermutationGroup G(en.generator_perms);
    CHECK(G.is_regular());
}

TEST_CASE("dihedral presentation closes at 8 cosets") {
    FinitePresentation p;
    p.generator_count = 2;
    p.relators = {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2, 1, 2}};
    auto en = todd_coxeter(p);
    CHECK(en.coset_count == 8);
    PermutationGroup G(en.generator_perms);
    CHECK(G.is_regular());
    CHECK_FALSE(compose(en.generator_perms[0], en.generator_perms[1]) ==
                compose(en.generator_perms[1], en.generator_perms[0]));
}

TEST_CASE("the seven-involution presentation closes at 128 cosets") {
    FinitePresentation p = h7_presentation();
    CHECK(p.generator_count == 7);
    // 7 squares + 18 commuting pairs (|i-j| <= 4) + 3 overlap relations
    CHECK(p.relators.size() == 28);
    auto en = todd_coxeter(p);
    CHECK(en.coset_count == 128);
    PermutationGroup G(en.generator_perms);
    CHECK(G.is_regular());
    CHECK(G.order() == 128);
}

TEST_CASE("relators evaluate to the identity") {
    FinitePresentation p = h7_presentation();
    auto en = todd_coxeter(p);
    for (const auto& w : p.relators) CHECK(en.evaluate(w).is_identity());
}

TEST_CASE("enumeration budget") {
    FinitePresentation p;
    p.generator_count = 2;
    p.relators = {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2, 1, 2}};
    CHECK_THROWS_AS(todd_coxeter(p, 3), ExceededError);
}

TEST_CASE("regular representation from a multiplication table") {
    ElementSet K = ElementSet::closure({parse_cycle_string("(1 2)(3 4)", 4),
                                        parse_cycle_string("(1 3)(2 4)", 4)});
    auto rr = regular_rep_from_multiplication(
        K, {parse_cycle_string("(1 2)(3 4)", 4), parse_cycle_string("(1 3)(2 4)", 4)});
    REQUIRE(rr.size() == 2);
    for (const auto& r : rr) {
        CHECK(r.degree() == 4);
        CHECK(compose(r, r).is_identity());
        CHECK(r.first_moved() == 0);  // fixed-point-free
    }
    CHECK(compose(rr[0], rr[1]) == compose(rr[1], rr[0]));
    PermutationGroup R(rr);
    CHECK(R.is_regular());
}

TEST_CASE("presentation text format round trip") {
    FinitePresentation p = h7_presentation();
    FinitePresentation q = parse_presentation(format_presentation(p));
    CHECK(q.generator_count == p.generator_count);
    CHECK(q.relators == p.relators);
    CHECK_THROWS_AS(parse_presentation("nonsense"), InvalidInputError);
}
