#include <doctest.h>

#include "hat/perm.hpp"

using namespace hat;

namespace {
Permutation cyc(const std::string& s, std::uint32_t d) { return parse_cycle_string(s, d); }
}

TEST_CASE("construction validates the image sequence") {
    CHECK_NOTHROW(Permutation({1, 0, 2}));
    CHECK_THROWS_AS(Permutation({0, 0, 2}), InvalidInputError);
    CHECK_THROWS_AS(Permutation({0, 1, 3}), InvalidInputError);
}

TEST_CASE("composition applies left factor first") {
    Permutation p = cyc("(1 2)", 3);
    Permutation q = cyc("(2 3)", 3);
    // 1 -> 2 under p, then 2 -> 3 under q
    CHECK(compose(p, q).apply(0) == 2);
    CHECK(compose(q, p).apply(0) == 1);
}

TEST_CASE("inverse and identity") {
    Permutation p = cyc("(1 2 3)(4 5)", 5);
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(compose(inverse(p), p).is_identity());
    CHECK(Permutation::identity(4).is_identity());
    CHECK(Permutation::identity(4).first_moved() == 4);
    CHECK(p.first_moved() == 0);
}

TEST_CASE("conjugation and commutator conventions") {
    Permutation p = cyc("(1 2)", 4);
    Permutation g = cyc("(1 3)", 4);
    // g^{-1} p g relabels the cycle through g
    CHECK(conjugate(p, g) == cyc("(3 2)", 4));
    Permutation a = cyc("(1 2 3)", 4), b = cyc("(2 3 4)", 4);
    CHECK(commutator(a, b) == compose(compose(inverse(a), inverse(b)), compose(a, b)));
    CHECK(commutator(a, a).is_identity());
}

TEST_CASE("powers and element order") {
    Permutation p = cyc("(1 2 3)(4 5)", 5);
    CHECK(element_order(p) == 6);
    CHECK(power(p, 6).is_identity());
    CHECK(power(p, -1) == inverse(p));
    CHECK(power(p, 0).is_identity());
    CHECK(element_order(Permutation::identity(3)) == 1);
}

TEST_CASE("parity") {
    CHECK(is_even(cyc("(1 2 3)", 5)));
    CHECK_FALSE(is_even(cyc("(1 2)", 5)));
    CHECK(is_even(cyc("(1 2)(3 4)", 5)));
}

TEST_CASE("cycle notation round trip") {
    for (const char* s : {"(1 2 3)(4 5)", "(2 4)", "()"}) {
        Permutation p = cyc(s, 6);
        CHECK(parse_cycle_string(to_cycle_string(p), 6) == p);
    }
    CHECK(to_cycle_string(Permutation::identity(3)) == "()");
    CHECK_THROWS_AS(cyc("(1 7)", 6), InvalidInputError);
    CHECK_THROWS_AS(cyc("(1 1)", 6), InvalidInputError);
}

TEST_CASE("identity is lexicographically least") {
    Permutation id = Permutation::identity(4);
    CHECK_FALSE(cyc("(1 2)", 4) < id);
    CHECK_FALSE(cyc("(3 4)", 4) < id);
    CHECK(id < cyc("(3 4)", 4));
}
