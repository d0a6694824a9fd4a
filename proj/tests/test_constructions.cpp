#include <doctest.h>

#include "hat/constructions.hpp"

using namespace hat;

namespace {
Permutation cyc(const std::string& s, std::uint32_t d) { return parse_cycle_string(s, d); }

ConcentricSequence klein_sequence() {
    auto r = check_concentric({cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)});
    REQUIRE(r.accepted());
    return *r.seq;
}
}  // namespace

TEST_CASE("twist with h = identity on the Klein carrier, by hand") {
    ConcentricSequence s = klein_sequence();
    std::uint32_t e = s.identity_index();
    std::uint32_t i1 = s.gen_index[0], i2 = s.gen_index[1];
    std::uint32_t i12 = s.mult(i1, i2);
    Permutation tau = build_tau_h(s, s.H.index_of_or_throw(Permutation::identity(4)));
    // b ∈ B maps through φ; a_2·b maps to a_1·φ(b)
    CHECK(tau.apply(e) == e);
    CHECK(tau.apply(i1) == i2);
    CHECK(tau.apply(i2) == i1);
    CHECK(tau.apply(i12) == i12);
}

TEST_CASE("twist rejects h outside B") {
    ConcentricSequence s = klein_sequence();
    CHECK_THROWS_AS(build_tau_h(s, s.gen_index[1]), InvalidInputError);
    CHECK_THROWS_AS(build_tau_h(s, s.order() + 5), InvalidInputError);
}

TEST_CASE("the twist conjugates each regular generator to the next") {
    ConcentricSequence s = catalog("D8");
    for (std::uint32_t h = 0; h < s.order(); ++h) {
        if (!s.in_B(h)) continue;
        Permutation tau = build_tau_h(s, h);
        CHECK(tau.apply(s.identity_index()) == s.identity_index());
        CHECK(conjugation_shift_violation(s, tau) == 0);
    }
    // a wrong twist is caught with a 1-based index
    CHECK(conjugation_shift_violation(s, Permutation::identity(s.order())) != 0);
}

TEST_CASE("twisted coset instance over the dihedral triple") {
    ConcentricSequence s = catalog("D8");
    for (std::uint32_t h = 0; h < s.order(); ++h) {
        if (!s.in_B(h)) continue;
        MNInstance inst = build_mn_instance(s, h);
        REQUIRE(inst.checks.size() == 5);
        for (const auto& c : inst.checks) {
            INFO(c.name, " h=", h, " witness=", c.witness);
            CHECK(c.pass);
        }
        CHECK(inst.verified());
        CHECK(inst.G.order() % inst.H.order() == 0);
    }
}

TEST_CASE("twisted coset instance rejects abelian groups") {
    ConcentricSequence s = klein_sequence();
    CHECK_THROWS_AS(build_mn_instance(s, s.identity_index()), InvalidInputError);
}

TEST_CASE("entry conditions on the alternating toy instance") {
    PermutationGroup A4({cyc("(1 2 3)", 4), cyc("(2 3 4)", 4)});
    std::vector<Permutation> H = {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)};
    Permutation a = cyc("(2 3 4)", 4);
    C1C4Report r = check_c1_c4(A4, a, H);
    CHECK(r.c1);
    CHECK(r.c2);
    CHECK(r.c3);
    CHECK(r.c4);
    CHECK(r.all());
    CHECK_FALSE(r.w_simple);
    CHECK(r.w_primitive);
    CHECK_FALSE(r.hypotheses_assumed);

    // reversing the generator order breaks the shift condition at step 1
    C1C4Report bad = check_c1_c4(A4, a, {H[1], H[0]});
    CHECK_FALSE(bad.c4);
    CHECK(bad.c4_fail_index == 1);

    // a must fix the first point
    CHECK_THROWS_AS(check_c1_c4(A4, cyc("(1 2 3)", 4), H), InvalidInputError);
}

TEST_CASE("shift-element search recovers a valid a") {
    PermutationGroup A4({cyc("(1 2 3)", 4), cyc("(2 3 4)", 4)});
    std::vector<Permutation> H = {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)};
    auto a = search_shift_element(A4, H);
    REQUIRE(a.has_value());
    C1C4Report r = check_c1_c4(A4, *a, H);
    CHECK(r.all());
}

TEST_CASE("one-block instance degenerates to W") {
    PermutationGroup A4({cyc("(1 2 3)", 4), cyc("(2 3 4)", 4)});
    std::vector<Permutation> H = {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)};
    WreathInstance w = build_wreath_instance(A4, cyc("(2 3 4)", 4), H, 1);
    CHECK(w.omega_degree == 4);
    CHECK(w.tau.is_identity());
    CHECK(w.G.order() == A4.order());
    CHECK(w.a_tau == w.a);
    std::string reason;
    CHECK(wreath_invariants_hold(w, reason));
}

TEST_CASE("two-block instance structure and invariants") {
    PermutationGroup A4({cyc("(1 2 3)", 4), cyc("(2 3 4)", 4)});
    std::vector<Permutation> H = {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)};
    WreathInstance w = build_wreath_instance(A4, cyc("(2 3 4)", 4), H, 2);
    CHECK(w.omega_degree == 8);
    CHECK(element_order(w.tau) == 2);
    REQUIRE(w.kgens.size() == 4);
    CHECK(ElementSet::closure(w.kgens).size() == 16);
    CHECK(w.G.order() == 288);  // (|A4| squared) times the block swap
    std::string reason;
    CHECK(wreath_invariants_hold(w, reason));
    CHECK(reason.empty());
}

TEST_CASE("theorem checks report honestly on a non-simple base") {
    // A4 is not simple, so the conclusion rightly fails here; the check
    // list must say which parts fail and which still hold.
    PermutationGroup A4({cyc("(1 2 3)", 4), cyc("(2 3 4)", 4)});
    std::vector<Permutation> H = {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)};
    WreathInstance w = build_wreath_instance(A4, cyc("(2 3 4)", 4), H, 2);
    auto checks = verify_wreath_theorem(w);
    REQUIRE(checks.size() == 5);
    CHECK(checks[0].name == "connectivity");
    CHECK(checks[1].name == "intersection_index");
    CHECK(checks[2].name == "double_cosets_unequal");
    CHECK(checks[3].name == "core_free");
    CHECK(checks[4].name == "proof_subgroup_shift");
    CHECK(checks[2].advisory);
    for (std::size_t i : {std::size_t{0}, std::size_t{1}, std::size_t{3}, std::size_t{4}})
        CHECK_FALSE(checks[i].advisory);
    // the four-group is normal in A4, so K is normal in G: no core-freeness,
    // and conjugation by a·tau fixes K
    CHECK_FALSE(checks[0].pass);
    CHECK_FALSE(checks[1].pass);
    CHECK_FALSE(checks[3].pass);
    // the subgroup shift B^{a·tau} = C is a consequence of the entry
    // conditions alone, so it holds even here
    CHECK(checks[4].pass);
    CHECK_FALSE(all_pass(checks));
}

TEST_CASE("invariant checker flags a corrupted instance") {
    PermutationGroup A4({cyc("(1 2 3)", 4), cyc("(2 3 4)", 4)});
    std::vector<Permutation> H = {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)};
    WreathInstance w = build_wreath_instance(A4, cyc("(2 3 4)", 4), H, 2);
    w.a_tau = Permutation::identity(8);
    std::string reason;
    CHECK_FALSE(wreath_invariants_hold(w, reason));
    CHECK_FALSE(reason.empty());
}
