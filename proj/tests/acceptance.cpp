// Acceptance suite: one PASS/FAIL line per criterion, exit 0 when all
// pass, exit 2 when a computed mathematical property is falsified by a
// counterexample, exit 1 on any other failure.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hat/concentric.hpp"
#include "hat/constructions.hpp"
#include "hat/graph.hpp"
#include "hat/group.hpp"
#include "hat/presentation.hpp"

using namespace hat;

namespace {

Permutation cyc(const std::string& s, std::uint32_t d) { return parse_cycle_string(s, d); }

struct Outcome {
    bool pass = true;
    bool counterexample = false;  // a falsified mathematical property
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// stabilizers of verified half-arc-transitive instances, fed into the
// recognition criterion
std::vector<PermutationGroup> g_hat_stabilizers;

// ---- criterion 1: permutation engine vs exhaustive enumeration --------

Outcome criterion_1() {
    Outcome out;
    std::mt19937_64 rng(0xC0FFEEu);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t d = 3 + rng() % 5;  // degrees 3..7
        std::vector<Permutation> gens;
        for (int k = 0; k < 2; ++k) {
            std::vector<std::uint32_t> img(d);
            std::iota(img.begin(), img.end(), 0u);
            std::shuffle(img.begin(), img.end(), rng);
            gens.emplace_back(std::move(img));
        }
        PermutationGroup G(gens);
        ElementSet all = ElementSet::closure(gens);
        if (G.order() != all.size()) {
            out.fail("order mismatch at trial " + std::to_string(trial));
            break;
        }
        bool members_ok = true;
        for (const auto& e : all.elements())
            if (!G.contains(e)) {
                members_ok = false;
                break;
            }
        for (int k = 0; k < 5 && members_ok; ++k) {
            std::vector<std::uint32_t> img(d);
            std::iota(img.begin(), img.end(), 0u);
            std::shuffle(img.begin(), img.end(), rng);
            Permutation p(std::move(img));
            if (G.contains(p) != all.contains(p)) members_ok = false;
        }
        if (!members_ok) {
            out.fail("membership mismatch at trial " + std::to_string(trial));
            break;
        }
    }
    PermutationGroup A8({cyc("(1 2 3)", 8), cyc("(2 3 4 5 6 7 8)", 8)});
    if (A8.order() != 20160) out.fail("A8 order " + std::to_string(A8.order()));
    if (A8.point_stabilizer(0).order() != 2520) out.fail("A8 point stabilizer order");
    return out;
}

// ---- criterion 2: the 128-element group from its presentation ---------

Outcome criterion_2() {
    Outcome out;
    FinitePresentation p = h7_presentation();
    CosetEnumeration en = todd_coxeter(p);
    if (en.coset_count != 128) {
        out.fail("coset enumeration closed at " + std::to_string(en.coset_count));
        return out;
    }
    ConcentricCheck check = check_concentric(en.generator_perms);
    if (!check.accepted()) {
        out.fail("recognition rejected: " + check.rejection);
        return out;
    }
    const ConcentricSequence& cs = *check.seq;
    if (cs.n != 7) out.fail("sequence length " + std::to_string(cs.n));
    if (cs.B.size() != 64) out.fail("|B| = " + std::to_string(cs.B.size()));
    // shift table as a homomorphism on every pair of B
    std::uint64_t pairs = 0;
    for (std::uint32_t i = 0; i < cs.order(); ++i) {
        if (!cs.in_B(i)) continue;
        for (std::uint32_t j = 0; j < cs.order(); ++j) {
            if (!cs.in_B(j)) continue;
            ++pairs;
            std::uint32_t ij = cs.mult(i, j);
            if (!cs.in_B(ij) ||
                cs.phi[ij] != static_cast<std::int32_t>(
                                  cs.mult(static_cast<std::uint32_t>(cs.phi[i]),
                                          static_cast<std::uint32_t>(cs.phi[j])))) {
                out.fail("shift table not multiplicative at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
                return out;
            }
        }
    }
    if (pairs != 4096) out.fail("checked " + std::to_string(pairs) + " pairs, expected 4096");
    return out;
}

// ---- criterion 3: the conjugation-shift identity over the catalog -----

Outcome criterion_3() {
    Outcome out;
    const char* names[] = {"Z2^1", "Z2^2", "Z2^3", "Z2^4", "Z2^5", "D8", "D8xZ2^1", "D8xZ2^2"};
    for (const char* name : names) {
        ConcentricSequence cs = catalog(name);
        if (cs.order() > 32) {
            out.fail(std::string(name) + " exceeds the order bound");
            continue;
        }
        for (std::uint32_t h = 0; h < cs.order(); ++h) {
            if (!cs.in_B(h)) continue;
            Permutation tau = build_tau_h(cs, h);
            int bad = conjugation_shift_violation(cs, tau);
            if (bad != 0) {
                out.counterexample = true;
                out.fail(std::string(name) + " h=" + std::to_string(h + 1) +
                         " violates the shift identity at i=" + std::to_string(bad));
            }
        }
    }
    return out;
}

// ---- criterion 4: full pipeline over the two dihedral-type groups -----

Outcome criterion_4() {
    Outcome out;
    int materialized = 0;
    int certified_only = 0;
    for (const char* name : {"D8", "D8xZ2^1"}) {
        ConcentricSequence cs = catalog(name);
        for (std::uint32_t h = 0; h < cs.order(); ++h) {
            if (!cs.in_B(h)) continue;
            MNInstance inst = build_mn_instance(cs, h);
            for (const auto& c : inst.checks)
                if (!c.pass)
                    out.fail(std::string(name) + " h=" + std::to_string(h + 1) + " check " +
                             c.name + " failed: " + c.witness);
            if (!inst.verified()) continue;
            // The five certificate checks already pin down the four graph
            // facts at the coset level: generation gives connectivity, the
            // intersection index together with the unequal double cosets
            // gives valency four and rules out arc-transitivity, and
            // core-freeness makes the coset action faithful so the vertex
            // stabilizer is exactly the point group.  Materialize and
            // re-verify on the explicit graph whenever the coset index is
            // small enough to hold in memory; for this family the twisted
            // group can reach alternating-group size, where no explicit
            // graph fits.
            std::uint64_t index = inst.G.order() / cs.order();
            if (index > 50000) {
                ++certified_only;
                continue;
            }
            ++materialized;
            CosetGraph cg = materialize_coset_graph(inst.G, inst.RH, inst.tau_h);
            if (!cg.graph.is_connected())
                out.fail(std::string(name) + " h=" + std::to_string(h + 1) + ": disconnected");
            auto val = cg.graph.valency();
            if (!val || *val != 4)
                out.fail(std::string(name) + " h=" + std::to_string(h + 1) + ": not tetravalent");
            std::vector<Permutation> vgens;
            for (const auto& p : inst.G.generators()) vgens.push_back(cg.action_of(p));
            PermutationGroup GV(vgens);
            TransitivityReport rep = transitivity_report(cg.graph, GV);
            if (!rep.hat)
                out.fail(std::string(name) + " h=" + std::to_string(h + 1) +
                         ": not half-arc-transitive under G");
            if (rep.stabilizer.order() != cs.order())
                out.fail(std::string(name) + " h=" + std::to_string(h + 1) +
                         ": stabilizer order " + std::to_string(rep.stabilizer.order()));
            if (rep.hat) g_hat_stabilizers.push_back(rep.stabilizer);
        }
    }
    if (materialized == 0) out.fail("no instance was small enough to materialize");
    if (out.pass)
        out.detail = std::to_string(materialized) + " twists verified on explicit graphs, " +
                     std::to_string(certified_only) +
                     " via the coset certificate (index beyond any explicit graph)";
    return out;
}

// ---- criterion 5: block construction over the alternating group -------

Outcome criterion_5() {
    Outcome out;
    ConcentricSequence d8 = catalog("D8");
    PermutationGroup A8({cyc("(1 2 3)", 8), cyc("(2 3 4 5 6 7 8)", 8)});
    for (const auto& a : d8.gens)
        if (!A8.contains(a)) {
            out.fail("regular dihedral generator is odd");
            return out;
        }
    auto shift = search_shift_element(A8, d8.gens);
    if (shift) {
        C1C4Report pre = check_c1_c4(A8, *shift, d8.gens);
        if (!pre.all()) {
            out.fail("found shift element fails the entry conditions");
            return out;
        }
        for (int m : {1, 2}) {
            WreathInstance inst = build_wreath_instance(A8, *shift, d8.gens, m);
            std::string reason;
            if (!wreath_invariants_hold(inst, reason))
                out.fail("m=" + std::to_string(m) + " invariants: " + reason);
            auto checks = verify_wreath_theorem(inst);
            for (const auto& c : checks) {
                if (c.advisory) {
                    std::cout << "  [info] m=" << m << " advisory " << c.name << ": "
                              << c.witness << "\n";
                    continue;
                }
                if (!c.pass) {
                    out.counterexample = true;
                    out.fail("m=" + std::to_string(m) + " check " + c.name +
                             " failed: " + c.witness);
                }
            }
        }
        out.detail = "shift element found in A8; m in {1,2} verified";
    } else {
        // no shift element exists over this base: exercise the machinery
        // on the small toy instance instead and record the non-existence
        std::cout << "  [info] no shift element over A8 for the dihedral triple; "
                     "running the toy instance\n";
        PermutationGroup A4({cyc("(1 2 3)", 4), cyc("(2 3 4)", 4)});
        std::vector<Permutation> H = {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)};
        Permutation a = cyc("(2 3 4)", 4);
        for (int m : {1, 2}) {
            WreathInstance inst = build_wreath_instance(A4, a, H, m);
            std::string reason;
            if (!wreath_invariants_hold(inst, reason))
                out.fail("toy m=" + std::to_string(m) + " invariants: " + reason);
            if (verify_wreath_theorem(inst).size() != 5)
                out.fail("toy certificate is missing checks");
        }
        out.detail = "non-existence over A8 recorded; toy instance exercised";
    }
    return out;
}

// ---- criterion 6: solvable-group instances have elementary abelian ----
// ---- stabilizers                                                    ----

struct PoolGroup {
    const char* name;
    std::uint32_t degree;
    std::vector<const char*> gens;
};

Outcome criterion_6() {
    Outcome out;
    std::vector<PoolGroup> pool = {
        {"S4", 4, {"(1 2 3 4)", "(1 2)"}},
        {"D10", 5, {"(1 2 3 4 5)", "(2 5)(3 4)"}},
        {"F20", 5, {"(1 2 3 4 5)", "(2 3 5 4)"}},
        {"D12", 6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"}},
        {"Z3wrZ2", 6, {"(1 2 3)", "(1 4)(2 5)(3 6)"}},
        {"S3xS3", 6, {"(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)"}},
        {"S4xZ2", 6, {"(1 2 3 4)", "(1 2)", "(5 6)"}},
        {"D14", 7, {"(1 2 3 4 5 6 7)", "(2 7)(3 6)(4 5)"}},
        {"F42", 7, {"(1 2 3 4 5 6 7)", "(1 3 2 6 4 5)"}},
        {"D16", 8, {"(1 2 3 4 5 6 7 8)", "(2 8)(3 7)(4 6)"}},
        {"Z4wrZ2", 8, {"(1 2 3 4)", "(5 6 7 8)", "(1 5)(2 6)(3 7)(4 8)"}},
        {"D8xS3", 7, {"(1 2 3 4)", "(1 3)", "(5 6 7)", "(5 6)"}},
        {"D18", 9, {"(1 2 3 4 5 6 7 8 9)", "(2 9)(3 8)(4 7)(5 6)"}},
        {"D20", 10, {"(1 2 3 4 5 6 7 8 9 10)", "(2 10)(3 9)(4 8)(5 7)"}},
    };

    int instances = 0;
    for (const auto& pg : pool) {
        std::vector<Permutation> gens;
        for (const char* s : pg.gens) gens.push_back(cyc(s, pg.degree));
        PermutationGroup G(gens);
        if (!is_solvable(G)) {
            out.fail(std::string(pg.name) + " is not solvable; bad pool entry");
            continue;
        }
        ElementSet all = G.enumerate_elements();

        // candidate point stabilizers: <t> for involutions t, Klein
        // subgroups from commuting involution pairs, and cyclic groups of
        // order four (the latter, if they ever survived the filters,
        // would be counterexamples)
        std::vector<ElementSet> candidates;
        std::vector<Permutation> involutions;
        for (const auto& e : all.elements()) {
            std::uint64_t o = element_order(e);
            if (o == 2) {
                involutions.push_back(e);
                candidates.push_back(ElementSet::closure({e}));
            } else if (o == 4) {
                candidates.push_back(ElementSet::closure({e}));
            }
        }
        int klein_budget = 40;
        for (std::size_t i = 0; i < involutions.size() && klein_budget > 0; ++i)
            for (std::size_t j = i + 1; j < involutions.size() && klein_budget > 0; ++j) {
                if (compose(involutions[i], involutions[j]) !=
                    compose(involutions[j], involutions[i]))
                    continue;
                candidates.push_back(ElementSet::closure({involutions[i], involutions[j]}));
                --klein_budget;
            }

        int accepted_here = 0;
        for (const auto& H : candidates) {
            if (accepted_here >= 8) break;
            for (const auto& g : all.elements()) {
                if (accepted_here >= 8) break;
                if (element_order(g) <= 2 || H.contains(g)) continue;
                if (index_of_self_intersection(H, g) != 2) continue;
                if (double_cosets_equal(H, g)) continue;

                std::vector<Permutation> sub = {g};
                for (const auto& h : H.elements())
                    if (!h.is_identity()) sub.push_back(h);
                PermutationGroup Gsub(sub);
                if (core_of(H, Gsub).size() != 1) continue;
                if (Gsub.order() / H.size() > 2000) continue;

                CosetGraph cg = materialize_coset_graph(Gsub, H, g);
                std::vector<Permutation> vgens;
                for (const auto& p : Gsub.generators()) vgens.push_back(cg.action_of(p));
                PermutationGroup GV(vgens);
                TransitivityReport rep = transitivity_report(cg.graph, GV);
                auto val = cg.graph.valency();
                if (!rep.hat || !val || *val != 4 || rep.stabilizer.order() != H.size()) {
                    out.fail(std::string(pg.name) +
                             ": filter predicted a half-arc-transitive action but the "
                             "materialized graph disagrees");
                    continue;
                }
                ++instances;
                ++accepted_here;
                g_hat_stabilizers.push_back(rep.stabilizer);
                ElementSet stab_elems = rep.stabilizer.enumerate_elements();
                for (const auto& e : stab_elems.elements())
                    if (!compose(e, e).is_identity()) {
                        out.counterexample = true;
                        out.fail(std::string(pg.name) +
                                 ": solvable-group instance with a stabilizer that is not "
                                 "elementary abelian (element " + to_cycle_string(e) + ")");
                    }
            }
        }
    }
    if (instances < 50)
        out.fail("only " + std::to_string(instances) + " instances generated, need 50");
    if (out.pass) out.detail = std::to_string(instances) + " instances, all stabilizers "
                                                           "elementary abelian";
    return out;
}

// ---- criterion 7: every collected stabilizer is recognized ------------

Outcome criterion_7() {
    Outcome out;
    int recognized = 0;
    for (const auto& stab : g_hat_stabilizers) {
        std::uint64_t so = stab.order();
        if (so == 1) {
            ++recognized;  // nothing to recognize
            continue;
        }
        if ((so & (so - 1)) != 0) {
            out.counterexample = true;
            out.fail("stabilizer of order " + std::to_string(so) + " is not a 2-group");
            continue;
        }
        int n = 0;
        while ((std::uint64_t{1} << n) < so) ++n;
        ElementSet set = stab.enumerate_elements();
        if (!find_concentric_sequence(set, n)) {
            out.counterexample = true;
            out.fail("stabilizer of order " + std::to_string(so) +
                     " admits no concentric sequence");
            continue;
        }
        ++recognized;
    }
    if (g_hat_stabilizers.empty()) out.fail("no stabilizers were collected upstream");
    if (out.pass)
        out.detail = std::to_string(recognized) + " stabilizers recognized";
    return out;
}

// ---- criterion 8: graph engine vs exhaustive search -------------------

std::uint64_t brute_force_aut_order(const Graph& g) {
    std::vector<std::uint32_t> img(g.vertex_count);
    std::iota(img.begin(), img.end(), 0u);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (std::uint32_t u = 0; u < g.vertex_count && ok; ++u)
            for (std::uint32_t v : g.adjacency[u])
                if (!g.adjacent(img[u], img[v])) {
                    ok = false;
                    break;
                }
        if (ok) ++count;
    } while (std::next_permutation(img.begin(), img.end()));
    return count;
}

Outcome criterion_8() {
    Outcome out;
    auto named = [&](const Graph& g, std::uint64_t expected, const char* what) {
        std::uint64_t got = graph_automorphism_group(g).order();
        if (got != expected)
            out.fail(std::string(what) + ": order " + std::to_string(got) + " expected " +
                     std::to_string(expected));
    };
    std::vector<std::pair<std::uint32_t, std::uint32_t>> e4;
    for (std::uint32_t i = 0; i < 4; ++i) e4.emplace_back(i, (i + 1) % 4);
    named(Graph::from_edges(4, e4), 8, "4-cycle");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ek;
    for (std::uint32_t i = 0; i < 4; ++i)
        for (std::uint32_t j = i + 1; j < 4; ++j) ek.emplace_back(i, j);
    named(Graph::from_edges(4, ek), 24, "complete graph on 4");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ep;
    for (std::uint32_t i = 0; i < 5; ++i) {
        ep.emplace_back(i, (i + 1) % 5);
        ep.emplace_back(i, i + 5);
        ep.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    named(Graph::from_edges(10, ep), 120, "Petersen graph");

    std::mt19937_64 rng(0xFEEDu);
    for (int trial = 0; trial < 500; ++trial) {
        std::uint32_t n = 4 + rng() % 7;  // 4..10 vertices
        std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j)
                if (rng() % 2) e.emplace_back(i, j);
        Graph g = Graph::from_edges(n, e);
        std::uint64_t fast = graph_automorphism_group(g).order();
        std::uint64_t slow = brute_force_aut_order(g);
        if (fast != slow) {
            out.fail("trial " + std::to_string(trial) + " (n=" + std::to_string(n) +
                     "): computed " + std::to_string(fast) + " vs exhaustive " +
                     std::to_string(slow));
            break;
        }
    }
    return out;
}

// ---- criterion 9: quotient machinery on the dihedral instance ---------

Outcome criterion_9() {
    Outcome out;
    ConcentricSequence cs = catalog("D8");
    MNInstance inst = build_mn_instance(cs, cs.identity_index());
    if (!inst.verified()) {
        out.fail("the dihedral instance did not verify");
        return out;
    }
    CosetGraph cg = materialize_coset_graph(inst.G, inst.RH, inst.tau_h);
    std::vector<Permutation> vgens;
    for (const auto& p : inst.G.generators()) vgens.push_back(cg.action_of(p));
    PermutationGroup GV(vgens);
    // The coset action is faithful (core-freeness is one of the certified
    // checks), so the vertex group is isomorphic to the twisted group and
    // normal-subgroup structure can be computed on the small-degree
    // representation and pushed forward generator by generator.
    bool gv_solvable = is_solvable(inst.G);
    std::vector<PermutationGroup> mins;
    for (const auto& M : minimal_normal_subgroups(inst.G)) {
        std::vector<Permutation> ngens;
        for (const auto& p : M.generators()) ngens.push_back(cg.action_of(p));
        mins.emplace_back(std::move(ngens));
    }
    if (mins.empty()) {
        out.fail("no minimal normal subgroups found");
        return out;
    }
    for (const auto& N : mins) {
        QuotientResult q = normal_quotient(cg.graph, GV, N);
        bool val_ok = q.quotient_valency == 0 || q.quotient_valency == 1 ||
                      q.quotient_valency == 2 || q.quotient_valency == 4;
        if (!val_ok) {
            out.counterexample = true;
            out.fail("quotient valency " + std::to_string(q.quotient_valency) +
                     " outside {0,1,2,4}");
        }
        if (q.is_normal_cover != (q.quotient_valency == 4)) {
            out.counterexample = true;
            out.fail("cover flag disagrees with the quotient valency");
        }
        if (q.lemma_violated) {
            out.counterexample = true;
            out.fail("solvable-normal-subgroup cover property violated: " + q.lemma_note);
        }
        if (!gv_solvable && is_solvable(N) && q.orbit_partition.size() > 2 &&
            q.is_normal_cover != q.n_semiregular) {
            out.counterexample = true;
            out.fail("cover and semiregularity flags disagree for a solvable normal subgroup");
        }
    }
    out.detail = std::to_string(mins.size()) + " minimal normal subgroups examined on " +
                 std::to_string(cg.graph.vertex_count) + " vertices";
    return out;
}

}  // namespace

int main() {
    struct Entry {
        int number;
        const char* title;
        Outcome (*run)();
    };
    Entry entries[] = {
        {1, "permutation engine vs exhaustive enumeration", criterion_1},
        {2, "128-element group: enumeration and recognition", criterion_2},
        {3, "conjugation-shift identity over the catalog", criterion_3},
        {4, "twisted coset pipeline over the dihedral groups", criterion_4},
        {5, "block construction over the alternating group", criterion_5},
        {6, "solvable-group stabilizers are elementary abelian", criterion_6},
        {7, "stabilizer recognition across all instances", criterion_7},
        {8, "graph automorphisms vs exhaustive search", criterion_8},
        {9, "quotient machinery on the dihedral instance", criterion_9},
    };
    int exit_code = 0;
    for (const auto& e : entries) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = e.run();
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        std::ostringstream line;
        line << "criterion " << e.number << ": " << (o.pass ? "PASS" : "FAIL") << " - "
             << e.title;
        if (!o.detail.empty()) line << " (" << o.detail << ")";
        line << " [" << static_cast<int>(seconds_since(t0) * 1000) << " ms]";
        std::cout << line.str() << std::endl;
        if (!o.pass) exit_code = std::max(exit_code, o.counterexample ? 2 : 1);
    }
    return exit_code;
}
