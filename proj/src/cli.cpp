#include "hat/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "hat/certificate.hpp"
#include "hat/concentric.hpp"
#include "hat/constructions.hpp"
#include "hat/graph.hpp"
#include "hat/group.hpp"
#include "hat/io.hpp"
#include "hat/presentation.hpp"

namespace hat {

namespace {

struct CliContext {
    std::uint64_t seed = PermutationGroup::kDefaultSeed;
    std::uint64_t max_elements = kDefaultElementCap;
    std::uint32_t max_vertices = kDefaultMaxVertices;
    std::uint64_t max_cosets = kDefaultMaxCosets;
    int jobs = 1;
    std::string output;  // artifact file (witness / graph), certificate goes to stdout
    int exit_code = 0;
};

std::string join_args(const std::vector<std::string>& args) {
    std::string out = "hat";
    for (const auto& a : args) out += " " + a;
    return out;
}

void emit(CliContext& ctx, CertificateDocument& doc) {
    std::cout << doc.to_json_string();
    if (doc.falsified()) ctx.exit_code = 2;
}

void add_input(CertificateDocument& doc, const std::string& path, const std::string& content) {
    doc.inputs.emplace_back(path, fnv1a_hex(content));
}

GroupFile load_group(CertificateDocument& doc, const std::string& path) {
    std::string text = read_text_file(path);
    add_input(doc, path, text);
    return parse_group_file(text);
}

const char* kTwistNote =
    "the twisting formula (a_m b)^{tau_h} = a_1 h b^phi is read with a_m = a_n, "
    "the last generator, since B has index 2 and a_n represents the non-B coset; "
    "h enters through its shift image h^phi so that the map is a bijection for "
    "every h in B";

std::uint32_t resolve_h(const ConcentricSequence& cs, const std::string& spec) {
    if (spec == "e" || spec == "1()" || spec == "()")
        return cs.identity_index();
    if (!spec.empty() && spec[0] == '(') {
        Permutation p = parse_cycle_string(spec, cs.gens[0].degree());
        // h is named on the original carrier; translate to the canonical index
        auto idx = cs.H.index_of(p);
        if (!idx) throw InvalidInputError("h is not an element of H");
        return *idx;
    }
    unsigned long v = std::stoul(spec);
    if (v < 1 || v > cs.order()) throw InvalidInputError("h index out of range");
    return static_cast<std::uint32_t>(v - 1);
}

void append_mn_checks(CertificateDocument& doc, const MNInstance& inst) {
    int bad = conjugation_shift_violation(inst.H, inst.tau_h);
    doc.checks.push_back({"conjugation_shift", "tau_h^{-1} R(a_i) tau_h = R(a_{i+1})", bad == 0,
                          false, bad == 0 ? "" : "fails at i = " + std::to_string(bad)});
    for (const auto& c : inst.checks) doc.checks.push_back(c);
}

ConcentricSequence load_ccs(CertificateDocument& doc, const std::string& path) {
    std::string text = read_text_file(path);
    add_input(doc, path, text);
    return parse_ccs(text);
}

WreathInstance load_wreath(CertificateDocument& doc, const std::string& wri_path,
                           CliContext& ctx) {
    std::string text = read_text_file(wri_path);
    add_input(doc, wri_path, text);
    WreathFile wf = parse_wri(text);
    GroupFile wg = load_group(doc, wf.wgroup_path);
    PermutationGroup W(wg.generators, {}, ctx.seed);
    Permutation a = parse_cycle_string(wf.a_text, wg.degree);
    std::vector<Permutation> hgens;
    for (const auto& h : wf.h_texts) hgens.push_back(parse_cycle_string(h, wg.degree));
    C1C4Report pre = check_c1_c4(W, a, hgens);
    if (!pre.all())
        throw InvalidInputError("wreath input fails the entry conditions (C1-C4)");
    doc.payload["entry_conditions"] = {{"c1", pre.c1},
                                       {"c2", pre.c2},
                                       {"c3", pre.c3},
                                       {"c4", pre.c4},
                                       {"w_simple", pre.w_simple},
                                       {"w_primitive", pre.w_primitive},
                                       {"hypotheses_assumed", pre.hypotheses_assumed}};
    return build_wreath_instance(W, a, hgens, wf.m);
}

// ---- subcommand bodies -------------------------------------------------

void run_concentric_check(CliContext& ctx, CertificateDocument& doc, const std::string& grp) {
    GroupFile gf = load_group(doc, grp);
    ConcentricCheck check = check_concentric(gf.generators);
    doc.checks.push_back({"concentric_accepted",
                          "a_i^2 = 1, |<a_i..a_j>| = 2^{j-i+1}, shift map extends to B -> C",
                          check.accepted(), true, check.rejection});
    doc.payload["accepted"] = check.accepted();
    if (check.accepted()) {
        doc.payload["n"] = check.seq->n;
        doc.payload["order"] = check.seq->order();
        if (!ctx.output.empty()) write_text_file(ctx.output, format_ccs(*check.seq));
    }
}

void run_concentric_search(CliContext& ctx, CertificateDocument& doc, const std::string& grp,
                           int n) {
    GroupFile gf = load_group(doc, grp);
    ElementSet H = ElementSet::closure(gf.generators, ctx.max_elements);
    auto found = find_concentric_sequence(H, n);
    doc.payload["found"] = found.has_value();
    doc.payload["order"] = H.size();
    if (found) {
        doc.payload["n"] = found->n;
        if (!ctx.output.empty()) write_text_file(ctx.output, format_ccs(*found));
    }
}

void run_concentric_catalog(CliContext& ctx, CertificateDocument& doc, const std::string& name) {
    ConcentricSequence cs = catalog(name);
    doc.payload["name"] = name;
    doc.payload["n"] = cs.n;
    doc.payload["order"] = cs.order();
    doc.payload["degree"] = cs.gens[0].degree();
    if (!ctx.output.empty()) write_text_file(ctx.output, format_ccs(cs));
}

void run_present_enumerate(CliContext& ctx, CertificateDocument& doc, const std::string& pres) {
    std::string text = read_text_file(pres);
    add_input(doc, pres, text);
    FinitePresentation p = parse_presentation(text);
    CosetEnumeration en = todd_coxeter(p, ctx.max_cosets);
    doc.payload["coset_count"] = en.coset_count;
    doc.payload["generator_count"] = p.generator_count;
    if (!ctx.output.empty()) {
        GroupFile gf{en.coset_count, en.generator_perms};
        write_text_file(ctx.output, format_group_file(gf));
    }
}

void run_mn(CliContext& ctx, CertificateDocument& doc, const std::string& ccs,
            const std::string& hspec, bool full_verify) {
    ConcentricSequence cs = load_ccs(doc, ccs);
    doc.interpretation_notes.push_back(kTwistNote);
    std::uint32_t h = resolve_h(cs, hspec);
    MNInstance inst = build_mn_instance(cs, h);
    doc.payload["n"] = cs.n;
    doc.payload["h_index"] = h + 1;
    doc.payload["tau_h"] = to_cycle_string(inst.tau_h);
    doc.payload["group_order"] = inst.G.order();
    append_mn_checks(doc, inst);
    if (full_verify || !ctx.output.empty()) {
        CosetGraph cg = materialize_coset_graph(inst.G, inst.RH, inst.tau_h, ctx.max_vertices);
        doc.payload["vertices"] = cg.graph.vertex_count;
        if (full_verify) {
            doc.checks.push_back({"connected", "the coset graph is connected",
                                  cg.graph.is_connected(), false, ""});
            auto val = cg.graph.valency();
            doc.checks.push_back({"tetravalent", "valency = 4", val && *val == 4, false,
                                  val ? std::to_string(*val) : "irregular"});
            std::vector<Permutation> vgens;
            for (const auto& p : inst.G.generators()) vgens.push_back(cg.action_of(p));
            PermutationGroup GV(vgens, {}, ctx.seed);
            TransitivityReport rep = transitivity_report(cg.graph, GV);
            doc.checks.push_back({"half_arc_transitive",
                                  "vertex- and edge-transitive but not arc-transitive", rep.hat,
                                  false, ""});
            doc.checks.push_back({"stabilizer_is_H", "|G_v| = |H|",
                                  rep.stabilizer.order() == cs.order(), false,
                                  "order " + std::to_string(rep.stabilizer.order())});
        }
        if (!ctx.output.empty()) write_text_file(ctx.output, format_graph_file(cg.graph));
    }
}

void run_wreath(CliContext& ctx, CertificateDocument& doc, const std::string& wri,
                bool full_verify) {
    WreathInstance inst = load_wreath(doc, wri, ctx);
    doc.payload["m"] = inst.m;
    doc.payload["n"] = inst.n;
    doc.payload["omega_degree"] = inst.omega_degree;
    doc.payload["group_order"] = inst.G.order();
    std::string reason;
    bool inv = wreath_invariants_hold(inst, reason);
    doc.checks.push_back({"block_invariants",
                          "tau^m = 1, H_i = H_0^{tau^i}, (a tau)^m restricted to the first "
                          "block equals a, and the a·tau conjugation chain",
                          inv, false, reason});
    if (full_verify)
        for (const auto& c : verify_wreath_theorem(inst)) doc.checks.push_back(c);
}

void run_graph_aut(CliContext& ctx, CertificateDocument& doc, const std::string& gph) {
    std::string text = read_text_file(gph);
    add_input(doc, gph, text);
    Graph g = parse_graph_file(text);
    PermutationGroup aut = graph_automorphism_group(g, ctx.max_vertices);
    doc.payload["vertices"] = g.vertex_count;
    doc.payload["aut_order"] = aut.order();
}

void run_graph_report(CliContext& ctx, CertificateDocument& doc, const std::string& gph,
                      const std::string& grp) {
    std::string text = read_text_file(gph);
    add_input(doc, gph, text);
    Graph g = parse_graph_file(text);
    std::optional<PermutationGroup> G;
    if (!grp.empty()) {
        GroupFile gf = load_group(doc, grp);
        G.emplace(gf.generators, std::vector<std::uint32_t>{}, ctx.seed);
    }
    TransitivityReport rep = transitivity_report(g, G);
    doc.payload["used_full_aut"] = rep.used_full_aut;
    doc.payload["group_order"] = rep.group_used.order();
    doc.payload["vertex_transitive"] = rep.vertex_transitive;
    doc.payload["edge_transitive"] = rep.edge_transitive;
    doc.payload["arc_transitive"] = rep.arc_transitive;
    doc.payload["hat"] = rep.hat;
    doc.payload["stabilizer_order"] = rep.stabilizer.order();
    doc.payload["stabilizer_concentric"] = rep.stabilizer_concentric.has_value();
}

void run_graph_quotient(CliContext& ctx, CertificateDocument& doc, const std::string& gph,
                        const std::string& grp, const std::string& ngrp) {
    std::string text = read_text_file(gph);
    add_input(doc, gph, text);
    Graph g = parse_graph_file(text);
    GroupFile gf = load_group(doc, grp);
    GroupFile nf = load_group(doc, ngrp);
    PermutationGroup G(gf.generators, {}, ctx.seed);
    PermutationGroup N(nf.generators, {}, ctx.seed);
    QuotientResult q = normal_quotient(g, G, N);
    doc.payload["orbits"] = q.orbit_partition.size();
    doc.payload["quotient_valency"] = q.quotient_valency;
    doc.payload["degenerate"] = q.degenerate;
    doc.payload["is_normal_cover"] = q.is_normal_cover;
    doc.payload["n_semiregular"] = q.n_semiregular;
    if (q.lemma_applicable)
        doc.checks.push_back({"solvable_normal_cover",
                              "solvable N in non-solvable G: the quotient is a cover and N is "
                              "semiregular",
                              !q.lemma_violated, false, q.lemma_note});
    if (!ctx.output.empty()) write_text_file(ctx.output, format_graph_file(q.quotient));
}

void run_graph_classify(CliContext& ctx, CertificateDocument& doc, const std::string& gph,
                        const std::string& grp) {
    std::string text = read_text_file(gph);
    add_input(doc, gph, text);
    Graph g = parse_graph_file(text);
    GroupFile gf = load_group(doc, grp);
    PermutationGroup G(gf.generators, {}, ctx.seed);
    BasicClassification cls = classify_basic(g, G);
    const char* names[] = {"not_basic", "quasiprimitive", "bi_quasiprimitive", "cycle"};
    doc.payload["type"] = names[static_cast<int>(cls.type)];
    doc.payload["quotient_valencies"] = cls.quotient_valencies;
    doc.payload["relative_to_supplied"] = cls.relative_to_supplied;
    doc.payload["aut_clause_verified"] = cls.aut_clause_verified;
}

void run_graph_cayley(CliContext& ctx, CertificateDocument& doc, const std::string& grp) {
    GroupFile gf = load_group(doc, grp);
    ElementSet elements = ElementSet::closure(gf.generators, ctx.max_elements);
    CayleyNormalityReport rep = cayley_normality_report(elements, gf.generators);
    doc.payload["group_order"] = elements.size();
    doc.payload["aut_order"] = rep.aut.order();
    doc.payload["r_normal"] = rep.r_normal;
    doc.payload["normalizer_order"] = rep.normalizer_order;
    doc.payload["aut_gs_order"] = rep.aut_gs_order;
    for (const auto& c : rep.checks) doc.checks.push_back(c);
    if (!ctx.output.empty()) write_text_file(ctx.output, format_graph_file(rep.graph));
}

void run_perm_order(CliContext& ctx, CertificateDocument& doc, const std::string& grp) {
    GroupFile gf = load_group(doc, grp);
    PermutationGroup G(gf.generators, {}, ctx.seed);
    doc.payload["group_order"] = G.order();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& g : gf.generators) arr.push_back(element_order(g));
    doc.payload["generator_orders"] = arr;
}

}  // namespace

int cli_dispatch(std::vector<std::string> args) {
    CLI::App app{"desk-scale toolkit for tetravalent half-arc-transitive graph constructions"};
    app.require_subcommand(1);
    CliContext ctx;
    app.add_option("--seed", ctx.seed, "chain randomization seed");
    app.add_option("--max-elements", ctx.max_elements, "explicit element-set cap");
    app.add_option("--max-vertices", ctx.max_vertices, "materialized graph vertex budget");
    app.add_option("--max-cosets", ctx.max_cosets, "coset enumeration budget");
    app.add_option("--jobs", ctx.jobs, "worker count for parallel sweeps");
    app.add_option("-o,--output", ctx.output, "artifact output file (witness / graph)");

    std::string grp, gph, ccs, wri, pres, name, hspec, ngrp;
    int n = 0;

    auto* concentric = app.add_subcommand("concentric", "concentric sequence tools");
    concentric->require_subcommand(1);
    auto* cc = concentric->add_subcommand("check", "test a generator sequence");
    cc->add_option("--grp", grp, "ordered generators (.grp)")->required();
    auto* cs = concentric->add_subcommand("search", "search a 2-group for a sequence");
    cs->add_option("--grp", grp, "group generators (.grp)")->required();
    cs->add_option("--n", n, "sequence length")->required();
    auto* cg = concentric->add_subcommand("catalog", "build a known family member");
    cg->add_option("name", name, "family name, e.g. D8xZ2^1 or H7")->required();

    auto* present = app.add_subcommand("present", "finite presentations");
    present->require_subcommand(1);
    auto* pe = present->add_subcommand("enumerate", "coset enumeration over the trivial subgroup");
    pe->add_option("--pres", pres, "presentation file (.pres)")->required();

    auto* construct = app.add_subcommand("construct", "build instances");
    construct->require_subcommand(1);
    auto* cm = construct->add_subcommand("mn", "twisted coset-graph instance");
    cm->add_option("--ccs", ccs, "concentric witness (.ccs)")->required();
    cm->add_option("--twist", hspec, "twist element h: e, canonical index, or cycles")->required();
    auto* cw = construct->add_subcommand("wreath", "block-imprimitive instance");
    cw->add_option("--wri", wri, "wreath input (.wri)")->required();

    auto* verify = app.add_subcommand("verify", "full certificates");
    verify->require_subcommand(1);
    auto* vm = verify->add_subcommand("mn", "twisted coset-graph certificate");
    vm->add_option("--ccs", ccs, "concentric witness (.ccs)")->required();
    vm->add_option("--twist", hspec, "twist element h: e, canonical index, or cycles")->required();
    auto* vw = verify->add_subcommand("wreath", "block-imprimitive certificate");
    vw->add_option("--wri", wri, "wreath input (.wri)")->required();

    auto* graph = app.add_subcommand("graph", "graph analysis");
    graph->require_subcommand(1);
    auto* ga = graph->add_subcommand("aut", "full automorphism group");
    ga->add_option("--graph", gph, "graph file (.gph)")->required();
    auto* gr = graph->add_subcommand("report", "transitivity report");
    gr->add_option("--graph", gph, "graph file (.gph)")->required();
    gr->add_option("--grp", grp, "acting group (.grp); omit to use the full automorphism group");
    auto* gq = graph->add_subcommand("quotient", "normal quotient");
    gq->add_option("--graph", gph, "graph file (.gph)")->required();
    gq->add_option("--grp", grp, "acting group (.grp)")->required();
    gq->add_option("--ngrp", ngrp, "normal subgroup (.grp)")->required();
    auto* gc = graph->add_subcommand("classify", "basic-type classification");
    gc->add_option("--graph", gph, "graph file (.gph)")->required();
    gc->add_option("--grp", grp, "acting group (.grp)")->required();
    auto* gy = graph->add_subcommand("cayley", "Cayley normality report");
    gy->add_option("--grp", grp, "connection set generators (.grp)")->required();

    auto* perm = app.add_subcommand("perm", "permutation utilities");
    perm->require_subcommand(1);
    auto* po = perm->add_subcommand("order", "group and generator orders");
    po->add_option("--grp", grp, "group generators (.grp)")->required();

    // let the global options (--seed, -o, ...) appear after a subcommand
    for (CLI::App* top : {concentric, present, construct, verify, graph, perm}) {
        top->fallthrough();
        for (CLI::App* sub : top->get_subcommands({})) sub->fallthrough();
    }

    std::vector<const char*> argv;
    argv.push_back("hat");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (const char* env = std::getenv("HAT_SEED")) ctx.seed = std::strtoull(env, nullptr, 0);
    set_sweep_jobs(ctx.jobs);

    CertificateDocument doc;
    doc.command = join_args(args);
    try {
        if (cc->parsed()) run_concentric_check(ctx, doc, grp);
        else if (cs->parsed()) run_concentric_search(ctx, doc, grp, n);
        else if (cg->parsed()) run_concentric_catalog(ctx, doc, name);
        else if (pe->parsed()) run_present_enumerate(ctx, doc, pres);
        else if (cm->parsed()) run_mn(ctx, doc, ccs, hspec, false);
        else if (vm->parsed()) run_mn(ctx, doc, ccs, hspec, true);
        else if (cw->parsed()) run_wreath(ctx, doc, wri, false);
        else if (vw->parsed()) run_wreath(ctx, doc, wri, true);
        else if (ga->parsed()) run_graph_aut(ctx, doc, gph);
        else if (gr->parsed()) run_graph_report(ctx, doc, gph, grp);
        else if (gq->parsed()) run_graph_quotient(ctx, doc, gph, grp, ngrp);
        else if (gc->parsed()) run_graph_classify(ctx, doc, gph, grp);
        else if (gy->parsed()) run_graph_cayley(ctx, doc, grp);
        else if (po->parsed()) run_perm_order(ctx, doc, grp);
        else return 1;
    } catch (const FalsificationError& e) {
        std::cerr << "falsified: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    emit(ctx, doc);
    return ctx.exit_code;
}

}  // namespace hat
