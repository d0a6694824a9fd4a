#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hat/check.hpp"
#include "hat/concentric.hpp"
#include "hat/element_set.hpp"
#include "hat/group.hpp"
#include "hat/perm.hpp"

namespace hat {

inline constexpr std::uint32_t kDefaultMaxVertices = 50000;

// Simple undirected graph with sorted neighbor lists.
struct Graph {
    std::uint32_t vertex_count = 0;
    std::vector<std::vector<std::uint32_t>> adjacency;

    // Builds from an edge list (0-based); rejects loops and duplicates.
    static Graph from_edges(std::uint32_t n,
                            const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

    bool adjacent(std::uint32_t u, std::uint32_t v) const;
    bool is_connected() const;
    // Common valency when the graph is regular, nullopt otherwise.
    std::optional<std::uint32_t> valency() const;
    // All edges as ordered pairs u < v.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
    std::uint64_t edge_count() const;
};

// A materialized coset graph: vertices are right cosets of H, named by
// their canonical (lex-min) representatives.
struct CosetGraph {
    Graph graph;
    ElementSet H;
    Permutation g;
    std::vector<Permutation> transversal;  // canonical rep per vertex
    std::uint64_t expected_valency = 0;    // the index-formula value

    std::unordered_map<Permutation, std::uint32_t, PermHash> rep_index;

    // Vertex permutation induced by right multiplication with p.
    Permutation action_of(const Permutation& p) const;
};

// Cos(G, H, H{g,g⁻¹}H): BFS over cosets from H; adjacency Hx ~ Hy iff
// yx⁻¹ lies in HgH ∪ Hg⁻¹H.  The materialized valency is verified
// against |H : H^g ∩ H| (doubled when the double cosets differ).
CosetGraph materialize_coset_graph(const PermutationGroup& G, const ElementSet& H,
                                   const Permutation& g,
                                   std::uint32_t max_vertices = kDefaultMaxVertices);

// Cay(G, S) on the canonical element ordering: x ~ s·x for s ∈ S.
// S must be inverse-closed and identity-free.
Graph cayley_graph(const ElementSet& elements, const std::vector<Permutation>& S);

// Full automorphism group by equitable-partition refinement plus
// per-level witness backtracking (one generator per base-image coset).
// Every returned generator is verified to preserve adjacency.
PermutationGroup graph_automorphism_group(const Graph& graph,
                                          std::uint32_t max_vertices = kDefaultMaxVertices);

struct TransitivityReport {
    bool used_full_aut = false;
    PermutationGroup group_used;
    bool vertex_transitive = false;
    bool edge_transitive = false;
    bool arc_transitive = false;
    bool hat = false;
    std::uint64_t arc_orbit_size = 0;  // orbit of the seed arc
    PermutationGroup stabilizer;       // at vertex 1
    std::optional<ConcentricSequence> stabilizer_concentric;
};

// Orbit analysis of G (or the computed full automorphism group when G
// is omitted) on vertices, edges, and arcs; hat per the biconditional
// vertex- ∧ edge- ∧ ¬arc-transitive.  If hat holds and the stabilizer
// is a 2-group of order ≤ 2¹⁴, a concentric sequence is searched for
// and attached.
TransitivityReport transitivity_report(const Graph& graph,
                                       const std::optional<PermutationGroup>& G = std::nullopt);

struct QuotientResult {
    std::vector<std::vector<std::uint32_t>> orbit_partition;
    Graph quotient;
    std::uint32_t quotient_valency = 0;
    bool degenerate = false;  // N transitive: single vertex, valency 0
    bool is_normal_cover = false;
    bool n_semiregular = false;
    // The solvable-normal-subgroup cover property: evaluated only when
    // the graph is tetravalent G-HAT, G is non-solvable, and N is
    // solvable; a violation is a falsification of the cover lemma.
    bool lemma_applicable = false;
    bool lemma_violated = false;
    std::string lemma_note;
};

QuotientResult normal_quotient(const Graph& graph, const PermutationGroup& G,
                               const PermutationGroup& N);

enum class BasicType { NotBasic, Quasiprimitive, BiQuasiprimitive, CycleType };

struct BasicClassification {
    BasicType type = BasicType::NotBasic;
    // When not basic: the witnessing normal subgroup (quotient valency > 2).
    std::optional<PermutationGroup> witness;
    std::vector<std::uint32_t> quotient_valencies;  // one per tested N
    bool relative_to_supplied = false;  // decided against a supplied list only
    bool aut_clause_verified = false;   // bi-quasiprimitive clause on full Aut
};

// Decides basicness against the minimal normal subgroups of G (computed
// when |G| ≤ 10⁶, else the caller must supply candidates and the result
// is relative to that list).
BasicClassification classify_basic(const Graph& graph, const PermutationGroup& G,
                                   const std::vector<PermutationGroup>& supplied = {});

// Aut(G, S) = {α ∈ Aut(G) | S^α = S}, as permutations of the canonical
// element ordering.  Exhaustive over generator images; |elements| ≤ 2¹².
PermutationGroup aut_stabilizing_set(const ElementSet& elements,
                                     const std::vector<Permutation>& S);

struct CayleyNormalityReport {
    Graph graph;
    PermutationGroup aut;
    PermutationGroup R;  // the right-regular subgroup
    bool r_normal = false;
    std::uint64_t normalizer_order = 0;
    std::uint64_t aut_gs_order = 0;  // |Aut(G,S)|
    std::vector<CheckItem> checks;
};

// Computes Aut(Cay(G,S)), tests R(G) ⊴ Aut, verifies the normalizer
// factorization |N_Aut(R)| = |G|·|Aut(G,S)|, and asserts that the
// vertex stabilizer in the normalizer acts faithfully on the
// neighborhood (a violated faithfulness check is a falsification).
CayleyNormalityReport cayley_normality_report(const ElementSet& elements,
                                              const std::vector<Permutation>& S);

}  // namespace hat
