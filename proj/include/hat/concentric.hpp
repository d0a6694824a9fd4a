#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hat/element_set.hpp"
#include "hat/perm.hpp"

namespace hat {

// A recognized concentric generating sequence a_1..a_n of a 2-group H:
// each a_i is an involution, every consecutive window ⟨a_i..a_j⟩ has
// order 2^{j-i+1}, and the shift map a_i ↦ a_{i+1} extends to an
// isomorphism φ: B = ⟨a_1..a_{n-1}⟩ → C = ⟨a_2..a_n⟩.
//
// φ is stored as an explicit element-to-element table over the canonical
// (lexicographic) ordering of H, which is also the point carrier used by
// the coset-graph constructions downstream.
struct ConcentricSequence {
    int n = 0;
    std::vector<Permutation> gens;           // a_1..a_n on the original carrier
    ElementSet H, B, C;                      // subsets of the carrier's permutations
    std::vector<std::int32_t> phi;           // H index -> H index; -1 outside B
    std::vector<std::uint32_t> gen_index;    // H index of each a_i
    std::vector<Permutation> regular_gens;   // R(a_i) on |H| points

    std::uint32_t order() const { return static_cast<std::uint32_t>(H.size()); }
    std::uint32_t identity_index() const { return H.identity_index(); }
    std::uint32_t mult(std::uint32_t i, std::uint32_t j) const {
        return H.index_of_or_throw(compose(H.at(i), H.at(j)));
    }
    bool in_B(std::uint32_t h_index) const { return phi[h_index] >= 0; }
    // R(x) for an arbitrary element, on the canonical carrier.
    Permutation regular_of(std::uint32_t h_index) const;
    bool is_abelian() const;
};

struct ConcentricCheck {
    std::optional<ConcentricSequence> seq;
    std::string rejection;  // names the first failed condition
    bool accepted() const { return seq.has_value(); }
};

// Decides whether gens form a concentric sequence; on rejection the
// report names the failed condition (non-involution index, wrong window
// order, or a φ-conflict witness).
ConcentricCheck check_concentric(const std::vector<Permutation>& gens);

// Exhaustive backtracking search for a concentric sequence of length n
// inside H (|H| must equal 2^n).  Candidates are tried with central
// involutions first; the first success in that fixed order wins.
std::optional<ConcentricSequence> find_concentric_sequence(const ElementSet& H, int n);

// Known concentric families by name: "Z2^m", "D8xZ2^m", "D8^2xZ2^m"
// (m spelled out, e.g. "D8xZ2^2"; "D8" = m 0), "H7", "H7xZ2".
ConcentricSequence catalog(const std::string& name);

}  // namespace hat
