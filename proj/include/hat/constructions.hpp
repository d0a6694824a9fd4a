#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hat/check.hpp"
#include "hat/concentric.hpp"
#include "hat/group.hpp"
#include "hat/perm.hpp"

namespace hat {

// The twisting permutation τ_h on the canonical element carrier of H:
// b ↦ b^φ for b ∈ B, and a_n·b ↦ a_1·h·b^φ on the other coset.  The
// identity point is always fixed.  h is given by its canonical index
// and must lie in B.
Permutation build_tau_h(const ConcentricSequence& H, std::uint32_t h_index);

// First i (1-based) with τ⁻¹R(a_i)τ ≠ R(a_{i+1}), or 0 when the
// conjugation identity holds for all i < n.
int conjugation_shift_violation(const ConcentricSequence& H, const Permutation& tau);

// The coset-graph construction data G = ⟨τ_h, R(H)⟩ for non-abelian H,
// together with its certificate: core-freeness, double-coset inequality,
// intersection index 2, generation, and the stabilizer-order count.
struct MNInstance {
    ConcentricSequence H;
    std::uint32_t h_index;
    Permutation tau_h;
    ElementSet RH;          // R(H) as an explicit set on the carrier
    PermutationGroup G;
    std::vector<CheckItem> checks;

    bool verified() const { return all_pass(checks); }
};

MNInstance build_mn_instance(const ConcentricSequence& H, std::uint32_t h_index);

// The four entry conditions of the wreath construction, plus bounded
// verification of the simplicity/primitivity hypotheses on W.
struct C1C4Report {
    bool c1 = false;  // ⟨Hgens, a⟩ = W
    bool c2 = false;  // involutions generating a regular subgroup on Δ
    bool c3 = false;  // window orders 2^{j-i+1}
    bool c4 = false;  // h_i^a = h_{i+1}
    int c4_fail_index = 0;  // 1-based index of the first C4 failure
    bool w_simple = false;
    bool w_primitive = false;
    // Set when |W| is too large to verify simplicity/primitivity at
    // desk scale; the flags above are then not meaningful.
    bool hypotheses_assumed = false;

    bool all() const { return c1 && c2 && c3 && c4; }
};

C1C4Report check_c1_c4(const PermutationGroup& W, const Permutation& a,
                       const std::vector<Permutation>& Hgens);

// Searches W for an element a with 1^a = 1, h_i^a = h_{i+1} for all
// i < n, and ⟨Hgens, a⟩ = W.  Method: one transporter t found by
// backtracking on images, then a sweep over t·C with C the centralizer
// of {h_2..h_n} in the symmetric group, in canonical order (so the
// result is deterministic).  Returns nullopt when the sweep exhausts.
std::optional<Permutation> search_shift_element(const PermutationGroup& W,
                                                const std::vector<Permutation>& Hgens);

// The block-imprimitive construction: m copies of Δ = {1..2ⁿ}, the
// block-shift τ, K = H₀×…×H_{m-1} generated by the h_j^{τ^i}, and the
// edge element aτ.  When m = 1, τ is the identity and G = W.
struct WreathInstance {
    PermutationGroup W;
    Permutation a;
    std::vector<Permutation> Hgens;
    int m = 1;
    int n = 0;
    std::uint32_t block_size = 0;        // 2ⁿ
    std::uint32_t omega_degree = 0;      // m·2ⁿ
    Permutation tau;
    std::vector<Permutation> wgens_ext;  // W generators extended to Ω
    std::vector<Permutation> kgens;      // h_j^{τ^i}, blocks outermost
    Permutation a_tau;
    PermutationGroup G;
};

WreathInstance build_wreath_instance(const PermutationGroup& W, const Permutation& a,
                                     const std::vector<Permutation>& Hgens, int m);

// Structural invariants of a built instance: τ^m = 1, H_i = H₀^{τ^i},
// (aτ)^m restricted to the first block equals a, and (for m ≥ 2) the
// displayed aτ-conjugation chain
//   h₁^{τ^{m-1}} ↦ h₁ ↦ h₂^τ ↦ … ↦ h₂^{τ^{m-1}} ↦ h₂ ↦ … ↦ h_n.
// On failure, `reason` names the violated identity.
bool wreath_invariants_hold(const WreathInstance& inst, std::string& reason);

// The five theorem checks, each computed: (i) G = ⟨K, aτ⟩,
// (ii) |K : K^{aτ} ∩ K| = 2, (iii) the double-coset comparison
// (reported, advisory), (iv) K core-free in G, (v) B^{aτ} = C for the
// proof subgroups B, C.
std::vector<CheckItem> verify_wreath_theorem(const WreathInstance& inst);

}  // namespace hat
