#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "hat/element_set.hpp"
#include "hat/perm.hpp"

namespace hat {

// A permutation group given by generators, with a base and strong
// generating set built on demand for order / membership / stabilizer
// queries.  Values are immutable; the one-time chain construction is
// guarded so concurrent readers see either nothing or the finished chain.
//
// The chain is built by random sifting (seeded, default fixed) followed
// by a deterministic verification pass over all Schreier generators, so
// results are reproducible and provably complete.
class PermutationGroup {
public:
    // base_hint forces the leading base points (used by point_stabilizer).
    explicit PermutationGroup(std::vector<Permutation> gens,
                              std::vector<std::uint32_t> base_hint = {},
                              std::uint64_t seed = kDefaultSeed);
    // Trivial group of the given degree.
    static PermutationGroup trivial(std::uint32_t degree);

    static constexpr std::uint64_t kDefaultSeed = 0x48415453454544ull;

    std::uint32_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    std::uint64_t order() const;
    bool contains(const Permutation& p) const;
    bool is_trivial() const { return order() == 1; }

    std::vector<std::uint32_t> orbit(std::uint32_t point) const;
    std::vector<std::vector<std::uint32_t>> orbits() const;

    bool is_transitive() const;
    bool is_semiregular() const;  // all point stabilizers trivial
    bool is_regular() const;

    PermutationGroup point_stabilizer(std::uint32_t point) const;

    // Explicit elements; throws OverCapError when order() > cap.
    ElementSet enumerate_elements(std::uint64_t cap = kDefaultElementCap) const;

    // Base actually chosen by the chain (leading entries follow base_hint).
    std::vector<std::uint32_t> base() const;

private:
    struct Chain;
    struct ChainBox;
    const Chain& chain() const;

    std::uint32_t degree_ = 0;
    std::vector<Permutation> gens_;
    std::vector<std::uint32_t> base_hint_;
    std::uint64_t seed_ = kDefaultSeed;
    std::shared_ptr<ChainBox> box_;
};

// Smallest normal subgroup of G containing S.
PermutationGroup normal_closure(const PermutationGroup& G, const std::vector<Permutation>& S);
bool is_normal(const PermutationGroup& G, const PermutationGroup& N);
PermutationGroup derived_subgroup(const PermutationGroup& G);
bool is_solvable(const PermutationGroup& G);

// ⋂_{g∈G} H^g as a fixed point of pairwise intersections over generators.
ElementSet core_of(const ElementSet& H, const PermutationGroup& G);

// One representative per conjugacy class (requires explicit enumeration).
std::vector<Permutation> conjugacy_class_representatives(const PermutationGroup& G,
                                                         std::uint64_t cap = kDefaultElementCap);

// All minimal normal subgroups, via normal closures of class representatives.
std::vector<PermutationGroup> minimal_normal_subgroups(const PermutationGroup& G,
                                                       std::uint64_t cap = kDefaultElementCap);

bool is_simple(const PermutationGroup& G, std::uint64_t cap = kDefaultElementCap);
bool is_primitive(const PermutationGroup& G);

}  // namespace hat
