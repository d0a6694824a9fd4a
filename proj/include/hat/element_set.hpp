#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hat/perm.hpp"

namespace hat {

// Default admitted size for explicit element sets.
inline constexpr std::uint64_t kDefaultElementCap = 1ull << 18;

// An explicit finite set of permutations, canonically sorted by image
// sequence and hash-indexed.  The carrier for small subgroups where
// chain-based methods are overkill: double cosets, cores, intersections.
class ElementSet {
public:
    ElementSet() = default;

    // Closure of gens under products; throws OverCapError past cap.
    static ElementSet closure(const std::vector<Permutation>& gens,
                              std::uint64_t cap = kDefaultElementCap);
    // Adopts an explicit list (deduplicated, sorted); no closure check.
    static ElementSet from_elements(std::vector<Permutation> elems,
                                    std::uint64_t cap = kDefaultElementCap);

    std::size_t size() const { return elems_.size(); }
    std::uint32_t degree() const { return elems_.empty() ? 0 : elems_[0].degree(); }
    std::uint64_t cap() const { return cap_; }
    const Permutation& at(std::size_t i) const { return elems_[i]; }
    const std::vector<Permutation>& elements() const { return elems_; }

    bool contains(const Permutation& p) const { return index_.count(p) != 0; }
    // Index in the canonical (lexicographic) ordering, or nullopt.
    std::optional<std::uint32_t> index_of(const Permutation& p) const;
    std::uint32_t index_of_or_throw(const Permutation& p) const;
    std::uint32_t identity_index() const;

    bool is_closed() const;  // closed under product and inverse

    ElementSet conjugated_by(const Permutation& g) const;
    ElementSet intersect(const ElementSet& other) const;

    bool operator==(const ElementSet& o) const { return elems_ == o.elems_; }

private:
    void rebuild_index();
    std::vector<Permutation> elems_;
    std::unordered_map<Permutation, std::uint32_t, PermHash> index_;
    std::uint64_t cap_ = kDefaultElementCap;
};

// |H : H^g ∩ H|, computed by a membership sweep over H.
std::uint64_t index_of_self_intersection(const ElementSet& H, const Permutation& g);

// Whether HgH = Hg^{-1}H, i.e. whether some h ∈ H has g·h·g ∈ H.
bool double_cosets_equal(const ElementSet& H, const Permutation& g);

// Literal enumeration of the double coset HgH (test oracle scale only).
ElementSet double_coset(const ElementSet& H, const Permutation& g,
                        std::uint64_t cap = kDefaultElementCap);

// Worker count for the parallel membership sweeps (1 = serial).
void set_sweep_jobs(int jobs);
int sweep_jobs();

// Serial reference implementations, kept alongside the parallel sweeps
// for testing and benchmarking.
std::uint64_t index_of_self_intersection_serial(const ElementSet& H, const Permutation& g);
bool double_cosets_equal_serial(const ElementSet& H, const Permutation& g);

}  // namespace hat
