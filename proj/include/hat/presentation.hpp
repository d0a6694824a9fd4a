#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hat/element_set.hpp"
#include "hat/perm.hpp"

namespace hat {

// A word over generators: +k means generator k (1-based), -k its inverse.
using Word = std::vector<int>;

struct FinitePresentation {
    int generator_count = 0;
    std::vector<Word> relators;

    void validate() const;
};

inline constexpr std::uint64_t kDefaultMaxCosets = 1ull << 16;

struct CosetEnumeration {
    std::uint32_t coset_count = 0;
    // coset_table[c][2k] = c·g_k, coset_table[c][2k+1] = c·g_k^{-1}
    std::vector<std::vector<std::uint32_t>> table;
    // Regular representation: one permutation of the cosets per generator.
    std::vector<Permutation> generator_perms;

    Permutation evaluate(const Word& w) const;
};

// HLT coset enumeration over the trivial subgroup.  Coset numbering follows
// first-definition order, so tables are reproducible.  Throws ExceededError
// if the table does not close within max_cosets rows.
CosetEnumeration todd_coxeter(const FinitePresentation& pres,
                              std::uint64_t max_cosets = kDefaultMaxCosets);

// The 128-element group on seven involutions with overlapping dihedral
// relations whose regular representation realizes the largest known
// non-abelian vertex stabilizer family member.
FinitePresentation h7_presentation();

// R(g): x ↦ xg on the canonical element ordering; one permutation per
// designated generator.  gens must lie in elements.
std::vector<Permutation> regular_rep_from_multiplication(const ElementSet& elements,
                                                         const std::vector<Permutation>& gens);

// ".pres" text format: `gens n`, then one relator per line as a word in
// a1..an with ' for inverse.
FinitePresentation parse_presentation(const std::string& text);
std::string format_presentation(const FinitePresentation& pres);

}  // namespace hat
