#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hat/errors.hpp"

namespace hat {

// Hard ceiling on permutation degree.
inline constexpr std::uint32_t kMaxDegree = 1u << 16;

// A permutation of {0..degree-1}, stored as its image sequence.
// Convention: permutations act on the right of points (x^p = img[x]),
// and compose(p, q) means "apply p, then q".  All file I/O is 1-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint32_t> images);

    static Permutation identity(std::uint32_t degree);

    std::uint32_t degree() const { return static_cast<std::uint32_t>(img_.size()); }
    std::uint32_t apply(std::uint32_t point) const { return img_[point]; }
    const std::vector<std::uint32_t>& images() const { return img_; }

    bool is_identity() const;
    // Smallest moved point, or degree() if identity.
    std::uint32_t first_moved() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    // Lexicographic on image sequences; the canonical element order everywhere.
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<std::uint32_t> img_;
};

// apply a, then b
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
// g^-1 * p * g
Permutation conjugate(const Permutation& p, const Permutation& g);
// a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);
Permutation power(const Permutation& p, std::int64_t e);
std::uint64_t element_order(const Permutation& p);
bool is_even(const Permutation& p);

// Cycle notation, 1-based: "(1 2 3)(4 5)", identity prints as "()".
std::string to_cycle_string(const Permutation& p);
// Parses "(1 2 3)(4 5)" against a fixed degree.
Permutation parse_cycle_string(const std::string& text, std::uint32_t degree);

struct PermHash {
    std::size_t operator()(const Permutation& p) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint32_t x : p.images()) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace hat
