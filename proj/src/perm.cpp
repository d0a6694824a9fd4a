#include "hat/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hat {

Permutation::Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
    if (img_.empty() || img_.size() > kMaxDegree)
        throw InvalidInputError("permutation degree out of range");
    std::vector<bool> seen(img_.size(), false);
    for (std::uint32_t x : img_) {
        if (x >= img_.size() || seen[x])
            throw InvalidInputError("image sequence is not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::uint32_t degree) {
    std::vector<std::uint32_t> v(degree);
    std::iota(v.begin(), v.end(), 0u);
    Permutation p;
    p.img_ = std::move(v);
    return p;
}

bool Permutation::is_identity() const {
    for (std::uint32_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::uint32_t Permutation::first_moved() const {
    for (std::uint32_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return i;
    return degree();
}

static void require_same_degree(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw InvalidInputError("permutation degrees differ");
}

Permutation compose(const Permutation& a, const Permutation& b) {
    require_same_degree(a, b);
    std::vector<std::uint32_t> v(a.degree());
    for (std::uint32_t i = 0; i < a.degree(); ++i) v[i] = b.apply(a.apply(i));
    Permutation p;
    // bypass validation: composition of bijections is a bijection
    p = Permutation(std::move(v));
    return p;
}

Permutation inverse(const Permutation& p) {
    std::vector<std::uint32_t> v(p.degree());
    for (std::uint32_t i = 0; i < p.degree(); ++i) v[p.apply(i)] = i;
    return Permutation(std::move(v));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
    require_same_degree(p, g);
    std::vector<std::uint32_t> v(p.degree());
    for (std::uint32_t i = 0; i < p.degree(); ++i) v[g.apply(i)] = g.apply(p.apply(i));
    return Permutation(std::move(v));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
    return compose(compose(inverse(a), inverse(b)), compose(a, b));
}

Permutation power(const Permutation& p, std::int64_t e) {
    Permutation base = e < 0 ? inverse(p) : p;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    Permutation acc = Permutation::identity(p.degree());
    while (n) {
        if (n & 1) acc = compose(acc, base);
        base = compose(base, base);
        n >>= 1;
    }
    return acc;
}

std::uint64_t element_order(const Permutation& p) {
    std::vector<bool> seen(p.degree(), false);
    std::uint64_t ord = 1;
    for (std::uint32_t i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        std::uint32_t j = i;
        do {
            seen[j] = true;
            j = p.apply(j);
            ++len;
        } while (j != i);
        ord = std::lcm(ord, len);
    }
    return ord;
}

bool is_even(const Permutation& p) {
    std::vector<bool> seen(p.degree(), false);
    std::uint32_t transpositions = 0;
    for (std::uint32_t i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        std::uint32_t len = 0;
        std::uint32_t j = i;
        do {
            seen[j] = true;
            j = p.apply(j);
            ++len;
        } while (j != i);
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

std::string to_cycle_string(const Permutation& p) {
    std::ostringstream out;
    std::vector<bool> seen(p.degree(), false);
    bool any = false;
    for (std::uint32_t i = 0; i < p.degree(); ++i) {
        if (seen[i] || p.apply(i) == i) {
            seen[i] = true;
            continue;
        }
        any = true;
        out << '(';
        std::uint32_t j = i;
        bool first = true;
        do {
            if (!first) out << ' ';
            out << (j + 1);
            seen[j] = true;
            j = p.apply(j);
            first = false;
        } while (j != i);
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

Permutation parse_cycle_string(const std::string& text, std::uint32_t degree) {
    if (degree == 0 || degree > kMaxDegree)
        throw InvalidInputError("degree out of range");
    std::vector<std::uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    std::vector<bool> used(degree, false);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw InvalidInputError("expected '(' in cycle notation: " + text);
        ++i;
        std::vector<std::uint32_t> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw InvalidInputError("expected point in cycle notation: " + text);
            std::uint64_t v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            if (v < 1 || v > degree)
                throw InvalidInputError("point out of range in cycle notation: " + text);
            cycle.push_back(static_cast<std::uint32_t>(v - 1));
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
        }
        if (i >= text.size())
            throw InvalidInputError("unterminated cycle: " + text);
        ++i;  // ')'
        for (std::uint32_t pt : cycle) {
            if (used[pt]) throw InvalidInputError("point repeated in cycle notation: " + text);
            used[pt] = true;
        }
        for (std::size_t k = 0; k < cycle.size(); ++k)
            img[cycle[k]] = cycle[(k + 1) % cycle.size()];
        skip_ws();
    }
    return Permutation(std::move(img));
}

}  // namespace hat
