#include "hat/element_set.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hat {

namespace {
int g_sweep_jobs = 1;
}

void set_sweep_jobs(int jobs) { g_sweep_jobs = jobs < 1 ? 1 : jobs; }
int sweep_jobs() { return g_sweep_jobs; }

void ElementSet::rebuild_index() {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    index_.clear();
    index_.reserve(elems_.size() * 2);
    for (std::uint32_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
}

ElementSet ElementSet::closure(const std::vector<Permutation>& gens, std::uint64_t cap) {
    if (gens.empty()) throw InvalidInputError("closure needs at least one generator");
    std::uint32_t deg = gens[0].degree();
    for (const auto& g : gens)
        if (g.degree() != deg) throw InvalidInputError("generator degrees differ");

    ElementSet s;
    s.cap_ = cap;
    std::unordered_map<Permutation, std::uint32_t, PermHash> seen;
    std::vector<Permutation> queue{Permutation::identity(deg)};
    seen.emplace(queue[0], 0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Permutation cur = queue[head];
        for (const auto& g : gens) {
            Permutation next = compose(cur, g);
            if (seen.emplace(next, 0).second) {
                if (queue.size() + 1 > cap) throw OverCapError(queue.size() + 1, cap);
                queue.push_back(std::move(next));
            }
        }
    }
    s.elems_ = std::move(queue);
    s.rebuild_index();
    return s;
}

ElementSet ElementSet::from_elements(std::vector<Permutation> elems, std::uint64_t cap) {
    if (elems.empty()) throw InvalidInputError("empty element set");
    if (elems.size() > cap) throw OverCapError(elems.size(), cap);
    std::uint32_t deg = elems[0].degree();
    for (const auto& g : elems)
        if (g.degree() != deg) throw InvalidInputError("element degrees differ");
    ElementSet s;
    s.cap_ = cap;
    s.elems_ = std::move(elems);
    s.rebuild_index();
    return s;
}

std::optional<std::uint32_t> ElementSet::index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t ElementSet::index_of_or_throw(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw InvalidInputError("permutation not in element set");
    return it->second;
}

std::uint32_t ElementSet::identity_index() const {
    return index_of_or_throw(Permutation::identity(degree()));
}

bool ElementSet::is_closed() const {
    for (const auto& a : elems_) {
        if (!contains(inverse(a))) return false;
        for (const auto& b : elems_)
            if (!contains(compose(a, b))) return false;
    }
    return true;
}

ElementSet ElementSet::conjugated_by(const Permutation& g) const {
    std::vector<Permutation> out;
    out.reserve(elems_.size());
    for (const auto& e : elems_) out.push_back(conjugate(e, g));
    return from_elements(std::move(out), cap_);
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
    std::vector<Permutation> out;
    for (const auto& e : elems_)
        if (other.contains(e)) out.push_back(e);
    if (out.empty()) throw InternalError("subgroup intersection lost the identity");
    return from_elements(std::move(out), cap_);
}

std::uint64_t index_of_self_intersection_serial(const ElementSet& H, const Permutation& g) {
    std::uint64_t hits = 0;
    for (const auto& h : H.elements())
        if (H.contains(conjugate(h, g))) ++hits;
    return H.size() / hits;
}

std::uint64_t index_of_self_intersection(const ElementSet& H, const Permutation& g) {
#ifdef _OPENMP
    if (g_sweep_jobs > 1) {
        const auto n = static_cast<std::int64_t>(H.size());
        std::uint64_t hits = 0;
#pragma omp parallel for reduction(+ : hits) num_threads(g_sweep_jobs)
        for (std::int64_t i = 0; i < n; ++i)
            if (H.contains(conjugate(H.at(static_cast<std::size_t>(i)), g))) ++hits;
        return H.size() / hits;
    }
#endif
    return index_of_self_intersection_serial(H, g);
}

bool double_cosets_equal_serial(const ElementSet& H, const Permutation& g) {
    // g^{-1} ∈ HgH  ⟺  ∃ h: g·h·g ∈ H
    for (const auto& h : H.elements())
        if (H.contains(compose(compose(g, h), g))) return true;
    return false;
}

bool double_cosets_equal(const ElementSet& H, const Permutation& g) {
#ifdef _OPENMP
    if (g_sweep_jobs > 1) {
        const auto n = static_cast<std::int64_t>(H.size());
        std::atomic<bool> found{false};
#pragma omp parallel for num_threads(g_sweep_jobs)
        for (std::int64_t i = 0; i < n; ++i) {
            if (found.load(std::memory_order_relaxed)) continue;
            if (H.contains(compose(compose(g, H.at(static_cast<std::size_t>(i))), g)))
                found.store(true, std::memory_order_relaxed);
        }
        return found.load();
    }
#endif
    return double_cosets_equal_serial(H, g);
}

ElementSet double_coset(const ElementSet& H, const Permutation& g, std::uint64_t cap) {
    std::vector<Permutation> out;
    for (const auto& a : H.elements())
        for (const auto& b : H.elements()) {
            if (out.size() + 1 > cap) throw OverCapError(out.size() + 1, cap);
            out.push_back(compose(compose(a, g), b));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return ElementSet::from_elements(std::move(out), cap);
}

}  // namespace hat
