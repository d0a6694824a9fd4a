#include "hat/group.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace hat {

namespace {

struct Level {
    std::uint32_t base = 0;
    std::vector<Permutation> gens;  // strong generators fixing all earlier base points
    // Schreier vector: orbit of base under gens.
    std::vector<std::int32_t> where;     // point -> orbit position, -1 outside
    std::vector<std::uint32_t> orbit;    // positions -> points
    std::vector<std::int32_t> from_pos;  // predecessor position (-1 at root)
    std::vector<std::int32_t> via_gen;   // generator used on the forward step

    void recompute_orbit(std::uint32_t degree) {
        where.assign(degree, -1);
        orbit.clear();
        from_pos.clear();
        via_gen.clear();
        orbit.push_back(base);
        from_pos.push_back(-1);
        via_gen.push_back(-1);
        where[base] = 0;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            std::uint32_t p = orbit[head];
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                std::uint32_t q = gens[gi].apply(p);
                if (where[q] < 0) {
                    where[q] = static_cast<std::int32_t>(orbit.size());
                    orbit.push_back(q);
                    from_pos.push_back(static_cast<std::int32_t>(head));
                    via_gen.push_back(static_cast<std::int32_t>(gi));
                }
            }
        }
    }

    // u with base^u = point, rebuilt from the Schreier vector.
    Permutation transversal(std::uint32_t point, std::uint32_t degree) const {
        std::vector<std::int32_t> path;
        std::int32_t pos = where[point];
        while (from_pos[pos] >= 0) {
            path.push_back(via_gen[pos]);
            pos = from_pos[pos];
        }
        Permutation u = Permutation::identity(degree);
        for (auto it = path.rbegin(); it != path.rend(); ++it) u = compose(u, gens[*it]);
        return u;
    }
};

}  // namespace

struct PermutationGroup::Chain {
    std::uint32_t degree = 0;
    std::vector<Level> levels;

    // Sift g through levels starting at `from`; returns residue and the
    // level where sifting stopped (levels.size() if it ran off the end).
    std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const {
        for (std::size_t k = from; k < levels.size(); ++k) {
            std::uint32_t p = g.apply(levels[k].base);
            if (levels[k].where[p] < 0) return {std::move(g), k};
            Permutation u = levels[k].transversal(p, degree);
            g = compose(g, inverse(u));
        }
        return {std::move(g), levels.size()};
    }

    // g fixes base[0..i-1] and is not the identity.
    void add_generator(std::size_t i, const Permutation& g) {
        if (i == levels.size()) {
            Level lv;
            lv.base = g.first_moved();
            levels.push_back(std::move(lv));
        }
        for (std::size_t k = 0; k <= i; ++k) {
            levels[k].gens.push_back(g);
            levels[k].recompute_orbit(degree);
        }
    }

    void sift_in(const Permutation& g) {
        auto [h, j] = strip(g, 0);
        if (!h.is_identity()) add_generator(j, h);
    }

    // Deterministic completeness pass: every Schreier generator of every
    // level must sift to the identity through the levels below it.
    void verify() {
        std::size_t k = levels.size();
        while (k > 0) {
            Level& lv = levels[k - 1];
            bool clean = true;
            for (std::size_t pos = 0; pos < lv.orbit.size() && clean; ++pos) {
                Permutation u = lv.transversal(lv.orbit[pos], degree);
                for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) {
                    std::uint32_t q = lv.gens[gi].apply(lv.orbit[pos]);
                    Permutation sg = compose(compose(u, lv.gens[gi]),
                                             inverse(lv.transversal(q, degree)));
                    auto [h, j] = strip(std::move(sg), k);
                    if (!h.is_identity()) {
                        add_generator(j, h);
                        clean = false;
                        break;
                    }
                }
            }
            if (clean)
                --k;
            else
                k = levels.size();  // deeper levels changed, re-verify them
        }
    }

    std::uint64_t order() const {
        std::uint64_t o = 1;
        for (const auto& lv : levels) o = checked_mul(o, lv.orbit.size());
        return o;
    }
};

struct PermutationGroup::ChainBox {
    std::once_flag once;
    std::unique_ptr<Chain> chain;
};

PermutationGroup::PermutationGroup(std::vector<Permutation> gens,
                                   std::vector<std::uint32_t> base_hint, std::uint64_t seed)
    : gens_(std::move(gens)), base_hint_(std::move(base_hint)), seed_(seed),
      box_(std::make_shared<ChainBox>()) {
    if (gens_.empty()) throw InvalidInputError("permutation group needs at least one generator");
    degree_ = gens_[0].degree();
    if (degree_ > kMaxDegree) throw InvalidInputError("degree exceeds ceiling");
    for (const auto& g : gens_)
        if (g.degree() != degree_) throw InvalidInputError("generator degrees differ");
    for (std::uint32_t b : base_hint_)
        if (b >= degree_) throw InvalidInputError("base point out of range");
}

PermutationGroup PermutationGroup::trivial(std::uint32_t degree) {
    return PermutationGroup({Permutation::identity(degree)});
}

const PermutationGroup::Chain& PermutationGroup::chain() const {
    std::call_once(box_->once, [this] {
        auto c = std::make_unique<Chain>();
        c->degree = degree_;
        for (std::uint32_t b : base_hint_) {
            Level lv;
            lv.base = b;
            lv.recompute_orbit(degree_);
            c->levels.push_back(std::move(lv));
        }
        for (const auto& g : gens_)
            if (!g.is_identity()) c->sift_in(g);

        // Randomized fill via product replacement, then a deterministic
        // verification pass that proves the chain complete.
        std::vector<Permutation> nontrivial;
        for (const auto& g : gens_)
            if (!g.is_identity()) nontrivial.push_back(g);
        if (!nontrivial.empty()) {
            std::mt19937_64 rng(seed_);
            std::vector<Permutation> state;
            for (std::size_t i = 0; i < 8; ++i)
                state.push_back(nontrivial[i % nontrivial.size()]);
            int quiet = 0;
            for (int iter = 0; iter < 2000 && quiet < 30; ++iter) {
                std::size_t i = rng() % state.size();
                std::size_t j = rng() % state.size();
                if (i == j) continue;
                state[i] = (rng() & 1) ? compose(state[i], state[j])
                                       : compose(state[i], inverse(state[j]));
                auto [h, lvl] = c->strip(state[i], 0);
                if (h.is_identity()) {
                    ++quiet;
                } else {
                    c->add_generator(lvl, h);
                    quiet = 0;
                }
            }
        }
        c->verify();
        box_->chain = std::move(c);
    });
    return *box_->chain;
}

std::uint64_t PermutationGroup::order() const { return chain().order(); }

bool PermutationGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    if (p.is_identity()) return true;
    auto [h, lvl] = chain().strip(p, 0);
    (void)lvl;
    return h.is_identity();
}

std::vector<std::uint32_t> PermutationGroup::orbit(std::uint32_t point) const {
    if (point >= degree_) throw InvalidInputError("point out of range");
    std::vector<bool> seen(degree_, false);
    std::vector<std::uint32_t> out{point};
    seen[point] = true;
    for (std::size_t head = 0; head < out.size(); ++head)
        for (const auto& g : gens_) {
            std::uint32_t q = g.apply(out[head]);
            if (!seen[q]) {
                seen[q] = true;
                out.push_back(q);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::uint32_t>> PermutationGroup::orbits() const {
    std::vector<bool> seen(degree_, false);
    std::vector<std::vector<std::uint32_t>> parts;
    for (std::uint32_t p = 0; p < degree_; ++p) {
        if (seen[p]) continue;
        auto orb = orbit(p);
        for (std::uint32_t q : orb) seen[q] = true;
        parts.push_back(std::move(orb));
    }
    return parts;
}

bool PermutationGroup::is_transitive() const { return orbit(0).size() == degree_; }

bool PermutationGroup::is_semiregular() const {
    std::uint64_t ord = order();
    for (const auto& orb : orbits())
        if (orb.size() != ord) return false;
    return true;
}

bool PermutationGroup::is_regular() const { return is_transitive() && order() == degree_; }

PermutationGroup PermutationGroup::point_stabilizer(std::uint32_t point) const {
    if (point >= degree_) throw InvalidInputError("point out of range");
    PermutationGroup with_base(gens_, {point}, seed_);
    const Chain& c = with_base.chain();
    std::vector<Permutation> sgens;
    if (c.levels.size() > 1) sgens = c.levels[1].gens;
    if (sgens.empty()) return trivial(degree_);
    return PermutationGroup(std::move(sgens), {}, seed_);
}

ElementSet PermutationGroup::enumerate_elements(std::uint64_t cap) const {
    std::uint64_t ord = order();
    if (ord > cap) throw OverCapError(ord, cap);
    std::vector<Permutation> gens = gens_;
    return ElementSet::closure(gens, cap);
}

std::vector<std::uint32_t> PermutationGroup::base() const {
    std::vector<std::uint32_t> b;
    for (const auto& lv : chain().levels) b.push_back(lv.base);
    return b;
}

PermutationGroup normal_closure(const PermutationGroup& G, const std::vector<Permutation>& S) {
    std::vector<Permutation> ngens;
    for (const auto& s : S) {
        if (s.degree() != G.degree()) throw InvalidInputError("degree mismatch in normal closure");
        if (!s.is_identity()) ngens.push_back(s);
    }
    if (ngens.empty()) return PermutationGroup::trivial(G.degree());
    for (;;) {
        PermutationGroup N(ngens);
        std::vector<Permutation> fresh;
        for (const auto& n : ngens)
            for (const auto& g : G.generators()) {
                Permutation c = conjugate(n, g);
                if (!N.contains(c)) fresh.push_back(std::move(c));
            }
        if (fresh.empty()) return N;
        ngens.insert(ngens.end(), fresh.begin(), fresh.end());
    }
}

bool is_normal(const PermutationGroup& G, const PermutationGroup& N) {
    for (const auto& n : N.generators())
        for (const auto& g : G.generators())
            if (!N.contains(conjugate(n, g))) return false;
    return true;
}

PermutationGroup derived_subgroup(const PermutationGroup& G) {
    std::vector<Permutation> comms;
    const auto& gens = G.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Permutation c = commutator(gens[i], gens[j]);
            if (!c.is_identity()) comms.push_back(std::move(c));
        }
    return normal_closure(G, comms);
}

bool is_solvable(const PermutationGroup& G) {
    PermutationGroup d = G;
    for (int i = 0; i < 128; ++i) {
        PermutationGroup next = derived_subgroup(d);
        std::uint64_t o = next.order();
        if (o == 1) return true;
        if (o == d.order()) return false;
        d = std::move(next);
    }
    throw InternalError("derived series did not stabilize");
}

ElementSet core_of(const ElementSet& H, const PermutationGroup& G) {
    for (const auto& h : H.elements())
        if (!G.contains(h)) throw InvalidInputError("H is not contained in G");
    ElementSet C = H;
    for (;;) {
        std::size_t before = C.size();
        for (const auto& g : G.generators()) C = C.intersect(C.conjugated_by(g));
        if (C.size() == before) return C;
    }
}

std::vector<Permutation> conjugacy_class_representatives(const PermutationGroup& G,
                                                         std::uint64_t cap) {
    ElementSet E = G.enumerate_elements(cap);
    std::vector<bool> done(E.size(), false);
    std::vector<Permutation> reps;
    for (std::size_t i = 0; i < E.size(); ++i) {
        if (done[i]) continue;
        reps.push_back(E.at(i));
        std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(i)};
        done[i] = true;
        while (!stack.empty()) {
            std::uint32_t cur = stack.back();
            stack.pop_back();
            for (const auto& g : G.generators()) {
                std::uint32_t idx = E.index_of_or_throw(conjugate(E.at(cur), g));
                if (!done[idx]) {
                    done[idx] = true;
                    stack.push_back(idx);
                }
            }
        }
    }
    return reps;
}

std::vector<PermutationGroup> minimal_normal_subgroups(const PermutationGroup& G,
                                                       std::uint64_t cap) {
    auto reps = conjugacy_class_representatives(G, cap);
    std::vector<PermutationGroup> closures;
    for (const auto& r : reps) {
        if (r.is_identity()) continue;
        PermutationGroup N = normal_closure(G, {r});
        bool dup = false;
        for (const auto& M : closures)
            if (M.order() == N.order() &&
                std::all_of(N.generators().begin(), N.generators().end(),
                            [&](const Permutation& g) { return M.contains(g); })) {
                dup = true;
                break;
            }
        if (!dup) closures.push_back(std::move(N));
    }
    auto contained_in = [](const PermutationGroup& A, const PermutationGroup& B) {
        return std::all_of(A.generators().begin(), A.generators().end(),
                           [&](const Permutation& g) { return B.contains(g); });
    };
    std::vector<PermutationGroup> minimal;
    for (const auto& N : closures) {
        bool is_min = true;
        for (const auto& M : closures)
            if (M.order() < N.order() && contained_in(M, N)) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(N);
    }
    return minimal;
}

bool is_simple(const PermutationGroup& G, std::uint64_t cap) {
    if (G.order() == 1) return false;
    for (const auto& r : conjugacy_class_representatives(G, cap)) {
        if (r.is_identity()) continue;
        if (normal_closure(G, {r}).order() != G.order()) return false;
    }
    return true;
}

bool is_primitive(const PermutationGroup& G) {
    if (!G.is_transitive()) return false;
    std::uint32_t n = G.degree();
    if (n == 1) return true;
    // minimal block containing {0, p} for each p, by merging under generators
    for (std::uint32_t p = 1; p < n; ++p) {
        std::vector<std::uint32_t> parent(n);
        for (std::uint32_t i = 0; i < n; ++i) parent[i] = i;
        std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::vector<std::pair<std::uint32_t, std::uint32_t>> queue{{0, p}};
        parent[find(p)] = find(0);
        while (!queue.empty()) {
            auto [a, b] = queue.back();
            queue.pop_back();
            for (const auto& g : G.generators()) {
                std::uint32_t ra = find(g.apply(a)), rb = find(g.apply(b));
                if (ra != rb) {
                    parent[rb] = ra;
                    queue.emplace_back(g.apply(a), g.apply(b));
                }
            }
        }
        std::uint32_t root = find(0);
        std::uint32_t block_size = 0;
        for (std::uint32_t i = 0; i < n; ++i)
            if (find(i) == root) ++block_size;
        if (block_size != n) return false;
    }
    return true;
}

}  // namespace hat
