#include "hat/concentric.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "hat/presentation.hpp"

namespace hat {

Permutation ConcentricSequence::regular_of(std::uint32_t h_index) const {
    std::vector<std::uint32_t> img(H.size());
    for (std::uint32_t i = 0; i < H.size(); ++i) img[i] = mult(i, h_index);
    return Permutation(std::move(img));
}

bool ConcentricSequence::is_abelian() const {
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
    return true;
}

namespace {

// Index-based subgroup closure inside a fixed ElementSet, with early exit
// once the closure passes `cap`.
std::vector<std::uint32_t> index_closure(const ElementSet& H,
                                         const std::vector<std::uint32_t>& gen_idx,
                                         std::size_t cap, bool* over = nullptr) {
    if (over) *over = false;
    std::vector<bool> in(H.size(), false);
    std::vector<std::uint32_t> out{H.identity_index()};
    in[out[0]] = true;
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (std::uint32_t gi : gen_idx) {
            std::uint32_t next = H.index_of_or_throw(compose(H.at(out[head]), H.at(gi)));
            if (!in[next]) {
                if (out.size() + 1 > cap) {
                    if (over) *over = true;
                    return out;
                }
                in[next] = true;
                out.push_back(next);
            }
        }
    }
    return out;
}

bool window_order_ok(const ElementSet& H, const std::vector<std::uint32_t>& window_gens,
                     std::size_t expected) {
    bool over = false;
    auto cl = index_closure(H, window_gens, expected, &over);
    return !over && cl.size() == expected;
}

// Builds the φ table over B by labeled breadth-first closure of B's
// Cayley graph; returns false with a witness on conflict.
bool build_phi(const ConcentricSequence& cs_base, const ElementSet& H,
               const std::vector<std::uint32_t>& gen_idx,
               const std::vector<std::uint32_t>& b_members, std::vector<std::int32_t>& phi,
               std::string& reason) {
    (void)cs_base;
    const int n = static_cast<int>(gen_idx.size());
    phi.assign(H.size(), -1);
    auto mul = [&](std::uint32_t i, std::uint32_t j) {
        return H.index_of_or_throw(compose(H.at(i), H.at(j)));
    };
    std::uint32_t id = H.identity_index();
    phi[id] = static_cast<std::int32_t>(id);
    std::vector<std::uint32_t> queue{id};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint32_t x = queue[head];
        for (int i = 0; i + 1 < n; ++i) {
            std::uint32_t y = mul(x, gen_idx[i]);
            std::uint32_t fy = mul(static_cast<std::uint32_t>(phi[x]), gen_idx[i + 1]);
            if (phi[y] < 0) {
                phi[y] = static_cast<std::int32_t>(fy);
                queue.push_back(y);
            } else if (phi[y] != static_cast<std::int32_t>(fy)) {
                std::ostringstream os;
                os << "shift map is not a homomorphism: conflicting image for element index " << y;
                reason = os.str();
                return false;
            }
        }
    }
    if (queue.size() != b_members.size()) {
        reason = "shift map closure did not cover B";
        return false;
    }
    return true;
}

bool phi_is_isomorphism(const ElementSet& H, const std::vector<std::uint32_t>& b_members,
                        const std::vector<std::uint32_t>& c_members,
                        const std::vector<std::int32_t>& phi, std::string& reason) {
    auto mul = [&](std::uint32_t i, std::uint32_t j) {
        return H.index_of_or_throw(compose(H.at(i), H.at(j)));
    };
    // bijectivity onto C
    std::vector<bool> in_c(H.size(), false);
    for (std::uint32_t c : c_members) in_c[c] = true;
    std::vector<bool> hit(H.size(), false);
    for (std::uint32_t b : b_members) {
        std::int32_t v = phi[b];
        if (v < 0 || !in_c[v] || hit[v]) {
            reason = "shift map is not a bijection onto C";
            return false;
        }
        hit[v] = true;
    }
    // homomorphism: full table when |B| <= 1024, sampled above
    if (b_members.size() <= 1024) {
        for (std::uint32_t x : b_members)
            for (std::uint32_t y : b_members)
                if (phi[mul(x, y)] != static_cast<std::int32_t>(
                                          mul(static_cast<std::uint32_t>(phi[x]),
                                              static_cast<std::uint32_t>(phi[y])))) {
                    reason = "shift map fails multiplicativity";
                    return false;
                }
    } else {
        std::mt19937_64 rng(0x70686921ull);
        for (int t = 0; t < 100000; ++t) {
            std::uint32_t x = b_members[rng() % b_members.size()];
            std::uint32_t y = b_members[rng() % b_members.size()];
            if (phi[mul(x, y)] != static_cast<std::int32_t>(
                                      mul(static_cast<std::uint32_t>(phi[x]),
                                          static_cast<std::uint32_t>(phi[y])))) {
                reason = "shift map fails multiplicativity";
                return false;
            }
        }
    }
    return true;
}

// Full assembly from candidate generators; fills `reason` on rejection.
std::optional<ConcentricSequence> assemble(const std::vector<Permutation>& gens,
                                           std::string& reason) {
    const int n = static_cast<int>(gens.size());
    if (n < 1) {
        reason = "empty generator sequence";
        return std::nullopt;
    }
    for (int i = 0; i < n; ++i) {
        if (gens[i].degree() != gens[0].degree()) {
            reason = "generator degrees differ";
            return std::nullopt;
        }
        if (gens[i].is_identity() || !compose(gens[i], gens[i]).is_identity()) {
            std::ostringstream os;
            os << "generator " << (i + 1) << " is not an involution";
            reason = os.str();
            return std::nullopt;
        }
    }
    if (n > 30) {
        reason = "sequence too long";
        return std::nullopt;
    }
    const std::size_t target = std::size_t{1} << n;
    ElementSet H;
    try {
        H = ElementSet::closure(gens, target);
    } catch (const OverCapError&) {
        std::ostringstream os;
        os << "|<a1..a" << n << ">| exceeds 2^" << n;
        reason = os.str();
        return std::nullopt;
    }
    if (H.size() != target) {
        std::ostringstream os;
        os << "wrong subgroup order for window (1," << n << "): " << H.size() << " != " << target;
        reason = os.str();
        return std::nullopt;
    }
    std::vector<std::uint32_t> gen_idx;
    for (const auto& g : gens) gen_idx.push_back(H.index_of_or_throw(g));

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<std::uint32_t> window(gen_idx.begin() + i, gen_idx.begin() + j + 1);
            std::size_t expected = std::size_t{1} << (j - i + 1);
            if (!window_order_ok(H, window, expected)) {
                std::ostringstream os;
                os << "wrong subgroup order for window (" << (i + 1) << "," << (j + 1) << ")";
                reason = os.str();
                return std::nullopt;
            }
        }

    std::vector<std::uint32_t> b_members =
        n == 1 ? std::vector<std::uint32_t>{H.identity_index()}
               : index_closure(H, {gen_idx.begin(), gen_idx.end() - 1}, H.size());
    std::vector<std::uint32_t> c_members =
        n == 1 ? std::vector<std::uint32_t>{H.identity_index()}
               : index_closure(H, {gen_idx.begin() + 1, gen_idx.end()}, H.size());

    ConcentricSequence cs;
    cs.n = n;
    cs.gens = gens;
    cs.H = H;
    if (!build_phi(cs, H, gen_idx, b_members, cs.phi, reason)) return std::nullopt;
    if (!phi_is_isomorphism(H, b_members, c_members, cs.phi, reason)) return std::nullopt;

    std::vector<Permutation> b_elems, c_elems;
    for (std::uint32_t i : b_members) b_elems.push_back(H.at(i));
    for (std::uint32_t i : c_members) c_elems.push_back(H.at(i));
    cs.B = ElementSet::from_elements(std::move(b_elems));
    cs.C = ElementSet::from_elements(std::move(c_elems));
    cs.gen_index = gen_idx;
    for (std::uint32_t gi : gen_idx) cs.regular_gens.push_back(cs.regular_of(gi));
    return cs;
}

}  // namespace

ConcentricCheck check_concentric(const std::vector<Permutation>& gens) {
    ConcentricCheck out;
    out.seq = assemble(gens, out.rejection);
    return out;
}

std::optional<ConcentricSequence> find_concentric_sequence(const ElementSet& H, int n) {
    if (n < 1 || n > 30 || H.size() != (std::size_t{1} << n))
        throw InvalidInputError("|H| must equal 2^n");

    // involutions, central first (largest centralizer), ties by canonical index
    std::vector<std::uint32_t> involutions;
    for (std::uint32_t i = 0; i < H.size(); ++i) {
        const auto& e = H.at(i);
        if (!e.is_identity() && compose(e, e).is_identity()) involutions.push_back(i);
    }
    std::vector<std::uint32_t> centralizer_size(H.size(), 0);
    for (std::uint32_t i : involutions) {
        std::uint32_t c = 0;
        for (const auto& y : H.elements())
            if (compose(H.at(i), y) == compose(y, H.at(i))) ++c;
        centralizer_size[i] = c;
    }
    std::stable_sort(involutions.begin(), involutions.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                         return centralizer_size[a] > centralizer_size[b];
                     });

    std::vector<std::uint32_t> seq;
    std::vector<bool> used(H.size(), false);
    std::optional<ConcentricSequence> found;

    std::function<bool()> recurse = [&]() -> bool {
        if (static_cast<int>(seq.size()) == n) {
            std::vector<Permutation> cand;
            for (std::uint32_t i : seq) cand.push_back(H.at(i));
            std::string reason;
            auto cs = assemble(cand, reason);
            if (cs) {
                found = std::move(cs);
                return true;
            }
            return false;
        }
        const int pos = static_cast<int>(seq.size());
        for (std::uint32_t cand : involutions) {
            if (used[cand]) continue;
            bool ok = true;
            for (int i = pos - 1; i >= 0 && ok; --i) {
                std::vector<std::uint32_t> window(seq.begin() + i, seq.end());
                window.push_back(cand);
                std::size_t expected = std::size_t{1} << (pos - i + 1);
                ok = window_order_ok(H, window, expected);
            }
            if (!ok) continue;
            seq.push_back(cand);
            used[cand] = true;
            if (recurse()) return true;
            used[cand] = false;
            seq.pop_back();
        }
        return false;
    };
    recurse();
    return found;
}

namespace {

struct GeneratedGroup {
    std::uint32_t degree;
    std::vector<Permutation> gens;
};

GeneratedGroup d8_regular() {
    FinitePresentation p;
    p.generator_count = 2;
    p.relators = {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2, 1, 2}};
    auto en = todd_coxeter(p);
    return {en.coset_count, en.generator_perms};
}

GeneratedGroup z2_regular() {
    return {2, {Permutation({1, 0})}};
}

GeneratedGroup direct_product(const std::vector<GeneratedGroup>& parts) {
    std::uint32_t total = 0;
    for (const auto& p : parts) total += p.degree;
    GeneratedGroup out{total, {}};
    std::uint32_t offset = 0;
    for (const auto& p : parts) {
        for (const auto& g : p.gens) {
            std::vector<std::uint32_t> img(total);
            for (std::uint32_t i = 0; i < total; ++i) img[i] = i;
            for (std::uint32_t i = 0; i < p.degree; ++i) img[offset + i] = offset + g.apply(i);
            out.gens.emplace_back(std::move(img));
        }
        offset += p.degree;
    }
    return out;
}

// Concentric generator triple for a dihedral group of order 8 given by
// two non-commuting reflections s, t: the middle element is the central
// involution (st)^2, and (s·t)^2 equals it, which is exactly the window
// and shift structure the recognizer checks.
std::vector<Permutation> d8_triple(const Permutation& s, const Permutation& t) {
    return {s, power(compose(s, t), 2), t};
}

}  // namespace

ConcentricSequence catalog(const std::string& name) {
    GeneratedGroup grp;
    int n = 0;
    std::vector<Permutation> distinguished;  // tried before searching

    auto parse_m = [&](const std::string& prefix) -> int {
        std::string rest = name.substr(prefix.size());
        if (rest.empty()) throw InvalidInputError("missing exponent in catalog name: " + name);
        return std::stoi(rest);
    };

    if (name.rfind("Z2^", 0) == 0) {
        int m = parse_m("Z2^");
        if (m < 1) throw InvalidInputError("Z2^m needs m >= 1");
        std::vector<GeneratedGroup> parts(static_cast<std::size_t>(m), z2_regular());
        grp = direct_product(parts);
        n = m;
        distinguished = grp.gens;
    } else if (name == "D8") {
        grp = d8_regular();
        n = 3;
        distinguished = d8_triple(grp.gens[0], grp.gens[1]);
    } else if (name.rfind("D8xZ2^", 0) == 0) {
        int m = parse_m("D8xZ2^");
        if (m < 0) throw InvalidInputError("D8xZ2^m needs m >= 0");
        std::vector<GeneratedGroup> parts{d8_regular()};
        for (int i = 0; i < m; ++i) parts.push_back(z2_regular());
        grp = direct_product(parts);
        n = 3 + m;
        // order (x1, z_1..z_m, x2, x3): both index-two halves are
        // elementary abelian, so the shift map extends to an isomorphism
        auto x = d8_triple(grp.gens[0], grp.gens[1]);
        distinguished.push_back(x[0]);
        for (int i = 0; i < m; ++i) distinguished.push_back(grp.gens[2 + i]);
        distinguished.push_back(x[1]);
        distinguished.push_back(x[2]);
    } else if (name.rfind("D8^2xZ2^", 0) == 0) {
        int m = parse_m("D8^2xZ2^");
        if (m < 1) throw InvalidInputError("D8^2xZ2^m needs m >= 1");
        std::vector<GeneratedGroup> parts{d8_regular(), d8_regular()};
        for (int i = 0; i < m; ++i) parts.push_back(z2_regular());
        grp = direct_product(parts);
        n = 6 + m;
        // order (x1, y1, z_1..z_m, x2, y2, x3, y3): dropping the last
        // (resp. first) generator leaves one intact dihedral triple and
        // commuting involutions, and the single non-commuting pair with
        // its square relation shifts onto the other copy, so both halves
        // are dihedral-by-elementary-abelian with matching presentations
        auto x = d8_triple(grp.gens[0], grp.gens[1]);
        auto y = d8_triple(grp.gens[2], grp.gens[3]);
        distinguished.push_back(x[0]);
        distinguished.push_back(y[0]);
        for (int i = 0; i < m; ++i) distinguished.push_back(grp.gens[4 + i]);
        distinguished.push_back(x[1]);
        distinguished.push_back(y[1]);
        distinguished.push_back(x[2]);
        distinguished.push_back(y[2]);
    } else if (name == "H7" || name == "H7xZ2") {
        auto en = todd_coxeter(h7_presentation());
        GeneratedGroup h7{en.coset_count, en.generator_perms};
        if (name == "H7") {
            grp = h7;
            n = 7;
            distinguished = h7.gens;
        } else {
            grp = direct_product({h7, z2_regular()});
            n = 8;
            // order (a1..a4, z, a5..a7): each index-two half keeps exactly
            // one non-commuting generator pair, and the square relation of
            // the first half's pair shifts onto the second half's, so the
            // halves have matching presentations and the shift map extends
            for (int i = 0; i < 4; ++i) distinguished.push_back(grp.gens[i]);
            distinguished.push_back(grp.gens[7]);
            for (int i = 4; i < 7; ++i) distinguished.push_back(grp.gens[i]);
        }
    } else {
        throw InvalidInputError("unknown catalog name: " + name);
    }

    if (n > 14) throw BudgetError("catalog group larger than 2^14");

    if (!distinguished.empty()) {
        auto check = check_concentric(distinguished);
        if (check.accepted()) return std::move(*check.seq);
    }
    ElementSet H = ElementSet::closure(grp.gens, std::size_t{1} << n);
    if (H.size() != (std::size_t{1} << n))
        throw InternalError("catalog group has unexpected order");
    auto found = find_concentric_sequence(H, n);
    if (!found)
        throw InternalError("no concentric sequence found for catalog group " + name);
    return std::move(*found);
}

}  // namespace hat
