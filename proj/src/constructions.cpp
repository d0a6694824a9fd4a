#include "hat/constructions.hpp"

#include <algorithm>
#include <sstream>

namespace hat {

Permutation build_tau_h(const ConcentricSequence& H, std::uint32_t h_index) {
    if (h_index >= H.order() || !H.in_B(h_index))
        throw InvalidInputError("h does not lie in B");
    const std::uint32_t size = H.order();
    const std::uint32_t a1 = H.gen_index.front();
    const std::uint32_t an = H.gen_index.back();
    // h enters through its shift image: the second coset maps onto
    // a_1·h^φ·C = a_1·C, the complement of C, so the map is a bijection
    // for every h in B
    const std::uint32_t hshift = static_cast<std::uint32_t>(H.phi[h_index]);
    std::vector<std::uint32_t> img(size);
    for (std::uint32_t x = 0; x < size; ++x) {
        if (H.in_B(x)) {
            img[x] = static_cast<std::uint32_t>(H.phi[x]);
        } else {
            // x = a_n·b with b = a_n·x (a_n is an involution outside B)
            std::uint32_t b = H.mult(an, x);
            if (!H.in_B(b)) throw InternalError("coset decomposition left B");
            std::uint32_t fb = static_cast<std::uint32_t>(H.phi[b]);
            img[x] = H.mult(a1, H.mult(hshift, fb));
        }
    }
    Permutation tau(std::move(img));
    if (tau.apply(H.identity_index()) != H.identity_index())
        throw InternalError("twist does not fix the identity point");
    return tau;
}

int conjugation_shift_violation(const ConcentricSequence& H, const Permutation& tau) {
    for (int i = 0; i + 1 < H.n; ++i)
        if (conjugate(H.regular_gens[static_cast<std::size_t>(i)], tau) !=
            H.regular_gens[static_cast<std::size_t>(i) + 1])
            return i + 1;
    return 0;
}

MNInstance build_mn_instance(const ConcentricSequence& H, std::uint32_t h_index) {
    if (H.is_abelian())
        throw InvalidInputError("H is abelian; the twisted coset construction needs a non-abelian group");
    Permutation tau = build_tau_h(H, h_index);

    std::vector<Permutation> rh;
    rh.reserve(H.order());
    for (std::uint32_t i = 0; i < H.order(); ++i) rh.push_back(H.regular_of(i));
    ElementSet RH = ElementSet::from_elements(std::move(rh));

    std::vector<Permutation> ggens = H.regular_gens;
    ggens.push_back(tau);
    PermutationGroup G(ggens);

    MNInstance inst{H, h_index, tau, RH, G, {}};
    const std::uint64_t gorder = G.order();

    ElementSet core = core_of(RH, G);
    std::string core_witness;
    if (core.size() != 1)
        for (const auto& e : core.elements())
            if (!e.is_identity()) {
                core_witness = to_cycle_string(e);
                break;
            }
    inst.checks.push_back({"core_free", "core of R(H) in G is trivial",
                           core.size() == 1, false, core_witness});

    bool dce = double_cosets_equal(RH, tau);
    inst.checks.push_back({"double_cosets_unequal",
                           "R(H)·tau_h·R(H) != R(H)·tau_h^{-1}·R(H)", !dce, false,
                           dce ? "some h in R(H) satisfies tau_h·h·tau_h in R(H)" : ""});

    std::uint64_t idx = index_of_self_intersection(RH, tau);
    inst.checks.push_back({"intersection_index", "|R(H) : R(H)^{tau_h} ∩ R(H)| = 2",
                           idx == 2, false, idx == 2 ? "" : "index = " + std::to_string(idx)});

    bool transitive = G.is_transitive();
    inst.checks.push_back({"generation", "G = <R(H), tau_h> acts transitively on H",
                           transitive, false, ""});

    PermutationGroup G1 = G.point_stabilizer(H.identity_index());
    bool stab_ok = checked_mul(G1.order(), H.order()) == gorder;
    inst.checks.push_back({"stabilizer_order", "|G_1| = |G| / 2^n", stab_ok, false,
                           stab_ok ? "" : "|G_1| = " + std::to_string(G1.order()) +
                                              ", |G| = " + std::to_string(gorder)});
    return inst;
}

namespace {

bool is_power_of_two(std::uint32_t x) { return x && (x & (x - 1)) == 0; }

int log2_exact(std::uint32_t x) {
    int n = 0;
    while ((1u << n) < x) ++n;
    return n;
}

// Backtracking search for permutations t of {0..d-1} with
// from[k]^t = to[k] for every k; propagates the functional constraint
// t(from_k(x)) = to_k(t(x)) eagerly.  Deterministic candidate order.
struct TransporterSearch {
    const std::vector<Permutation>& from;
    const std::vector<Permutation>& to;
    std::uint32_t d;
    bool collect_all;
    std::uint64_t limit;

    std::vector<std::int64_t> t, tinv;
    std::vector<Permutation> results;

    TransporterSearch(const std::vector<Permutation>& f, const std::vector<Permutation>& o,
                      std::uint32_t degree, bool all, std::uint64_t lim)
        : from(f), to(o), d(degree), collect_all(all), limit(lim),
          t(degree, -1), tinv(degree, -1) {}

    bool propagate(std::uint32_t x0, std::uint32_t y0, std::vector<std::uint32_t>& trail) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> pending{{x0, y0}};
        while (!pending.empty()) {
            auto [x, y] = pending.back();
            pending.pop_back();
            if (t[x] >= 0) {
                if (t[x] != static_cast<std::int64_t>(y)) return false;
                continue;
            }
            if (tinv[y] >= 0) return false;
            t[x] = y;
            tinv[y] = x;
            trail.push_back(x);
            for (std::size_t k = 0; k < from.size(); ++k)
                pending.emplace_back(from[k].apply(x), to[k].apply(y));
        }
        return true;
    }

    void undo(const std::vector<std::uint32_t>& trail) {
        for (std::uint32_t x : trail) {
            tinv[static_cast<std::size_t>(t[x])] = -1;
            t[x] = -1;
        }
    }

    bool run(std::uint32_t depth_hint = 0) {
        std::uint32_t x = depth_hint;
        while (x < d && t[x] >= 0) ++x;
        if (x == d) {
            std::vector<std::uint32_t> img(d);
            for (std::uint32_t i = 0; i < d; ++i) img[i] = static_cast<std::uint32_t>(t[i]);
            results.emplace_back(std::move(img));
            if (!collect_all) return true;
            if (results.size() > limit) throw OverCapError(results.size(), limit);
            return false;
        }
        for (std::uint32_t y = 0; y < d; ++y) {
            if (tinv[y] >= 0) continue;
            std::vector<std::uint32_t> trail;
            if (propagate(x, y, trail) && run(x)) return true;
            undo(trail);
        }
        return false;
    }
};

std::optional<Permutation> find_transporter(const std::vector<Permutation>& from,
                                            const std::vector<Permutation>& to,
                                            std::uint32_t degree) {
    TransporterSearch s(from, to, degree, false, 1);
    s.run();
    if (s.results.empty()) return std::nullopt;
    return s.results.front();
}

std::vector<Permutation> enumerate_centralizer(const std::vector<Permutation>& set,
                                               std::uint32_t degree, std::uint64_t cap) {
    TransporterSearch s(set, set, degree, true, cap);
    s.run();
    std::sort(s.results.begin(), s.results.end());
    return s.results;
}

bool windows_ok(const std::vector<Permutation>& gens) {
    const int n = static_cast<int>(gens.size());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            std::vector<Permutation> window(gens.begin() + i, gens.begin() + j + 1);
            std::size_t expected = std::size_t{1} << (j - i + 1);
            try {
                if (ElementSet::closure(window, expected).size() != expected) return false;
            } catch (const OverCapError&) {
                return false;
            }
        }
    return true;
}

bool regular_involutions(const std::vector<Permutation>& gens, std::uint32_t degree) {
    for (const auto& h : gens)
        if (h.is_identity() || !compose(h, h).is_identity()) return false;
    PermutationGroup H(gens);
    return H.order() == degree && H.is_transitive();
}

}  // namespace

C1C4Report check_c1_c4(const PermutationGroup& W, const Permutation& a,
                       const std::vector<Permutation>& Hgens) {
    const std::uint32_t d = W.degree();
    if (a.degree() != d) throw InvalidInputError("degree mismatch between W and a");
    for (const auto& h : Hgens)
        if (h.degree() != d) throw InvalidInputError("degree mismatch between W and H generators");
    if (!is_power_of_two(d)) throw InvalidInputError("degree is not a power of two");
    if (a.apply(0) != 0) throw InvalidInputError("a does not fix point 1");
    if (Hgens.empty()) throw InvalidInputError("empty H generator list");

    const int n = static_cast<int>(Hgens.size());
    C1C4Report r;

    r.c2 = regular_involutions(Hgens, d) && (std::size_t{1} << log2_exact(d)) == d &&
           log2_exact(d) == n;
    r.c3 = windows_ok(Hgens);

    std::vector<Permutation> full = Hgens;
    full.push_back(a);
    r.c1 = PermutationGroup(full).order() == W.order();

    r.c4 = true;
    for (int i = 0; i + 1 < n; ++i)
        if (conjugate(Hgens[static_cast<std::size_t>(i)], a) !=
            Hgens[static_cast<std::size_t>(i) + 1]) {
            r.c4 = false;
            r.c4_fail_index = i + 1;
            break;
        }

    if (W.order() <= 1000000) {
        r.w_simple = is_simple(W);
        r.w_primitive = is_primitive(W);
    } else {
        r.hypotheses_assumed = true;
    }
    return r;
}

std::optional<Permutation> search_shift_element(const PermutationGroup& W,
                                                const std::vector<Permutation>& Hgens) {
    const std::uint32_t d = W.degree();
    const int n = static_cast<int>(Hgens.size());
    if (n < 1) throw InvalidInputError("empty H generator list");
    if (!regular_involutions(Hgens, d) || !windows_ok(Hgens))
        throw InvalidInputError("H generators do not satisfy the regular-involution window conditions");

    auto accept = [&](const Permutation& a) {
        if (a.apply(0) != 0) return false;
        if (!W.contains(a)) return false;
        std::vector<Permutation> full = Hgens;
        full.push_back(a);
        return PermutationGroup(full).order() == W.order();
    };

    if (n == 1) {
        // no shift constraints: sweep W itself in canonical order
        ElementSet all = W.enumerate_elements();
        for (const auto& a : all.elements())
            if (accept(a)) return a;
        return std::nullopt;
    }

    std::vector<Permutation> from(Hgens.begin(), Hgens.end() - 1);
    std::vector<Permutation> to(Hgens.begin() + 1, Hgens.end());
    auto t = find_transporter(from, to, d);
    if (!t) return std::nullopt;

    std::vector<Permutation> cent = enumerate_centralizer(to, d, kDefaultElementCap);
    std::vector<Permutation> candidates;
    candidates.reserve(cent.size());
    for (const auto& c : cent) candidates.push_back(compose(*t, c));
    std::sort(candidates.begin(), candidates.end());
    for (const auto& a : candidates)
        if (accept(a)) return a;
    return std::nullopt;
}

namespace {

Permutation extend_to_blocks(const Permutation& g, std::uint32_t block_size, int m) {
    std::vector<std::uint32_t> img(static_cast<std::size_t>(m) * block_size);
    for (std::uint32_t i = 0; i < img.size(); ++i) img[i] = i;
    for (std::uint32_t j = 0; j < block_size; ++j) img[j] = g.apply(j);
    return Permutation(std::move(img));
}

}  // namespace

WreathInstance build_wreath_instance(const PermutationGroup& W, const Permutation& a,
                                     const std::vector<Permutation>& Hgens, int m) {
    const std::uint32_t d = W.degree();
    if (m < 1) throw InvalidInputError("m must be at least 1");
    if (a.degree() != d) throw InvalidInputError("degree mismatch between W and a");
    for (const auto& h : Hgens)
        if (h.degree() != d) throw InvalidInputError("degree mismatch between W and H generators");
    if (!is_power_of_two(d)) throw InvalidInputError("degree is not a power of two");

    const int n = log2_exact(d);
    const std::uint32_t omega = static_cast<std::uint32_t>(m) * d;

    std::vector<std::uint32_t> tau_img(omega);
    for (int i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < d; ++j)
            tau_img[static_cast<std::uint32_t>(i) * d + j] =
                static_cast<std::uint32_t>((i + 1) % m) * d + j;
    Permutation tau(std::move(tau_img));

    std::vector<Permutation> wgens_ext;
    for (const auto& g : W.generators()) wgens_ext.push_back(extend_to_blocks(g, d, m));

    std::vector<Permutation> kgens;
    for (int i = 0; i < m; ++i) {
        Permutation ti = power(tau, i);
        for (const auto& h : Hgens) kgens.push_back(conjugate(extend_to_blocks(h, d, m), ti));
    }

    Permutation a_tau = compose(extend_to_blocks(a, d, m), tau);

    std::vector<Permutation> ggens = wgens_ext;
    ggens.push_back(tau);
    PermutationGroup G(ggens);

    return WreathInstance{W,    a,          Hgens, m,     n, d, omega,
                          tau,  wgens_ext,  kgens, a_tau, G};
}

bool wreath_invariants_hold(const WreathInstance& inst, std::string& reason) {
    if (!power(inst.tau, inst.m).is_identity()) {
        reason = "tau^m is not the identity";
        return false;
    }
    const int n = static_cast<int>(inst.Hgens.size());
    std::vector<Permutation> block0(inst.kgens.begin(), inst.kgens.begin() + n);
    ElementSet H0 = ElementSet::closure(block0);
    for (int i = 1; i < inst.m; ++i) {
        std::vector<Permutation> blocki(inst.kgens.begin() + i * n,
                                        inst.kgens.begin() + (i + 1) * n);
        if (!(ElementSet::closure(blocki) == H0.conjugated_by(power(inst.tau, i)))) {
            reason = "H_" + std::to_string(i) + " differs from H_0^{tau^" + std::to_string(i) + "}";
            return false;
        }
    }
    Permutation p = power(inst.a_tau, inst.m);
    for (std::uint32_t j = 0; j < inst.block_size; ++j)
        if (p.apply(j) != inst.a.apply(j)) {
            reason = "(a·tau)^m restricted to the first block differs from a";
            return false;
        }
    if (inst.m >= 2) {
        // the displayed conjugation chain under a·tau
        std::vector<Permutation> chain;
        Permutation tm1 = power(inst.tau, inst.m - 1);
        auto ext = [&](int j) { return extend_to_blocks(inst.Hgens[static_cast<std::size_t>(j)],
                                                        inst.block_size, inst.m); };
        chain.push_back(conjugate(ext(0), tm1));
        chain.push_back(ext(0));
        for (int j = 1; j < n; ++j) {
            for (int i = 1; i < inst.m; ++i) chain.push_back(conjugate(ext(j), power(inst.tau, i)));
            chain.push_back(ext(j));
        }
        for (std::size_t k = 0; k + 1 < chain.size(); ++k)
            if (conjugate(chain[k], inst.a_tau) != chain[k + 1]) {
                reason = "a·tau conjugation chain breaks at step " + std::to_string(k + 1);
                return false;
            }
    }
    return true;
}

std::vector<CheckItem> verify_wreath_theorem(const WreathInstance& inst) {
    std::vector<CheckItem> out;
    const int n = static_cast<int>(inst.Hgens.size());
    ElementSet K = ElementSet::closure(inst.kgens);

    std::vector<Permutation> gens = inst.kgens;
    gens.push_back(inst.a_tau);
    std::uint64_t gen_order = PermutationGroup(gens).order();
    bool c1 = gen_order == inst.G.order();
    out.push_back({"connectivity", "G = <K, a·tau>", c1, false,
                   c1 ? "" : "|<K, a·tau>| = " + std::to_string(gen_order) +
                                 ", |G| = " + std::to_string(inst.G.order())});

    std::uint64_t idx = index_of_self_intersection(K, inst.a_tau);
    out.push_back({"intersection_index", "|K : K^{a·tau} ∩ K| = 2", idx == 2, false,
                   idx == 2 ? "" : "index = " + std::to_string(idx)});

    bool dce = double_cosets_equal(K, inst.a_tau);
    out.push_back({"double_cosets_unequal", "K·(a·tau)·K != K·(a·tau)^{-1}·K", !dce, true,
                   std::string("computed: double cosets ") + (dce ? "equal" : "unequal")});

    ElementSet core = core_of(K, inst.G);
    std::string core_witness;
    if (core.size() != 1)
        for (const auto& e : core.elements())
            if (!e.is_identity()) {
                core_witness = to_cycle_string(e);
                break;
            }
    out.push_back({"core_free", "core of K in G is trivial", core.size() == 1, false,
                   core_witness});

    // B = <h_1..h_{n-1}> × H_1 × … × H_{m-1};
    // C = H_0 × … × H_{m-2} × <h_2^{tau^{m-1}} .. h_n^{tau^{m-1}}>
    std::vector<Permutation> bgens, cgens;
    for (int j = 0; j + 1 < n; ++j) bgens.push_back(inst.kgens[static_cast<std::size_t>(j)]);
    for (int i = 1; i < inst.m; ++i)
        for (int j = 0; j < n; ++j)
            bgens.push_back(inst.kgens[static_cast<std::size_t>(i * n + j)]);
    for (int i = 0; i + 1 < inst.m; ++i)
        for (int j = 0; j < n; ++j)
            cgens.push_back(inst.kgens[static_cast<std::size_t>(i * n + j)]);
    for (int j = 1; j < n; ++j)
        cgens.push_back(inst.kgens[static_cast<std::size_t>((inst.m - 1) * n + j)]);

    Permutation id = Permutation::identity(inst.omega_degree);
    ElementSet B = bgens.empty() ? ElementSet::from_elements({id}) : ElementSet::closure(bgens);
    ElementSet C = cgens.empty() ? ElementSet::from_elements({id}) : ElementSet::closure(cgens);
    ElementSet Bconj = B.conjugated_by(inst.a_tau);
    bool bc = Bconj == C;
    std::string bc_witness;
    if (!bc)
        for (const auto& e : Bconj.elements())
            if (!C.contains(e)) {
                bc_witness = to_cycle_string(e);
                break;
            }
    out.push_back({"proof_subgroup_shift", "B^{a·tau} = C", bc, false, bc_witness});
    return out;
}

}  // namespace hat
