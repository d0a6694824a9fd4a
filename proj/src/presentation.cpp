#include "hat/presentation.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace hat {

void FinitePresentation::validate() const {
    if (generator_count < 1) throw InvalidInputError("presentation needs at least one generator");
    for (const auto& w : relators) {
        if (w.empty()) throw InvalidInputError("empty relator");
        for (int s : w)
            if (s == 0 || std::abs(s) > generator_count)
                throw InvalidInputError("relator index out of range");
    }
}

Permutation CosetEnumeration::evaluate(const Word& w) const {
    Permutation p = Permutation::identity(coset_count);
    for (int s : w) {
        const Permutation& g = generator_perms[static_cast<std::size_t>(std::abs(s)) - 1];
        p = compose(p, s > 0 ? g : inverse(g));
    }
    return p;
}

namespace {

constexpr std::int64_t kUndef = -1;

struct Enumerator {
    int ncols;
    std::uint64_t max_cosets;
    std::vector<std::vector<std::int64_t>> tab;
    std::vector<std::int64_t> rep_;   // union-find, rep[i] <= i
    std::deque<std::int64_t> dead_queue;

    explicit Enumerator(int ngens, std::uint64_t budget)
        : ncols(2 * ngens), max_cosets(budget) {
        new_coset();
    }

    static int inv_col(int col) { return col ^ 1; }

    std::int64_t new_coset() {
        if (tab.size() + 1 > max_cosets) throw ExceededError(max_cosets);
        tab.emplace_back(ncols, kUndef);
        rep_.push_back(static_cast<std::int64_t>(tab.size()) - 1);
        return static_cast<std::int64_t>(tab.size()) - 1;
    }

    std::int64_t rep(std::int64_t k) {
        std::int64_t r = k;
        while (rep_[r] != r) r = rep_[r];
        while (rep_[k] != r) {
            std::int64_t next = rep_[k];
            rep_[k] = r;
            k = next;
        }
        return r;
    }

    bool alive(std::int64_t k) { return rep_[k] == k; }

    void merge(std::int64_t a, std::int64_t b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        rep_[b] = a;
        dead_queue.push_back(b);
    }

    void coincidence(std::int64_t a, std::int64_t b) {
        merge(a, b);
        while (!dead_queue.empty()) {
            std::int64_t gamma = dead_queue.front();
            dead_queue.pop_front();
            for (int x = 0; x < ncols; ++x) {
                std::int64_t delta = tab[gamma][x];
                if (delta == kUndef) continue;
                tab[gamma][x] = kUndef;
                tab[delta][inv_col(x)] = kUndef;
                std::int64_t mu = rep(gamma);
                std::int64_t nu = rep(delta);
                if (tab[mu][x] != kUndef)
                    merge(nu, tab[mu][x]);
                else if (tab[nu][inv_col(x)] != kUndef)
                    merge(mu, tab[nu][inv_col(x)]);
                else {
                    tab[mu][x] = nu;
                    tab[nu][inv_col(x)] = mu;
                }
            }
        }
    }

    void define(std::int64_t c, int col) {
        std::int64_t n = new_coset();
        tab[c][col] = n;
        tab[n][inv_col(col)] = c;
    }

    void scan_and_fill(std::int64_t alpha, const std::vector<int>& wcols) {
        std::int64_t f = alpha, b = alpha;
        std::size_t i = 0;
        std::size_t j = wcols.size();  // exclusive backward index
        for (;;) {
            while (i < j && tab[f][wcols[i]] != kUndef) f = tab[f][wcols[i++]];
            if (i >= j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j > i && tab[b][inv_col(wcols[j - 1])] != kUndef)
                b = tab[b][inv_col(wcols[--j])];
            if (j == i) {
                coincidence(f, b);
                return;
            }
            if (j == i + 1) {
                tab[f][wcols[i]] = b;
                tab[b][inv_col(wcols[i])] = f;
                return;
            }
            define(f, wcols[i]);
        }
    }
};

}  // namespace

CosetEnumeration todd_coxeter(const FinitePresentation& pres, std::uint64_t max_cosets) {
    pres.validate();
    if (max_cosets < 1) throw InvalidInputError("max_cosets must be positive");

    std::vector<std::vector<int>> relator_cols;
    for (const auto& w : pres.relators) {
        std::vector<int> cols;
        for (int s : w) cols.push_back(s > 0 ? 2 * (s - 1) : 2 * (-s - 1) + 1);
        relator_cols.push_back(std::move(cols));
    }

    Enumerator en(pres.generator_count, max_cosets);
    for (std::int64_t alpha = 0; alpha < static_cast<std::int64_t>(en.tab.size()); ++alpha) {
        if (!en.alive(alpha)) continue;
        for (const auto& w : relator_cols) {
            en.scan_and_fill(alpha, w);
            if (!en.alive(alpha)) break;
        }
        if (!en.alive(alpha)) continue;
        for (int x = 0; x < en.ncols; ++x)
            if (en.tab[alpha][x] == kUndef) en.define(alpha, x);
    }

    // compress: renumber live cosets in first-definition order
    std::vector<std::int64_t> newidx(en.tab.size(), kUndef);
    std::uint32_t count = 0;
    for (std::size_t c = 0; c < en.tab.size(); ++c)
        if (en.alive(static_cast<std::int64_t>(c))) newidx[c] = count++;
    if (count == 0) throw InternalError("coset table collapsed to nothing");

    CosetEnumeration out;
    out.coset_count = count;
    out.table.assign(count, std::vector<std::uint32_t>(en.ncols, 0));
    for (std::size_t c = 0; c < en.tab.size(); ++c) {
        if (!en.alive(static_cast<std::int64_t>(c))) continue;
        for (int x = 0; x < en.ncols; ++x) {
            std::int64_t d = en.tab[c][x];
            if (d == kUndef) throw InternalError("coset table not closed");
            out.table[newidx[c]][x] = static_cast<std::uint32_t>(newidx[en.rep(d)]);
        }
    }
    for (int g = 0; g < pres.generator_count; ++g) {
        std::vector<std::uint32_t> img(count);
        for (std::uint32_t c = 0; c < count; ++c) img[c] = out.table[c][2 * g];
        out.generator_perms.emplace_back(std::move(img));
    }

    // every relator must evaluate to the identity in the regular action
    for (const auto& w : pres.relators)
        if (!out.evaluate(w).is_identity())
            throw InternalError("relator does not hold in enumerated representation");
    return out;
}

FinitePresentation h7_presentation() {
    FinitePresentation p;
    p.generator_count = 7;
    for (int i = 1; i <= 7; ++i) p.relators.push_back({i, i});
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7 && j - i <= 4; ++j)
            p.relators.push_back({i, j, i, j});
    p.relators.push_back({1, 6, 1, 6, -3});
    p.relators.push_back({2, 7, 2, 7, -4});
    p.relators.push_back({1, 7, 1, 7, -5});
    return p;
}

std::vector<Permutation> regular_rep_from_multiplication(const ElementSet& elements,
                                                         const std::vector<Permutation>& gens) {
    std::vector<Permutation> out;
    for (const auto& g : gens) {
        elements.index_of_or_throw(g);
        std::vector<std::uint32_t> img(elements.size());
        for (std::uint32_t i = 0; i < elements.size(); ++i)
            img[i] = elements.index_of_or_throw(compose(elements.at(i), g));
        out.emplace_back(std::move(img));
    }
    return out;
}

FinitePresentation parse_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    FinitePresentation p;
    bool have_header = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (!have_header) {
            if (tok != "gens") throw InvalidInputError("expected 'gens n' header");
            if (!(ls >> p.generator_count)) throw InvalidInputError("bad generator count");
            have_header = true;
            continue;
        }
        Word w;
        do {
            bool inv = false;
            if (!tok.empty() && tok.back() == '\'') {
                inv = true;
                tok.pop_back();
            }
            if (tok.size() < 2 || tok[0] != 'a')
                throw InvalidInputError("bad generator token: " + tok);
            int idx = std::stoi(tok.substr(1));
            w.push_back(inv ? -idx : idx);
        } while (ls >> tok);
        p.relators.push_back(std::move(w));
    }
    p.validate();
    return p;
}

std::string format_presentation(const FinitePresentation& pres) {
    std::ostringstream out;
    out << "gens " << pres.generator_count << "\n";
    for (const auto& w : pres.relators) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out << ' ';
            out << 'a' << std::abs(w[i]) << (w[i] < 0 ? "'" : "");
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace hat
