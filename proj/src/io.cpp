#include "hat/io.hpp"

#include <fstream>
#include <sstream>

namespace hat {

namespace {

std::string strip_comment(std::string line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    return line;
}

Permutation parse_perm_line(const std::string& line, std::uint32_t degree) {
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "images:") {
        std::vector<std::uint32_t> img;
        std::uint32_t v;
        while (ls >> v) {
            if (v < 1 || v > degree) throw InvalidInputError("image out of range");
            img.push_back(v - 1);
        }
        if (img.size() != degree) throw InvalidInputError("wrong image count");
        return Permutation(std::move(img));
    }
    return parse_cycle_string(line, degree);
}

}  // namespace

GroupFile parse_group_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    GroupFile gf;
    bool have_header = false;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (!have_header) {
            if (tok != "degree") throw InvalidInputError("expected 'degree d' header");
            if (!(ls >> gf.degree) || gf.degree == 0 || gf.degree > kMaxDegree)
                throw InvalidInputError("bad degree");
            have_header = true;
            continue;
        }
        gf.generators.push_back(parse_perm_line(line, gf.degree));
    }
    if (!have_header) throw InvalidInputError("missing 'degree d' header");
    if (gf.generators.empty()) throw InvalidInputError("no generators in group file");
    return gf;
}

std::string format_group_file(const GroupFile& gf) {
    std::ostringstream out;
    out << "degree " << gf.degree << "\n";
    for (const auto& g : gf.generators) out << to_cycle_string(g) << "\n";
    return out.str();
}

Graph parse_graph_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::uint32_t n = 0;
    bool have_header = false;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (!have_header) {
            if (tok != "vertices") throw InvalidInputError("expected 'vertices n' header");
            if (!(ls >> n)) throw InvalidInputError("bad vertex count");
            have_header = true;
            continue;
        }
        std::uint32_t u = 0, v = 0;
        std::istringstream es(line);
        if (!(es >> u >> v)) throw InvalidInputError("bad edge line: " + line);
        if (u < 1 || v < 1 || u > n || v > n) throw InvalidInputError("edge endpoint out of range");
        edges.emplace_back(u - 1, v - 1);
    }
    if (!have_header) throw InvalidInputError("missing 'vertices n' header");
    return Graph::from_edges(n, edges);
}

std::string format_graph_file(const Graph& g) {
    std::ostringstream out;
    out << "vertices " << g.vertex_count << "\n";
    for (auto [u, v] : g.edges()) out << (u + 1) << " " << (v + 1) << "\n";
    return out.str();
}

ConcentricSequence parse_ccs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::uint32_t degree = 0;
    int n = -1;
    std::vector<Permutation> gens;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> phi_lines;
    int stage = 0;  // 0 = degree, 1 = n, 2 = generators, 3 = phi
    while (std::getline(in, line)) {
        line = strip_comment(line);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (stage == 0) {
            if (tok != "degree") throw InvalidInputError("expected 'degree d'");
            if (!(ls >> degree) || degree == 0) throw InvalidInputError("bad degree");
            stage = 1;
        } else if (stage == 1) {
            if (tok != "n") throw InvalidInputError("expected 'n k'");
            if (!(ls >> n) || n < 1) throw InvalidInputError("bad sequence length");
            stage = 2;
        } else {
            if (line.find("->") != std::string::npos) {
                stage = 3;
                std::uint32_t x = 0, y = 0;
                std::string arrow;
                std::istringstream ps(line);
                if (!(ps >> x >> arrow >> y) || arrow != "->")
                    throw InvalidInputError("bad shift-table line: " + line);
                phi_lines.emplace_back(x - 1, y - 1);
            } else {
                if (stage == 3) throw InvalidInputError("generator after shift table");
                gens.push_back(parse_perm_line(line, degree));
            }
        }
    }
    if (static_cast<int>(gens.size()) != n)
        throw InvalidInputError("generator count does not match n");
    ConcentricCheck check = check_concentric(gens);
    if (!check.accepted())
        throw InvalidInputError("witness file does not describe a concentric sequence: " +
                                check.rejection);
    ConcentricSequence cs = std::move(*check.seq);
    if (phi_lines.size() != cs.B.size())
        throw InvalidInputError("shift table has the wrong number of rows");
    for (auto [x, y] : phi_lines) {
        if (x >= cs.order() || cs.phi[x] != static_cast<std::int32_t>(y))
            throw InvalidInputError("stored shift table contradicts the recomputed one");
    }
    return cs;
}

std::string format_ccs(const ConcentricSequence& cs) {
    std::ostringstream out;
    out << "degree " << cs.gens[0].degree() << "\n";
    out << "n " << cs.n << "\n";
    for (const auto& g : cs.gens) out << to_cycle_string(g) << "\n";
    for (std::uint32_t x = 0; x < cs.order(); ++x)
        if (cs.phi[x] >= 0) out << (x + 1) << " -> " << (cs.phi[x] + 1) << "\n";
    return out.str();
}

WreathFile parse_wri(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    WreathFile wf;
    bool have_w = false, have_m = false, have_a = false;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        std::string rest;
        std::getline(ls, rest);
        auto first = rest.find_first_not_of(" \t");
        rest = first == std::string::npos ? "" : rest.substr(first);
        if (tok == "wgroup") {
            wf.wgroup_path = rest;
            have_w = true;
        } else if (tok == "m") {
            wf.m = std::stoi(rest);
            have_m = true;
        } else if (tok == "a") {
            wf.a_text = rest;
            have_a = true;
        } else if (tok == "h") {
            wf.h_texts.push_back(rest);
        } else {
            throw InvalidInputError("unknown wreath-file key: " + tok);
        }
    }
    if (!have_w || !have_m || !have_a || wf.h_texts.empty())
        throw InvalidInputError("wreath file needs wgroup, m, a, and at least one h line");
    return wf;
}

std::string format_wri(const WreathFile& wf) {
    std::ostringstream out;
    out << "wgroup " << wf.wgroup_path << "\n";
    out << "m " << wf.m << "\n";
    out << "a " << wf.a_text << "\n";
    for (const auto& h : wf.h_texts) out << "h " << h << "\n";
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInputError("cannot write file: " + path);
    out << content;
}

}  // namespace hat
