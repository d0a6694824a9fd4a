#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hat/concentric.hpp"
#include "hat/graph.hpp"
#include "hat/perm.hpp"

namespace hat {

// ".grp": `degree d`, then one generator per nonempty line, either in
// cycle notation or as `images: i1 i2 ... id` (1-based); `#` comments.
struct GroupFile {
    std::uint32_t degree = 0;
    std::vector<Permutation> generators;
};

GroupFile parse_group_file(const std::string& text);
std::string format_group_file(const GroupFile& gf);

// ".gph": `vertices n`, then one `u v` edge per line, 1-based.
Graph parse_graph_file(const std::string& text);
std::string format_graph_file(const Graph& g);

// ".ccs": concentric witness — `degree d`, `n k`, the generators as in
// ".grp", then |B| lines `x -> y` giving φ in 1-based canonical element
// indices.  Parsing re-verifies the sequence and the stored table.
ConcentricSequence parse_ccs(const std::string& text);
std::string format_ccs(const ConcentricSequence& cs);

// ".wri": wreath instance input — `wgroup <path>` (a ".grp" file
// reference, resolved by the caller), `m <k>`, `a <perm>`, then one
// `h <perm>` line per H generator.  Permutation parsing is deferred
// until the caller knows the degree of W.
struct WreathFile {
    std::string wgroup_path;
    int m = 1;
    std::string a_text;
    std::vector<std::string> h_texts;
};

WreathFile parse_wri(const std::string& text);
std::string format_wri(const WreathFile& wf);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hat
