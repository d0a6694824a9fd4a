#pragma once

#include <string>
#include <vector>

namespace hat {

// One verified claim inside a certificate.  `anchor` states the
// mathematical claim as a formula; `witness` carries the offending
// element or the computed value when the check fails (or when the
// result is informative either way).
struct CheckItem {
    std::string name;
    std::string anchor;
    bool pass = false;
    // Advisory items are reported but do not count as falsifications
    // (used for results the construction records without asserting).
    bool advisory = false;
    std::string witness;
};

inline bool all_pass(const std::vector<CheckItem>& checks) {
    for (const auto& c : checks)
        if (!c.advisory && !c.pass) return false;
    return true;
}

}  // namespace hat
