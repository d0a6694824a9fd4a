#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hat/check.hpp"

namespace hat {

// JSON certificate emitted by every CLI subcommand: the command line,
// content hashes of the input files, any interpretation notes, the list
// of computed checks, and a subcommand-specific payload.  Key order is
// fixed so identical runs produce byte-identical documents.
struct CertificateDocument {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  // (path, fnv64 hex)
    std::vector<std::string> interpretation_notes;
    std::vector<CheckItem> checks;
    nlohmann::ordered_json payload = nlohmann::ordered_json::object();

    std::string to_json_string() const;
    bool falsified() const { return !all_pass(checks); }
};

std::string fnv1a_hex(const std::string& data);

}  // namespace hat
