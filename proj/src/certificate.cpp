#include "hat/certificate.hpp"

#include <cstdio>

namespace hat {

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string CertificateDocument::to_json_string() const {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    auto in = nlohmann::ordered_json::object();
    for (const auto& [path, hash] : inputs) in[path] = hash;
    doc["inputs"] = in;
    doc["interpretation_notes"] = interpretation_notes;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json item;
        item["name"] = c.name;
        item["anchor"] = c.anchor;
        item["result"] = c.pass;
        if (c.advisory) item["advisory"] = true;
        if (!c.witness.empty()) item["witness"] = c.witness;
        arr.push_back(item);
    }
    doc["checks"] = arr;
    for (auto it = payload.begin(); it != payload.end(); ++it) doc[it.key()] = it.value();
    return doc.dump(2) + "\n";
}

}  // namespace hat
