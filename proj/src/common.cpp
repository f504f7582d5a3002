#include "rtl/common.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace rtl {

NodeSet normalize(NodeSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool is_subset(const NodeSet& a, const NodeSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string join(const std::vector<int>& v, const std::string& sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << sep;
        out << v[i];
    }
    return out.str();
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw PreconditionError("not an integer: '" + item + "'");
        }
        if (used != item.size()) throw PreconditionError("not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

Caps caps_from_env() {
    Caps caps;
    const char* env = std::getenv("RTL_CAPS");
    if (!env) return caps;
    std::stringstream in(env);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw PreconditionError("RTL_CAPS: expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq);
        std::uint64_t value = 0;
        try {
            value = std::stoull(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw PreconditionError("RTL_CAPS: bad value in '" + item + "'");
        }
        if (key == "group") caps.group_order = value;
        else if (key == "entry") caps.entry = value;
        else if (key == "orbit") caps.orbit_group = value;
        else if (key == "idem") caps.idempotent = value;
        else if (key == "degree") caps.degree = static_cast<int>(value);
        else throw PreconditionError("RTL_CAPS: unknown key '" + key + "'");
    }
    return caps;
}

}  // namespace rtl
