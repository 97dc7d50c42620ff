#include "permspec/manifest.hpp"

#include <sstream>

namespace permspec {

const char* const kLibraryVersion = "1.0.0";

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string RunManifest::to_json(bool include_wall) const {
    std::ostringstream os;
    os << "{\"command\":\"" << json_escape(command) << "\"";
    os << ",\"version\":\"" << json_escape(version) << "\"";
    os << ",\"seed\":" << seed;
    os << ",\"params\":{";
    bool first = true;
    for (const auto& [key, value] : params) {
        if (!first) os << ",";
        first = false;
        os << "\"" << json_escape(key) << "\":\"" << json_escape(value) << "\"";
    }
    os << "}";
    if (include_wall && wall_ms >= 0) os << ",\"wall_ms\":" << wall_ms;
    os << "}";
    return os.str();
}

}  // namespace permspec
