#include "hitchinlab/report.hpp"

#include <cstdio>

namespace hitchinlab::report {

namespace {

void dump_value(const Json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in + Json(it.key()).dump() + ": ";
                dump_value(it.value(), out, indent, depth + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                dump_value(v, out, indent, depth + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case Json::value_t::number_float: {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", j.get<double>());
            std::string s(buf);
            // keep the token a valid JSON number
            if (s == "inf" || s == "-inf" || s == "nan" || s == "-nan") s = "null";
            out += s;
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

} // namespace

std::string dump(const Json& j, int indent) {
    std::string out;
    dump_value(j, out, indent, 0);
    out += "\n";
    return out;
}

Json make_document(const std::string& command) {
    Json j = Json::object();
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

} // namespace hitchinlab::report
