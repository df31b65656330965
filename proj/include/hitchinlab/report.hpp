#ifndef HITCHINLAB_REPORT_HPP
#define HITCHINLAB_REPORT_HPP

#include <string>

#include <json.hpp>

namespace hitchinlab::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Deterministic serialization: keys keep insertion order, floating-point
// numbers are printed with 17 significant digits so identical inputs give
// byte-identical reports.
std::string dump(const Json& j, int indent = 2);

Json make_document(const std::string& command);

} // namespace hitchinlab::report

#endif
