#include "hitchinlab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hitchinlab::cli {

void RunConfig::validate() const {
    if (identity_tol <= 0.0 || drift_tol <= 0.0)
        throw std::invalid_argument("config: tolerances must be positive");
    if (series_order < 4) throw std::invalid_argument("config: series order must be >= 4");
    if (integrator_step <= 0.0) throw std::invalid_argument("config: step must be positive");
    if (parallelism < 0) throw std::invalid_argument("config: parallelism must be >= 0");
}

namespace {

void apply_key(RunConfig& c, const std::string& key, const std::string& value) {
    auto as_double = [&]() { return std::stod(value); };
    auto as_int = [&]() { return std::stoi(value); };
    auto as_bool = [&]() {
        if (value == "true" || value == "1") return true;
        if (value == "false" || value == "0") return false;
        throw std::invalid_argument("config: bad boolean '" + value + "'");
    };
    if (key == "exact_mode") c.exact_mode = as_bool();
    else if (key == "identity_tol") c.identity_tol = as_double();
    else if (key == "drift_tol") c.drift_tol = as_double();
    else if (key == "series_order") c.series_order = as_int();
    else if (key == "integrator_step") c.integrator_step = as_double();
    else if (key == "output_csv") c.output_csv = value;
    else if (key == "parallelism") c.parallelism = as_int();
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

RunConfig load_toml(std::istream& in, RunConfig c) {
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty() || line.front() == '[') continue; // section headers are ignored
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: malformed TOML line '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        apply_key(c, key, value);
    }
    return c;
}

RunConfig load_json(std::istream& in, RunConfig c) {
    nlohmann::json j;
    in >> j;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        std::string s;
        if (v.is_string()) s = v.get<std::string>();
        else if (v.is_boolean()) s = v.get<bool>() ? "true" : "false";
        else {
            std::ostringstream os;
            os.precision(17);
            os << v.get<double>();
            s = os.str();
        }
        apply_key(c, it.key(), s);
    }
    return c;
}

} // namespace

RunConfig load_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    RunConfig c;
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") c = load_json(in, base);
    else if (path.size() >= 5 && path.substr(path.size() - 5) == ".toml") c = load_toml(in, base);
    else throw std::invalid_argument("config: expected a .json or .toml file");
    c.validate();
    return c;
}

void apply_environment(RunConfig& config) {
    if (const char* v = std::getenv("HITCHINLAB_PRECISION")) {
        config.identity_tol = std::stod(v);
        config.validate();
    }
}

} // namespace hitchinlab::cli
