#include "hitchinlab/variables.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace hitchinlab {

namespace {

struct Registry {
    std::shared_mutex mutex;
    std::vector<std::string> names;
    std::unordered_map<std::string, std::uint32_t> ids;
};

Registry& registry() {
    static Registry r;
    return r;
}

} // namespace

Var var(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("var: empty name");
    Registry& r = registry();
    {
        std::shared_lock lock(r.mutex);
        auto it = r.ids.find(name);
        if (it != r.ids.end()) return Var{it->second};
    }
    std::unique_lock lock(r.mutex);
    auto it = r.ids.find(name);
    if (it != r.ids.end()) return Var{it->second};
    auto id = static_cast<std::uint32_t>(r.names.size());
    r.names.push_back(name);
    r.ids.emplace(name, id);
    return Var{id};
}

Var var_checked(const std::string& name) {
    Registry& r = registry();
    std::shared_lock lock(r.mutex);
    auto it = r.ids.find(name);
    if (it == r.ids.end())
        throw std::invalid_argument("variable not declared: '" + name + "'");
    return Var{it->second};
}

const std::string& var_name(Var v) {
    Registry& r = registry();
    std::shared_lock lock(r.mutex);
    if (!v.valid() || v.id >= r.names.size())
        throw std::invalid_argument("var_name: invalid variable handle");
    return r.names[v.id];
}

Var var_indexed(const std::string& stem, int index) {
    return var(stem + std::to_string(index));
}

} // namespace hitchinlab
