#ifndef HITCHINLAB_VARIABLES_HPP
#define HITCHINLAB_VARIABLES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hitchinlab {

// Handle into the process-wide variable registry. Lower id sorts earlier in
// the monomial order, so interning order fixes the order once and for all.
struct Var {
    std::uint32_t id = UINT32_MAX;

    bool valid() const { return id != UINT32_MAX; }
    friend bool operator==(Var a, Var b) { return a.id == b.id; }
    friend bool operator!=(Var a, Var b) { return a.id != b.id; }
    friend bool operator<(Var a, Var b) { return a.id < b.id; }
};

// Interns `name`, returning the existing handle if already present.
Var var(const std::string& name);

// Looks up a previously interned name; throws std::invalid_argument otherwise.
Var var_checked(const std::string& name);

const std::string& var_name(Var v);

// Convenience for indexed families: var_indexed("y", 3) -> "y3".
Var var_indexed(const std::string& stem, int index);

} // namespace hitchinlab

#endif
