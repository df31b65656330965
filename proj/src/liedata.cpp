#include "hitchinlab/liedata.hpp"

#include <stdexcept>

namespace hitchinlab::liedata {

GroupFamily family_from_string(const std::string& s) {
    if (s == "GL" || s == "gl") return GroupFamily::GL;
    if (s == "SL" || s == "sl") return GroupFamily::SL;
    if (s == "PGL" || s == "pgl") return GroupFamily::PGL;
    throw std::invalid_argument("unsupported group family '" + s + "' (expected GL, SL or PGL)");
}

std::string family_to_string(GroupFamily f) {
    switch (f) {
        case GroupFamily::GL: return "GL";
        case GroupFamily::SL: return "SL";
        case GroupFamily::PGL: return "PGL";
    }
    return "?";
}

std::vector<int> degrees(GroupFamily family, int n) {
    if (n < 1) throw std::invalid_argument("degrees: rank parameter must be >= 1");
    std::vector<int> d;
    int start = family == GroupFamily::GL ? 1 : 2;
    for (int i = start; i <= n; ++i) d.push_back(i);
    return d;
}

GroupData group_data(GroupFamily family, int n) {
    GroupData g;
    g.family = family;
    g.n = n;
    g.degrees = degrees(family, n);
    long nn = static_cast<long>(n) * n;
    if (family == GroupFamily::GL) {
        g.dim_g = nn;
        g.dim_z = 1;
    } else {
        g.dim_g = nn - 1;
        g.dim_z = 0;
    }
    return g;
}

long bun_dim(long dim_g, long dim_z, int genus) {
    if (genus < 2) throw std::invalid_argument("bun_dim: formula requires genus >= 2");
    return (genus - 1) * dim_g + dim_z;
}

} // namespace hitchinlab::liedata
