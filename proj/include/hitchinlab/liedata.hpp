#ifndef HITCHINLAB_LIEDATA_HPP
#define HITCHINLAB_LIEDATA_HPP

#include <string>
#include <vector>

namespace hitchinlab::liedata {

enum class GroupFamily { GL, SL, PGL };

GroupFamily family_from_string(const std::string& s);
std::string family_to_string(GroupFamily f);

struct GroupData {
    GroupFamily family;
    int n;
    std::vector<int> degrees;
    long dim_g;
    int dim_z;
};

// Chevalley degrees: GL_n -> 1..n, SL_n/PGL_n -> 2..n
std::vector<int> degrees(GroupFamily family, int n);

GroupData group_data(GroupFamily family, int n);

// dim Bun^o_G = (g-1) dim G + dim Z(G); defined for g >= 2
long bun_dim(long dim_g, long dim_z, int genus);

} // namespace hitchinlab::liedata

#endif
