#include <doctest.h>

#include "hitchinlab/liedata.hpp"
#include "hitchinlab/spectral.hpp"

using namespace hitchinlab::liedata;

TEST_CASE("degree tables") {
    CHECK(degrees(GroupFamily::GL, 3) == std::vector<int>{1, 2, 3});
    CHECK(degrees(GroupFamily::SL, 2) == std::vector<int>{2});
    CHECK(degrees(GroupFamily::PGL, 4) == std::vector<int>{2, 3, 4});
    CHECK(degrees(GroupFamily::SL, 1).empty());
    CHECK_THROWS_AS(degrees(GroupFamily::GL, 0), std::invalid_argument);
    CHECK_THROWS_AS(family_from_string("E8"), std::invalid_argument);
}

TEST_CASE("bundle moduli dimension") {
    CHECK(bun_dim(group_data(GroupFamily::GL, 2).dim_g, 1, 3) == 2 * 4 + 1);
    CHECK(bun_dim(3, 0, 2) == 3); // SL_2, genus 2
    CHECK(bun_dim(0, 5, 4) == 5);
    CHECK_THROWS_AS(bun_dim(3, 0, 1), std::invalid_argument);
}

TEST_CASE("degree sum identity and base dimension match") {
    for (int n = 1; n <= 8; ++n) {
        for (auto family : {GroupFamily::GL, GroupFamily::SL, GroupFamily::PGL}) {
            GroupData data = group_data(family, n);
            long sum = 0;
            for (int d : data.degrees) sum += 2 * d - 1;
            CHECK(sum == data.dim_g);
            if (data.degrees.empty()) continue;
            for (int g = 2; g <= 4; ++g) {
                CAPTURE(n);
                CAPTURE(g);
                CHECK(hitchinlab::spectral::hitchin_base_dim(data.degrees, g) ==
                      bun_dim(data.dim_g, data.dim_z, g));
            }
        }
    }
}
