#include <doctest.h>

#include <random>

#include "hitchinlab/bundles_p1.hpp"

using namespace hitchinlab;
using namespace hitchinlab::bundles;

TEST_CASE("splitting type small cases") {
    // a nonzero a_1 makes the m=2 extension split evenly
    CHECK(splitting_type({2, {rat(5)}}).k == 1);
    CHECK(splitting_type({2, {rat(0)}}).k == 2);
    // diagonal transition matrix: O(4) + O(0)
    CHECK(splitting_type({4, {rat(0), rat(0), rat(0)}}).k == 4);
    // m=3 with a_1 = a_2 = 1: O(2) + O(1)
    TransitionData d3(3, {rat(1), rat(1)});
    CHECK(splitting_type(d3).k == 2);
    CHECK(hom_dimension_oracle(3, d3) == 0);
    CHECK(hom_dimension_oracle(2, d3) > 0);
}

TEST_CASE("transition data validation") {
    CHECK_THROWS_AS(TransitionData(1, {}), std::invalid_argument);
    CHECK_THROWS_AS(TransitionData(3, {rat(1)}), std::invalid_argument);
    CHECK_THROWS_AS(TransitionData(2, {rat(1), rat(2)}), std::invalid_argument);
}

TEST_CASE("hankel determinant examples") {
    CHECK(hankel_determinant({rat(7)}) == rat(7));
    CHECK(hankel_determinant({rat(1), rat(0), rat(1)}) == rat(1));
    CHECK(hankel_determinant({rat(1), rat(1), rat(1)}) == rat(0));
    // rank drop pushes the splitting to k = 3
    CHECK(splitting_type({4, {rat(1), rat(1), rat(1)}}).k == 3);
    CHECK_THROWS_AS(hankel_determinant({rat(1), rat(2)}), std::invalid_argument);
}

TEST_CASE("hom dimension oracle examples") {
    TransitionData flat(2, {rat(0)});
    CHECK(hom_dimension_oracle(3, flat) == 0);       // r = m+1
    CHECK(hom_dimension_oracle(0, flat) == 4);       // 1 + 3 sections
    TransitionData d3(3, {rat(1), rat(1)});
    CHECK(hom_dimension_oracle(2, d3) == 1);
    CHECK(hom_dimension_oracle(4, d3) == 0);
}

TEST_CASE("classifier agrees with the section-counting oracle") {
    std::mt19937 rng(42u);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    for (int m = 2; m <= 8; ++m) {
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Rat> coeffs;
            for (int i = 1; i < m; ++i) coeffs.push_back(rat(num(rng), den(rng)));
            TransitionData data(m, coeffs);
            SplittingType split = splitting_type(data);
            CAPTURE(m);
            CAPTURE(trial);
            // k is the largest twist with a nonzero map into E
            int oracle_k = -1;
            for (int r = m; r >= (m + 1) / 2; --r)
                if (hom_dimension_oracle(r, data) > 0) {
                    oracle_k = r;
                    break;
                }
            CHECK(split.k == oracle_k);
            // Grothendieck count for every twist
            for (int r = -2; r <= m + 1; ++r) {
                int expected = std::max(0, split.k - r + 1) + std::max(0, split.m - split.k - r + 1);
                CHECK(hom_dimension_oracle(r, data) == expected);
            }
            // Hankel criterion for even m
            if (m % 2 == 0)
                CHECK((sgn(hankel_determinant(coeffs)) != 0) == (split.k == m / 2));
        }
    }
}

TEST_CASE("batch classification matches the serial reference") {
    std::mt19937 rng(43u);
    std::uniform_int_distribution<int> num(-3, 3);
    std::vector<TransitionData> batch;
    for (int trial = 0; trial < 200; ++trial) {
        int m = 2 + trial % 6;
        std::vector<Rat> coeffs;
        for (int i = 1; i < m; ++i) coeffs.push_back(rat(num(rng)));
        batch.emplace_back(m, std::move(coeffs));
    }
    auto a = classify_batch(batch);
    auto b = classify_batch_serial(batch);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].k == b[i].k);
}
