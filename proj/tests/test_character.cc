#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epf/action.hh"
#include "epf/character.hh"
#include "epf/parking.hh"

using namespace epf;

TEST_CASE("chi: golden values") {
    CHECK(chi(6, 3, Partition({3, 3})) == 9);
    CHECK(chi(6, 1, Partition({3, 3})) == 0);
    CHECK(chi(6, 3, Partition({6})) == 3);
    CHECK(chi(3, 3, Partition({1, 1, 1})) == 3);
    CHECK_THROWS_AS(chi(4, 5, Partition({4})), std::invalid_argument);
    CHECK_THROWS_AS(chi(4, 1, Partition({3})), std::invalid_argument);
}

TEST_CASE("chi equals the brute-force oracle, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (int c = 1; c <= n; ++c)
            for (const auto& lam : partitions_of(n))
                CHECK(chi(n, c, lam) == brute_character(n, c, lam));
}

TEST_CASE("chi_c1: golden values and agreement with chi") {
    CHECK(chi_c1(3, Partition({2, 1})) == 1);
    CHECK(chi_c1(6, Partition({2, 2, 2})) == 12);
    CHECK(chi_c1(4, Partition({2, 2})) == 0);
    CHECK(brute_character(4, 1, Partition({2, 2})) == 0);
    for (int n = 1; n <= 12; ++n)
        for (const auto& lam : partitions_of(n)) CHECK(chi_c1(n, lam) == chi(n, 1, lam));
}

TEST_CASE("chi_cn: golden values and agreement with chi") {
    CHECK(chi_cn(3, Partition({3})) == 3);
    CHECK(chi_cn(2, Partition({2})) == 1);
    // f_4(4) = 1/2 (d even, n/d odd), so the value is 16/4/2 = 2; the
    // brute-force oracle agrees.
    CHECK(chi_cn(4, Partition({4})) == 2);
    CHECK(brute_character(4, 4, Partition({4})) == 2);
    for (int n = 1; n <= 12; ++n)
        for (const auto& lam : partitions_of(n)) CHECK(chi_cn(n, lam) == chi(n, n, lam));
}

TEST_CASE("dimension is n^{n-2}") {
    for (int n = 2; n <= 12; ++n) {
        const Partition ones(std::vector<int>(static_cast<size_t>(n), 1));
        const Int dim = int_pow(Int(n), static_cast<unsigned long>(n - 2));
        for (int c = 1; c <= n; ++c) CHECK(chi(n, c, ones) == dim);
    }
}

TEST_CASE("restriction: removing a fixed point gives the classical character") {
    for (int n = 2; n <= 10; ++n)
        for (const auto& lam : partitions_of(n)) {
            if (!lam.has_part_1()) continue;
            const Partition bar = lam.drop_one_part_1();
            for (int c = 1; c <= n; ++c)
                CHECK(chi(n, c, lam) == classical_character(n - 1, bar));
        }
}

TEST_CASE("chi_rational: golden values") {
    CHECK(chi_rational(3, 4, Partition({2, 1, 1})) == 4);
    CHECK(brute_character_rational(3, 4, 1, Partition({2, 1, 1})) == 4);
    CHECK(chi_rational(3, 4, Partition({2, 2})) == 0);
    CHECK_THROWS_AS(chi_rational(3, 5, Partition({2, 1, 1})), std::invalid_argument);
}

TEST_CASE("chi_rational equals the rational brute-force oracle") {
    for (auto [a, b] : {std::pair{2, 3}, {3, 2}, {3, 4}, {5, 2}, {5, 3}, {5, 6}})
        for (const auto& lam : partitions_of(a + 1))
            CHECK(chi_rational(a, b, lam) == brute_character_rational(a, b, 1, lam));
}

TEST_CASE("chi_rational at (n-1, n) reduces to chi_c1") {
    for (int n = 2; n <= 8; ++n)
        for (const auto& lam : partitions_of(n)) CHECK(chi_rational(n - 1, n, lam) == chi_c1(n, lam));
}

TEST_CASE("character_vector is complete and keyed canonically") {
    const auto cv = character_vector(4, 2);
    CHECK(cv.values.size() == 5);
    CHECK(cv.values.begin()->first == Partition({4}));
    CHECK(cv.values.rbegin()->first == Partition({1, 1, 1, 1}));
}
