#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "epf/character.hh"
#include "epf/classify.hh"
#include "epf/numtheory.hh"

using namespace epf;

TEST_CASE("d_set: golden values") {
    CHECK(d_set(12) == std::vector<long>{1, 2, 3, 6});
    CHECK(d_set(6) == std::vector<long>{1, 3});
    for (long n : {1L, 3L, 9L, 15L, 45L}) CHECK(d_set(n) == divisors(n));
}

TEST_CASE("c_set: golden fibers at n = 12") {
    CHECK(c_set(12, 1) == std::vector<long>{1, 5, 7, 11});
    CHECK(c_set(12, 2) == std::vector<long>{2, 4, 8, 10});
    CHECK(c_set(12, 3) == std::vector<long>{3, 9});
    CHECK(c_set(12, 6) == std::vector<long>{6, 12});
    CHECK_THROWS_AS(c_set(12, 4), std::invalid_argument);
}

TEST_CASE("class_count") {
    CHECK(class_count(12) == 4);
    CHECK(class_count(6) == 2);
    CHECK(class_count(1) == 1);
    CHECK(class_count(36) == class_count(4) * class_count(9));
    // multiplicativity on coprime pairs
    for (long m : {3L, 4L, 5L, 8L, 9L})
        for (long n : {7L, 11L, 13L})
            CHECK(class_count(m * n) == class_count(m) * class_count(n));
}

TEST_CASE("classify: fibers are exactly the C_{n,k}, disjointly covering [n]") {
    for (long n = 1; n <= 100; ++n) {
        const Classification cl = classify(n);
        CHECK(cl.count == class_count(n));
        std::map<long, std::vector<long>> fibers;
        for (long c = 1; c <= n; ++c) fibers[cl.class_index.at(c)].push_back(c);
        CHECK(static_cast<long>(fibers.size()) == cl.count);
        for (long k : d_set(n)) CHECK(fibers.at(k) == c_set(n, k));
    }
}

TEST_CASE("disjoint union of C_{n,k} is [n], n <= 500") {
    for (long n = 1; n <= 500; ++n) {
        std::set<long> seen;
        size_t total = 0;
        for (long k : d_set(n)) {
            const auto fiber = c_set(n, k);
            total += fiber.size();
            seen.insert(fiber.begin(), fiber.end());
        }
        CHECK(total == static_cast<size_t>(n));  // no overlaps
        CHECK(seen.size() == static_cast<size_t>(n));
        CHECK(*seen.begin() == 1);
        CHECK(*seen.rbegin() == n);
    }
}

TEST_CASE("character-level classification matches the set-level one, n <= 12") {
    for (int n = 1; n <= 12; ++n) {
        const Classification cl = classify(n);
        std::map<std::vector<Int>, std::set<long>> by_char;
        for (int c = 1; c <= n; ++c) {
            std::vector<Int> vec;
            for (const auto& lam : partitions_of(n)) vec.push_back(chi(n, c, lam));
            by_char[vec].insert(c);
        }
        CHECK(static_cast<long>(by_char.size()) == class_count(n));
        std::set<std::set<long>> char_fibers;
        for (const auto& [vec, cs] : by_char) char_fibers.insert(cs);
        std::set<std::set<long>> set_fibers;
        for (long k : d_set(n)) {
            const auto fiber = c_set(n, k);
            set_fibers.insert(std::set<long>(fiber.begin(), fiber.end()));
        }
        CHECK(char_fibers == set_fibers);
    }
}

TEST_CASE("the cycle type (k^{n/k}) separates distinct classes") {
    for (int n = 2; n <= 60; ++n) {
        const auto dn = d_set(n);
        for (size_t i = 0; i < dn.size(); ++i)
            for (size_t j = 0; j < i; ++j) {
                const long k = dn[i], kp = dn[j];  // k > kp
                const Partition lam(std::vector<int>(static_cast<size_t>(n / k), static_cast<int>(k)));
                CHECK(chi(n, static_cast<int>(k), lam) != 0);
                CHECK(chi(n, static_cast<int>(kp), lam) == 0);
            }
    }
}

TEST_CASE("area class") {
    for (int n = 3; n <= 11; n += 2) CHECK(area_class(n) == 1);
    for (int n = 2; n <= 12; n += 2) CHECK(area_class(n) == 1 + n / 2);
    for (int n = 2; n <= 12; ++n) CHECK(verify_area_iso(n));
}
