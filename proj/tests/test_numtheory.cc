#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "epf/numtheory.hh"
#include "epf/partition.hh"

using namespace epf;

namespace {

// Oracle: count solutions of sum a_i x_i = c (mod m) by full enumeration.
Int congruence_oracle(const std::vector<long>& a, long c, long m) {
    const size_t k = a.size();
    std::vector<long> x(k, 0);
    Int count = 0;
    while (true) {
        long s = 0;
        for (size_t i = 0; i < k; ++i) s += a[i] * x[i];
        if (((s - c) % m + m) % m == 0) ++count;
        size_t i = 0;
        while (i < k && x[i] == m - 1) x[i++] = 0;
        if (i == k) break;
        ++x[i];
    }
    return count;
}

}  // namespace

TEST_CASE("partitions_of: order and counts") {
    auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].parts() == std::vector<int>{3});
    CHECK(p3[1].parts() == std::vector<int>{2, 1});
    CHECK(p3[2].parts() == std::vector<int>{1, 1, 1});
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());
    // canonical order is strictly increasing under operator<
    auto p9 = partitions_of(9);
    for (size_t i = 1; i < p9.size(); ++i) CHECK(p9[i - 1] < p9[i]);
}

TEST_CASE("partition accessors") {
    Partition lam({4, 2, 1});
    CHECK(lam.n() == 7);
    CHECK(lam.ell() == 3);
    CHECK(lam.conjugate().parts() == std::vector<int>{3, 2, 1, 1});
    CHECK(lam.key() == "4+2+1");
    CHECK(Partition::from_key("4+2+1") == lam);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
}

TEST_CASE("z_of") {
    CHECK(z_of(Partition({1, 1, 1})) == 6);
    CHECK(z_of(Partition({2, 1})) == 2);
    CHECK(z_of(Partition({3, 3})) == 18);
}

TEST_CASE("class sizes n!/z_lambda sum to n!") {
    for (int n = 1; n <= 8; ++n) {
        Int fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
        Int total = 0;
        for (const auto& lam : partitions_of(n)) total += fact / z_of(lam);
        CHECK(total == fact);
    }
}

TEST_CASE("gcd_of_partition") {
    CHECK(gcd_of_partition(Partition({3, 3})) == 3);
    CHECK(gcd_of_partition(Partition({2, 1})) == 1);
    CHECK(gcd_of_partition(Partition({6, 4, 2})) == 2);
}

TEST_CASE("moebius") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
    // sum_{d|n} mu(d) = [n == 1]
    for (long n = 1; n <= 100; ++n) {
        int s = 0;
        for (long d : divisors(n)) s += moebius(d);
        CHECK(s == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("jordan_totient2: values and divisor-sum identity") {
    CHECK(jordan_totient2(3) == 8);
    CHECK(jordan_totient2(1) == 1);
    CHECK(jordan_totient2(2) == 3);
    for (long m = 1; m <= 200; ++m) {
        Int sum = 0;
        for (long d : divisors(m)) sum += jordan_totient2(d);
        CHECK(sum == Int(m) * m);
        Int inv = 0;
        for (long d : divisors(m)) inv += Int(moebius(m / d)) * d * d;
        CHECK(inv == jordan_totient2(m));
    }
}

TEST_CASE("b_stat: values and odd-gcd parity") {
    CHECK(b_stat(Partition({1, 1, 1})) == 0);
    CHECK(b_stat(Partition({3})) == 3);
    CHECK(b_stat(Partition({2, 2, 2})) == 3);
    for (int n = 1; n <= 9; ++n)
        for (const auto& lam : partitions_of(n)) {
            const int d = gcd_of_partition(lam);
            if (d % 2 == 1) CHECK(b_stat(lam) % d == 0);
        }
}

TEST_CASE("count_congruence_solutions: frozen examples") {
    CHECK(count_congruence_solutions({1}, 3, 5) == 1);
    CHECK(count_congruence_solutions({2, 4}, 0, 6) == 12);
    CHECK(count_congruence_solutions({3}, 1, 6) == 0);
    CHECK(congruence_oracle({2, 4}, 0, 6) == 12);
    CHECK(congruence_oracle({3}, 1, 6) == 0);
}

TEST_CASE("count_congruence_solutions vs enumeration, k <= 3, m <= 12") {
    for (long m = 1; m <= 12; ++m) {
        for (long a1 = 0; a1 < m; ++a1) {
            for (long c = 0; c < m; ++c)
                CHECK(count_congruence_solutions({a1}, c, m) == congruence_oracle({a1}, c, m));
            for (long a2 = 0; a2 < m; ++a2) {
                for (long c = 0; c < m; ++c)
                    CHECK(count_congruence_solutions({a1, a2}, c, m) ==
                          congruence_oracle({a1, a2}, c, m));
                if (m <= 8) {
                    for (long a3 = 0; a3 < m; ++a3)
                        for (long c = 0; c < m; ++c)
                            CHECK(count_congruence_solutions({a1, a2, a3}, c, m) ==
                                  congruence_oracle({a1, a2, a3}, c, m));
                }
            }
        }
    }
}

TEST_CASE("divisors, binomial, v2") {
    CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<long>{1});
    CHECK(binomial(5, 3) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(100, 50) == Int("100891344545564193334812497256"));
    CHECK(v2(12) == 2);
    CHECK(v2(7) == 0);
    CHECK(v2(64) == 6);
}

TEST_CASE("sum over partitions of n^ell / z equals C(2n-1, n)") {
    for (int n = 1; n <= 12; ++n) {
        Rat total(0);
        for (const auto& lam : partitions_of(n))
            total += Rat(int_pow(Int(n), static_cast<unsigned long>(lam.ell()))) / Rat(z_of(lam));
        CHECK(total == Rat(binomial(2 * static_cast<unsigned long>(n) - 1,
                                    static_cast<unsigned long>(n))));
    }
}
