#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epf/action.hh"
#include "epf/character.hh"
#include "epf/orbits.hh"
#include "epf/parking.hh"
#include "epf/symfun.hh"

using namespace epf;

namespace {

SymFun p_elem(int degree, std::initializer_list<std::pair<Partition, Rat>> coeffs) {
    SymFun f;
    f.degree = degree;
    f.basis = Basis::p;
    for (const auto& [lam, c] : coeffs) f.set(lam, c);
    return f;
}

Rat half() { return Rat(1, 2); }

}  // namespace

TEST_CASE("frobenius: golden p-expansions at n = 3") {
    const SymFun f1 = frobenius(character_vector(3, 1));
    CHECK(f1 == p_elem(3, {{Partition({2, 1}), half()}, {Partition({1, 1, 1}), half()}}));

    const SymFun f3 = frobenius(character_vector(3, 3));
    CHECK(f3 == p_elem(3, {{Partition({3}), Rat(1)},
                           {Partition({2, 1}), half()},
                           {Partition({1, 1, 1}), half()}}));
}

TEST_CASE("frobenius: golden p-expansions at n = 6") {
    const SymFun f1 = frobenius(character_vector(6, 1));
    const SymFun want1 = p_elem(6, {{Partition({1, 1, 1, 1, 1, 1}), Rat(9, 5)},
                                    {Partition({2, 1, 1, 1, 1}), Rat(9, 2)},
                                    {Partition({2, 2, 1, 1}), Rat(9, 4)},
                                    {Partition({2, 2, 2}), Rat(1, 4)},
                                    {Partition({3, 1, 1, 1}), Rat(2)},
                                    {Partition({3, 2, 1}), Rat(1)},
                                    {Partition({4, 1, 1}), Rat(3, 4)},
                                    {Partition({4, 2}), Rat(1, 4)},
                                    {Partition({5, 1}), Rat(1, 5)}});
    CHECK(f1 == want1);

    SymFun want3 = want1;
    want3.set(Partition({3, 3}), half());
    want3.set(Partition({6}), half());
    CHECK(frobenius(character_vector(6, 3)) == want3);
}

TEST_CASE("character table: small values and orthogonality") {
    const CharacterTable& t2 = character_table(2);
    CHECK(t2.value(Partition({2}), Partition({2})) == 1);
    CHECK(t2.value(Partition({2}), Partition({1, 1})) == 1);
    CHECK(t2.value(Partition({1, 1}), Partition({1, 1})) == 1);
    CHECK(t2.value(Partition({1, 1}), Partition({2})) == -1);

    const CharacterTable& t3 = character_table(3);
    CHECK(t3.value(Partition({2, 1}), Partition({1, 1, 1})) == 2);  // f^{21}
    CHECK(t3.value(Partition({2, 1}), Partition({3})) == -1);

    for (int n = 1; n <= 8; ++n) {
        const CharacterTable& t = character_table(n);
        CHECK(t.check_orthogonality());
        // first row all ones; dimension column positive
        for (const auto& lam : t.parts()) CHECK(t.value(Partition({n}), lam) == 1);
        const Partition ones(std::vector<int>(static_cast<size_t>(n), 1));
        for (const auto& mu : t.parts()) CHECK(t.value(mu, ones) >= 1);
    }

    CHECK_THROWS_AS(character_table(13), std::invalid_argument);
}

TEST_CASE("to_schur: golden expansions") {
    const SymFun s1 = to_schur(frobenius(character_vector(3, 1)));
    CHECK(s1.coeff(Partition({3})) == 1);
    CHECK(s1.coeff(Partition({2, 1})) == 1);
    CHECK(s1.coeff(Partition({1, 1, 1})) == 0);

    const SymFun s3 = to_schur(frobenius(character_vector(3, 3)));
    CHECK(s3.coeff(Partition({3})) == 2);
    CHECK(s3.coeff(Partition({2, 1})) == 0);
    CHECK(s3.coeff(Partition({1, 1, 1})) == 1);

    // p_{1^3} = s_3 + 2 s_{21} + s_{111} (regular representation)
    const SymFun reg = to_schur(p_elem(3, {{Partition({1, 1, 1}), Rat(1)}}));
    CHECK(reg.coeff(Partition({3})) == 1);
    CHECK(reg.coeff(Partition({2, 1})) == 2);
    CHECK(reg.coeff(Partition({1, 1, 1})) == 1);
}

TEST_CASE("to_h: golden expansions and round trips") {
    const SymFun h1 = to_h(frobenius(character_vector(3, 1)));
    CHECK(h1.coeffs.size() == 1);
    CHECK(h1.coeff(Partition({2, 1})) == 1);

    const SymFun h3 = to_h(frobenius(character_vector(3, 3)));
    CHECK(h3.coeff(Partition({3})) == 3);
    CHECK(h3.coeff(Partition({2, 1})) == -2);
    CHECK(h3.coeff(Partition({1, 1, 1})) == 1);

    for (int n = 1; n <= 8; ++n) {
        // h_n itself: to_h(sum_lambda p_lambda / z_lambda) = h_n
        SymFun hn;
        hn.degree = n;
        hn.basis = Basis::p;
        for (const auto& lam : partitions_of(n)) hn.set(lam, Rat(1) / Rat(z_of(lam)));
        const SymFun h = to_h(hn);
        CHECK(h.coeffs.size() == 1);
        CHECK(h.coeff(Partition({n})) == 1);

        // h -> p -> h round trip on the Frobenius images
        for (int c = 1; c <= n; ++c) {
            const SymFun f = frobenius(character_vector(n, c));
            CHECK(h_to_p(to_h(f)) == f);
        }
    }
}

TEST_CASE("multiplicity and positivity flags") {
    const SymFun f3 = frobenius(character_vector(3, 3));
    CHECK(multiplicity(f3, Partition({3})) == 2);
    CHECK(multiplicity(f3, Partition({3})) == orbits_cn(3));
    CHECK(is_h_positive(frobenius(character_vector(3, 1))));
    CHECK_FALSE(is_h_positive(f3));
    CHECK(is_schur_positive(f3));

    // non-representation class functions are flagged, not rejected
    const SymFun signed_fun = p_elem(2, {{Partition({2}), Rat(1)}});  // s_2 - s_{11}
    CHECK_FALSE(is_schur_positive(signed_fun));
    CHECK(multiplicity(signed_fun, Partition({1, 1})) == -1);
    const SymFun fractional = p_elem(2, {{Partition({1, 1}), Rat(1, 3)}});
    CHECK_FALSE(is_schur_positive(fractional));
    CHECK_THROWS_AS(multiplicity(fractional, Partition({2})), integrality_error);
}

TEST_CASE("Frob(tau_{n,c}) is Schur positive with total dimension n^{n-2}") {
    for (int n = 2; n <= 8; ++n) {
        const CharacterTable& t = character_table(n);
        const Partition ones(std::vector<int>(static_cast<size_t>(n), 1));
        for (int c = 1; c <= n; ++c) {
            const SymFun s = to_schur(frobenius(character_vector(n, c)));
            CHECK(is_schur_positive(s));
            Rat dim(0);
            for (const auto& [mu, m] : s.coeffs)
                dim += m * Rat(Int(static_cast<long>(t.value(mu, ones))));
            CHECK(to_int(dim) == int_pow(Int(n), static_cast<unsigned long>(n - 2)));
        }
    }
}

TEST_CASE("trivial multiplicity equals the orbit count") {
    for (int n = 1; n <= 6; ++n)
        for (int c = 1; c <= n; ++c)
            CHECK(multiplicity(frobenius(character_vector(n, c)), Partition({n})) ==
                  burnside_orbit_count(n, c));
}

TEST_CASE("standard_multiplicity") {
    CHECK(standard_multiplicity(3) == 1);
    CHECK(standard_multiplicity(4) == 3);
    CHECK(standard_multiplicity(2) == 0);
    for (int n = 2; n <= 7; ++n)
        CHECK(standard_multiplicity(n) ==
              multiplicity(frobenius(character_vector(n, 1)), Partition({n - 1, 1})));
}

TEST_CASE("principal specialization") {
    SymFun hn;
    hn.degree = 4;
    hn.basis = Basis::p;
    for (const auto& lam : partitions_of(4)) hn.set(lam, Rat(1) / Rat(z_of(lam)));
    CHECK(principal_specialization(hn, 4) == Rat(35));

    for (int n = 1; n <= 6; ++n) {
        SymFun pn;
        pn.degree = n;
        pn.basis = Basis::p;
        pn.set(Partition(std::vector<int>(static_cast<size_t>(n), 1)), Rat(1));
        CHECK(principal_specialization(pn, n) == Rat(int_pow(Int(n), static_cast<unsigned long>(n))));
    }

    CHECK(principal_specialization(frobenius(character_vector(3, 1)), 3) == Rat(18));
}
