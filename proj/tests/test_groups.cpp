#include <doctest.h>

#include <random>

#include "sds/abelian_group.hpp"
#include "sds/character.hpp"
#include "sds/cyclotomic.hpp"
#include "sds/finite_field.hpp"
#include "sds/group_ring.hpp"

using namespace sds;

TEST_CASE("group_make basics") {
    AbelianGroup z13 = group_make({13});
    CHECK(z13.order() == 13);
    CHECK(z13.is_cyclic());
    CHECK(z13.exponent() == 13);

    AbelianGroup e243 = group_make({3, 3, 3, 3, 3});
    CHECK(e243.order() == 243);
    CHECK(e243.exponent() == 3);

    AbelianGroup mixed = group_make({3, 9, 9});
    CHECK(mixed.order() == 243);
    CHECK(mixed.exponent() == 9);

    CHECK_THROWS_AS(group_make({}), std::invalid_argument);
    CHECK_THROWS_AS(group_make({4, 0}), std::invalid_argument);
}

TEST_CASE("element indexing round-trips and add/neg agree with coordinates") {
    std::mt19937 rng(11);
    AbelianGroup G = group_make({4, 3, 5});
    std::uniform_int_distribution<Int> pick(0, G.order() - 1);
    for (Int g = 0; g < G.order(); ++g) CHECK(G.element(G.coords(g)) == g);
    for (int trial = 0; trial < 200; ++trial) {
        Int a = pick(rng), b = pick(rng);
        auto ca = G.coords(a), cb = G.coords(b);
        std::vector<Int> cs(ca.size());
        for (size_t i = 0; i < ca.size(); ++i) cs[i] = (ca[i] + cb[i]) % G.orders()[i];
        CHECK(G.add(a, b) == G.element(cs));
        CHECK(G.add(a, G.neg(a)) == 0);
    }
}

TEST_CASE("additive group of a field shares element indexing") {
    FiniteField F9 = FiniteField::make(3, 2);
    AbelianGroup G = additive_group(F9);
    CHECK(G.orders() == std::vector<Int>{3, 3});
    for (Int x = 0; x < 9; ++x)
        for (Int y = 0; y < 9; ++y) CHECK(G.add(x, y) == F9.add(x, y));

    CHECK(additive_group(FiniteField::make(13, 1)).orders() == std::vector<Int>{13});
    CHECK(additive_group(FiniteField::make(3, 5)).order() == 243);
}

TEST_CASE("character evaluation") {
    AbelianGroup z3 = group_make({3});
    Character principal = character(z3, 0);
    CHECK(is_principal(principal));
    for (Int x = 0; x < 3; ++x) CHECK(ci_equal(char_eval(principal, x), ci_integer(3, 1)));

    Character chi1 = character(z3, 1);
    CHECK(ci_equal(char_eval(chi1, 1), ci_root(3, 1)));

    AbelianGroup z13 = group_make({13});
    CHECK(ci_equal(char_eval(character(z13, 1), 6), ci_root(13, 6)));
}

TEST_CASE("character sums") {
    AbelianGroup z13 = group_make({13});
    SignedSet D(z13, {1, 3, 4}, {2, 5});
    CHECK(ci_as_integer(char_sum(character(z13, 0), to_ring(D))) == 1);  // |P| - |N|

    CHECK(ci_as_integer(char_sum(character(z13, 0), indicator_all(z13))) == 13);
    for (Int ci = 1; ci < 13; ++ci)
        CHECK(ci_is_zero(char_sum(character(z13, ci), indicator_all(z13))));
}

TEST_CASE("character orthogonality on small groups") {
    for (auto orders : std::vector<std::vector<Int>>{{12}, {2, 2, 3}, {9, 3}, {25}}) {
        AbelianGroup G = group_make(orders);
        Int m = G.exponent();
        for (Int g = 1; g < G.order(); ++g) {
            CyclotomicInteger acc = ci_zero(m);
            for (Int ci = 0; ci < G.order(); ++ci)
                acc = ci_add(acc, char_eval(character(G, ci), g));
            CHECK(ci_is_zero(acc));
        }
    }
}

TEST_CASE("cyclotomic integer arithmetic") {
    // (1 + z)(1 + z^2) = 1 in Z[zeta_3] since 1 + z + z^2 = 0
    CyclotomicInteger a = ci_add(ci_integer(3, 1), ci_root(3, 1));
    CyclotomicInteger b = ci_add(ci_integer(3, 1), ci_root(3, 2));
    CHECK(ci_equal(ci_mul(a, b), ci_integer(3, 1)));

    CHECK(ci_equal(ci_conj(ci_root(3, 1)), ci_root(3, 2)));
    CHECK(ci_equal(ci_mul(ci_root(13, 5), ci_root(13, 8)), ci_integer(13, 1)));

    CHECK_THROWS_AS(ci_add(ci_root(3, 1), ci_root(5, 1)), std::invalid_argument);
    CHECK(ci_is_integer(ci_integer(12, -7)));
    CHECK(!ci_is_integer(ci_root(12, 1)));
    CHECK(ci_as_integer(ci_integer(12, -7)) == -7);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Int>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
    // zeta^m = 1 in every basis
    for (Int m : {5, 8, 9, 15}) CHECK(ci_equal(ci_root(m, m), ci_integer(m, 1)));
}

TEST_CASE("inverse formula reconstructs known elements") {
    AbelianGroup z3 = group_make({3});

    // the identity element: all character sums equal 1
    std::vector<CyclotomicInteger> sums(3, ci_integer(3, 1));
    GroupRingElement back = coefficients_from_characters(sums, z3);
    CHECK(back.coeffs[0] == 1);
    CHECK(back.coeffs[1] == 0);
    CHECK(back.coeffs[2] == 0);

    // the full group: sums are (v, 0, 0)
    sums = {ci_integer(3, 3), ci_zero(3), ci_zero(3)};
    back = coefficients_from_characters(sums, z3);
    for (Int g = 0; g < 3; ++g) CHECK(back.coeffs[g] == 1);
}

TEST_CASE("inverse formula round-trips random signed sets over Z_3^3") {
    std::mt19937 rng(23);
    AbelianGroup G = group_make({3, 3, 3});
    for (int trial = 0; trial < 10; ++trial) {
        GroupRingElement A = ring_zero(G);
        std::uniform_int_distribution<int> coin(-1, 1);
        for (Int g = 0; g < G.order(); ++g) A.coeffs[g] = coin(rng);

        std::vector<CyclotomicInteger> sums;
        for (Int ci = 0; ci < G.order(); ++ci) sums.push_back(char_sum(character(G, ci), A));
        GroupRingElement back = coefficients_from_characters(sums, G);
        CHECK(back.coeffs == A.coeffs);
    }
}

TEST_CASE("inverse formula flags inconsistent sums") {
    AbelianGroup z3 = group_make({3});
    // sums of the identity element, corrupted at one character
    std::vector<CyclotomicInteger> sums(3, ci_integer(3, 1));
    sums[2] = ci_integer(3, 2);
    CHECK_THROWS_AS(coefficients_from_characters(sums, z3), std::domain_error);
}
