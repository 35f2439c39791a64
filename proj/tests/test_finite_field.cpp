#include <doctest.h>

#include <random>

#include "sds/arith.hpp"
#include "sds/finite_field.hpp"

using namespace sds;

namespace {

// independent oracle: multiplicative order by repeated multiplication mod p
Int order_mod_p(Int a, Int p) {
    Int x = a % p, ord = 1;
    while (x != 1) {
        x = x * a % p;
        ++ord;
    }
    return ord;
}

Int smallest_primitive_root(Int p) {
    for (Int a = 2; a < p; ++a)
        if (order_mod_p(a, p) == p - 1) return a;
    return -1;
}

} // namespace

TEST_CASE("field_make picks the smallest primitive root of a prime field") {
    CHECK(smallest_primitive_root(13) == 2);  // oracle for the frozen value below
    FiniteField F = FiniteField::make(13, 1);
    CHECK(F.q() == 13);
    CHECK(F.generator() == 2);
    CHECK(F.modulus() == std::vector<Int>{0, 1});

    FiniteField F3 = FiniteField::make(3, 1);
    CHECK(F3.generator() == 2);

    FiniteField F17 = FiniteField::make(17, 1);
    CHECK(F17.generator() == smallest_primitive_root(17));
    CHECK(F17.generator() == 3);
}

TEST_CASE("field_make handles extension degrees") {
    FiniteField F243 = FiniteField::make(3, 5);
    CHECK(F243.q() == 243);
    CHECK(F243.p() == 3);
    CHECK(F243.degree() == 5);
    CHECK(poly::is_irreducible(F243.modulus(), 3));
    CHECK(F243.element_order(F243.generator()) == 242);

    FiniteField F9 = FiniteField::make(3, 2);
    CHECK(F9.q() == 9);
    // x^2 + 1 is the smallest-encoding irreducible quadratic over Z_3
    CHECK(F9.modulus() == std::vector<Int>{1, 0, 1});
}

TEST_CASE("field_make rejects bad input") {
    CHECK_THROWS_AS(FiniteField::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField::make(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField::make(13, 0), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField::make(2, 21), std::invalid_argument);  // q > 10^6
}

TEST_CASE("field arithmetic in GF(13)") {
    FiniteField F = FiniteField::make(13, 1);
    CHECK(F.mul(3, 9) == 1);
    CHECK(F.inv(8) == 5);
    CHECK(F.pow(F.generator(), F.q() - 1) == 1);
    CHECK(F.add(7, 9) == 3);
    CHECK(F.neg(5) == 8);
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
}

TEST_CASE("discrete log table") {
    FiniteField F13 = FiniteField::make(13, 1);
    CHECK(F13.log(8) == 3);  // 2^3 = 8
    CHECK(F13.log(1) == 0);
    FiniteField F17 = FiniteField::make(17, 1);
    CHECK(F17.log(13) == 4);  // 3^4 = 81 = 13 mod 17
    CHECK(F17.log_table()[0] == -1);

    for (Int x = 1; x < F13.q(); ++x) CHECK(F13.exp(F13.log(x)) == x);
}

TEST_CASE("frobenius is additive") {
    std::mt19937 rng(7);
    for (auto [p, n] : {std::pair<Int, int>{3, 2}, {3, 3}, {5, 2}}) {
        FiniteField F = FiniteField::make(p, n);
        std::uniform_int_distribution<Int> pick(0, F.q() - 1);
        for (int trial = 0; trial < 50; ++trial) {
            Int x = pick(rng), y = pick(rng);
            CHECK(F.pow(F.add(x, y), p) == F.add(F.pow(x, p), F.pow(y, p)));
        }
    }
}

TEST_CASE("field_make is deterministic") {
    FiniteField a = FiniteField::make(5, 3);
    FiniteField b = FiniteField::make(5, 3);
    CHECK(a == b);
    CHECK(a.modulus() == b.modulus());
    CHECK(a.generator() == b.generator());
}

TEST_CASE("explicit field presentation is validated") {
    CHECK_NOTHROW(FiniteField(13, 1, {0, 1}, 2));
    // x^2 + 1 = (x + 1)^2 over Z_2
    CHECK_THROWS_AS(FiniteField(2, 2, {1, 0, 1}, 2), std::invalid_argument);
    // order-1 element is not a generator
    CHECK_THROWS_AS(FiniteField(13, 1, {0, 1}, 1), std::invalid_argument);
    // in GF(9) with modulus x^2+1 the class of x has order 4
    CHECK_THROWS_AS(FiniteField(3, 2, {1, 0, 1}, 3), std::invalid_argument);
    FiniteField F9(3, 2, {1, 0, 1}, 4);  // 1 + x generates
    CHECK(F9.element_order(4) == 8);
}

TEST_CASE("coords round-trip") {
    FiniteField F = FiniteField::make(3, 4);
    for (Int x = 0; x < F.q(); ++x) CHECK(F.element(F.coords(x)) == x);
}
