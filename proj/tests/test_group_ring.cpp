#include <doctest.h>

#include <random>

#include "sds/character.hpp"
#include "sds/finite_field.hpp"
#include "sds/group_ring.hpp"

using namespace sds;

namespace {

GroupRingElement random_element(const AbelianGroup& G, std::mt19937& rng, int lo = -2, int hi = 2) {
    GroupRingElement A = ring_zero(G);
    std::uniform_int_distribution<int> coin(lo, hi);
    for (Int g = 0; g < G.order(); ++g) A.coeffs[g] = coin(rng);
    return A;
}

} // namespace

TEST_CASE("to_ring places signs and rejects overlap") {
    AbelianGroup z13 = group_make({13});
    SignedSet qr(z13, {1, 3, 4, 9, 10, 12}, {});
    GroupRingElement A = to_ring(qr);
    CHECK(A.coeffs.sum() == 6);
    CHECK(A.coeffs[1] == 1);
    CHECK(A.coeffs[2] == 0);

    SignedSet neg_id(z13, {}, {0});
    CHECK(to_ring(neg_id).coeffs[0] == -1);

    CHECK_THROWS_AS(SignedSet(z13, {1, 2}, {2, 3}), std::invalid_argument);
}

TEST_CASE("ring_sum adds coefficientwise without magnitude restriction") {
    AbelianGroup G = group_make({5});
    GroupRingElement a = indicator(G, std::vector<Int>{1, 2});
    GroupRingElement b = ring_neg(a);
    std::vector<GroupRingElement> parts{a, b};
    CHECK(ring_sum(parts).coeffs.isZero());

    GroupRingElement rest = indicator(G, std::vector<Int>{1, 2, 3, 4});
    GroupRingElement id = indicator(G, std::vector<Int>{0});
    parts = {rest, id};
    CHECK(ring_sum(parts).coeffs == indicator_all(G).coeffs);

    parts = {a, a, a};
    CHECK(ring_sum(parts).coeffs[1] == 3);

    AbelianGroup H = group_make({7});
    std::vector<GroupRingElement> bad{a, ring_zero(H)};
    CHECK_THROWS_AS(ring_sum(bad), std::invalid_argument);
}

TEST_CASE("involution") {
    AbelianGroup z13 = group_make({13});
    // -1 is a square mod 13, so the square set is symmetric
    GroupRingElement qr = indicator(z13, std::vector<Int>{1, 3, 4, 9, 10, 12});
    CHECK(involution(qr).coeffs == qr.coeffs);

    AbelianGroup z5 = group_make({5});
    GroupRingElement one = indicator(z5, std::vector<Int>{1});
    CHECK(involution(one).coeffs == indicator(z5, std::vector<Int>{4}).coeffs);

    std::mt19937 rng(3);
    GroupRingElement A = random_element(group_make({4, 9}), rng);
    CHECK(involution(involution(A)).coeffs == A.coeffs);
}

TEST_CASE("convolution identities") {
    AbelianGroup G = group_make({3, 4});
    std::mt19937 rng(5);
    GroupRingElement A = random_element(G, rng);

    GroupRingElement id = indicator(G, std::vector<Int>{0});
    CHECK(convolve(A, id).coeffs == A.coeffs);

    GroupRingElement full = indicator_all(G);
    GroupRingElement sq = convolve(full, full);
    for (Int g = 0; g < G.order(); ++g) CHECK(sq.coeffs[g] == G.order());
}

TEST_CASE("hand convolution over Z_5") {
    // P = {1}, N = {0,2,3,4}: D D^(-1) has 5 at the identity and 1 elsewhere
    AbelianGroup z5 = group_make({5});
    SignedSet D(z5, {1}, {0, 2, 3, 4});
    GroupRingElement E = convolve(to_ring(D), involution(to_ring(D)));
    CHECK(E.coeffs[0] == 5);
    for (Int g = 1; g < 5; ++g) CHECK(E.coeffs[g] == 1);
}

TEST_CASE("characters turn convolution into multiplication") {
    std::mt19937 rng(9);
    for (auto orders : std::vector<std::vector<Int>>{{12}, {3, 3, 3}, {2, 4, 8}}) {
        AbelianGroup G = group_make(orders);
        GroupRingElement A = random_element(G, rng), B = random_element(G, rng);
        GroupRingElement AB = convolve(A, B);
        for (Int ci = 0; ci < G.order(); ci += 3) {
            Character chi = character(G, ci);
            CHECK(ci_equal(char_sum(chi, AB), ci_mul(char_sum(chi, A), char_sum(chi, B))));
        }
    }
}

TEST_CASE("involution distributes over convolution") {
    std::mt19937 rng(13);
    AbelianGroup G = group_make({5, 5});
    GroupRingElement A = random_element(G, rng), B = random_element(G, rng);
    CHECK(involution(convolve(A, B)).coeffs == convolve(involution(A), involution(B)).coeffs);
}

TEST_CASE("identity coefficient of A A^(-1) is the squared size") {
    std::mt19937 rng(17);
    for (auto orders : std::vector<std::vector<Int>>{{11}, {6, 4}}) {
        AbelianGroup G = group_make(orders);
        GroupRingElement A = random_element(G, rng, -3, 3);
        GroupRingElement E = convolve(A, involution(A));
        CHECK(E.coeffs[0] == size_sq(A));
    }
}

TEST_CASE("signed_set_from_ring rejects large coefficients") {
    AbelianGroup G = group_make({5});
    GroupRingElement A = ring_zero(G);
    A.coeffs[1] = 2;
    CHECK_THROWS_AS(signed_set_from_ring(A), std::domain_error);
    A.coeffs[1] = -1;
    A.coeffs[2] = 1;
    SignedSet D = signed_set_from_ring(A);
    CHECK(D.negative() == std::vector<Int>{1});
    CHECK(D.positive() == std::vector<Int>{2});
}
