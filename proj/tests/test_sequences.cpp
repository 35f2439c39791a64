#include <doctest.h>

#include <random>

#include "sds/cyclotomy.hpp"
#include "sds/sequences.hpp"

using namespace sds;

namespace {

SignedSet qr13() {
    AbelianGroup z13 = group_make({13});
    return SignedSet(z13, {1, 3, 4, 9, 10, 12}, {2, 5, 6, 7, 8, 11});
}

SignedSet case4_sds_13() {
    FiniteField F = FiniteField::make(13, 1);
    CyclotomicSystem sys = cyclotomic_system(F);
    return table3_construct(sys, "4", 0, 2).set;
}

SignedSet random_signed_set(Int v, std::mt19937& rng) {
    AbelianGroup G = group_make({v});
    std::uniform_int_distribution<int> coin(0, 3);
    std::vector<Int> pos, neg;
    for (Int g = 0; g < v; ++g) {
        int c = coin(rng);
        if (c == 1) pos.push_back(g);
        if (c == 2) neg.push_back(g);
    }
    return SignedSet(G, std::move(pos), std::move(neg));
}

} // namespace

TEST_CASE("sequence transcription of the quadratic-residue set") {
    TernarySequence S = sequence_from_sds(qr13());
    std::vector<int> expected{0, 1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1, 1};
    CHECK(S.symbols == expected);

    AbelianGroup z4 = group_make({4});
    TernarySequence empty = sequence_from_sds(SignedSet(z4, {}, {}));
    CHECK(empty.symbols == std::vector<int>{0, 0, 0, 0});

    AbelianGroup z5 = group_make({5});
    TernarySequence s5 = sequence_from_sds(SignedSet(z5, {1}, {0, 2, 3, 4}));
    CHECK(s5.symbols == std::vector<int>{-1, 1, -1, -1, -1});

    AbelianGroup e9 = group_make({3, 3});
    CHECK_THROWS_AS(sequence_from_sds(SignedSet(e9, {1}, {})), std::invalid_argument);
}

TEST_CASE("autocorrelation basics") {
    TernarySequence S = sequence_from_sds(qr13());
    CHECK(autocorrelation(S, 0) == 12);  // number of nonzero symbols
    for (Int tau = 1; tau < 13; ++tau) CHECK(autocorrelation(S, tau) == -1);
    CHECK_THROWS_AS(autocorrelation(S, 13), std::invalid_argument);

    TernarySequence zero{4, {0, 0, 0, 0}};
    for (Int tau = 0; tau < 4; ++tau) CHECK(autocorrelation(zero, tau) == 0);
}

TEST_CASE("two-level detection") {
    CHECK(is_two_level(sequence_from_sds(qr13())));
    CHECK(!is_two_level(TernarySequence{4, {0, 0, 0, 0}}));

    // lambda = 0 set: out-of-phase values are 0, not -1
    TernarySequence S = sequence_from_sds(case4_sds_13());
    CHECK(!is_two_level(S));
    for (Int tau = 1; tau < 13; ++tau) CHECK(autocorrelation(S, tau) == 0);
}

TEST_CASE("autocorrelation equals the convolution coefficients") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        Int v = 5 + static_cast<Int>(rng() % 46);
        SignedSet D = random_signed_set(v, rng);
        GroupRingElement E = convolve(to_ring(D), involution(to_ring(D)));
        TernarySequence S = sequence_from_sds(D);
        for (Int tau = 0; tau < v; ++tau) CHECK(autocorrelation(S, tau) == E.coeffs[tau]);

        SdsCheck check = verify_sds(to_ring(D));
        CHECK(is_two_level(S) == (check.ok && check.params.lambda == -1));
    }
}

TEST_CASE("weighing matrix from the (13,9,0) set") {
    WeighingMatrix W = weighing_from_sds(case4_sds_13());
    CHECK(W.order() == 13);
    CHECK(W.weight == 9);
    REQUIRE(W.dense.rows() == 13);
    // circulant structure: each row is the previous one shifted
    for (Int r = 1; r < 13; ++r)
        for (Int c = 0; c < 13; ++c) CHECK(W.dense(r, c) == W.dense(r - 1, (c + 12) % 13));
    IntMatrix gram = W.dense * W.dense.transpose();
    CHECK(gram == IntMatrix(9 * IntMatrix::Identity(13, 13)));
}

TEST_CASE("weighing matrix edge cases") {
    AbelianGroup z6 = group_make({6});
    WeighingMatrix identity = weighing_from_sds(SignedSet(z6, {0}, {}));
    CHECK(identity.weight == 1);
    CHECK(identity.dense == IntMatrix(IntMatrix::Identity(6, 6)));

    CHECK_THROWS_AS(weighing_from_sds(qr13()), std::invalid_argument);  // lambda = -1
}

TEST_CASE("orders above 512 use the sampled row-pair check") {
    AbelianGroup big = group_make({600});
    WeighingMatrix W = weighing_from_sds(SignedSet(big, {0}, {}));
    CHECK(W.weight == 1);
    CHECK(W.dense.rows() == 0);  // not materialized
    CHECK(W.first_row[0] == 1);
    CHECK(W.first_row.sum() == 1);
}

TEST_CASE("weighing check works for every exported matrix k = (|P|-|N|)^2") {
    WeighingMatrix W = weighing_from_sds(case4_sds_13());
    SignedSet D = case4_sds_13();
    Int diff = static_cast<Int>(D.positive().size()) - static_cast<Int>(D.negative().size());
    CHECK(W.weight == diff * diff);
}
