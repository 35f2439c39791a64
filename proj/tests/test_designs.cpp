#include <doctest.h>

#include <random>

#include "sds/character.hpp"
#include "sds/designs.hpp"
#include "sds/finite_field.hpp"

using namespace sds;

namespace {

SignedSet qr_signed_set_13() {
    AbelianGroup z13 = group_make({13});
    return SignedSet(z13, {1, 3, 4, 9, 10, 12}, {2, 5, 6, 7, 8, 11});
}

} // namespace

TEST_CASE("verify_sds on the quadratic-residue set of Z_13") {
    SdsCheck check = verify_sds(to_ring(qr_signed_set_13()), true);
    REQUIRE(check.ok);
    CHECK(check.params == SdsParams{13, 12, -1});
    CHECK(check.strict);
    CHECK(check.pos_count == 6);
    CHECK(check.neg_count == 6);
}

TEST_CASE("verify_sds on the identity indicator") {
    AbelianGroup G = group_make({3, 3});
    GroupRingElement D = indicator(G, std::vector<Int>{0});
    SdsCheck check = verify_sds(D);
    REQUIRE(check.ok);
    CHECK(check.params == SdsParams{9, 1, 0});
}

TEST_CASE("verify_sds failure carries a witness") {
    AbelianGroup z7 = group_make({7});
    SignedSet D(z7, {1, 2}, {});
    SdsCheck check = verify_sds(to_ring(D));
    CHECK(!check.ok);
    CHECK(check.witness_g >= 0);
    CHECK(check.witness_h >= 0);
}

TEST_CASE("verify_sds strictness flag") {
    AbelianGroup z5 = group_make({5});
    GroupRingElement D = ring_zero(z5);
    D.coeffs[1] = 2;  // D D^(-1) = 4 at identity only: a valid relaxed element
    SdsCheck relaxed = verify_sds(D);
    CHECK(relaxed.ok);
    CHECK(!relaxed.strict);
    CHECK(relaxed.strict_violations == 1);
    CHECK(relaxed.params == SdsParams{5, 4, 0});

    SdsCheck strict = verify_sds(D, true);
    CHECK(!strict.ok);
    CHECK(strict.witness_g == 1);
}

TEST_CASE("verify_pds on Paley sets") {
    FiniteField F13 = FiniteField::make(13, 1);
    PdsCheck check = verify_pds(additive_group(F13), paley_pds(F13));
    REQUIRE(check.ok);
    CHECK(check.params == PdsParams{13, 6, 2, 3});
    CHECK(check.regular);
}

TEST_CASE("verify_pds accepts the explicit (9,4,1,2) set") {
    AbelianGroup G = group_make({3, 3});
    std::vector<Int> D{G.element({1, 1}), G.element({2, 1}), G.element({1, 2}), G.element({2, 2})};
    PdsCheck check = verify_pds(G, D);
    REQUIRE(check.ok);
    CHECK(check.params == PdsParams{9, 4, 1, 2});
    CHECK(check.regular);
}

TEST_CASE("verify_pds degenerate and error cases") {
    AbelianGroup z7 = group_make({7});
    PdsCheck empty = verify_pds(z7, {});
    CHECK(empty.ok);
    CHECK(empty.params == PdsParams{7, 0, 0, 0});

    // the full set G - 0: mu is unconstrained and reports 0
    PdsCheck full = verify_pds(z7, {1, 2, 3, 4, 5, 6});
    CHECK(full.ok);
    CHECK(full.params == PdsParams{7, 6, 5, 0});
    CHECK(full.regular);

    CHECK_THROWS_AS(verify_pds(z7, {0, 1}), std::invalid_argument);

    PdsCheck bad = verify_pds(z7, {1, 2});
    CHECK(!bad.ok);
    CHECK(bad.witness >= 0);
}

TEST_CASE("feasibility gate") {
    Feasibility a = feasible(13, 12, -1, 6, 6);
    CHECK(a.ok);
    CHECK(a.root == 0);

    CHECK(242 + 161 * 242 == 39204);
    CHECK(198 * 198 == 39204);  // oracle for the frozen root below
    Feasibility b = feasible(243, 242, 161);
    CHECK(b.ok);
    CHECK(b.root == 198);

    CHECK(!feasible(7, 6, 1).ok);        // 12 is not a square
    CHECK(!feasible(11, 5, -2).ok);      // lambda < -1
    CHECK(!feasible(11, 3, -1).ok);      // k + lambda(v-1) < 0
    CHECK(!feasible(13, 12, -1, 7, 5).ok);  // sizes break the square identity
    CHECK(!feasible(13, 12, -1, 5, 5).ok);  // sizes do not sum to k
    CHECK_THROWS_AS(feasible(1, 1, 0), std::invalid_argument);
}

TEST_CASE("paley_pds squares") {
    FiniteField F13 = FiniteField::make(13, 1);
    CHECK(paley_pds(F13) == std::vector<Int>{1, 3, 4, 9, 10, 12});

    FiniteField F9 = FiniteField::make(3, 2);
    std::vector<Int> D9 = paley_pds(F9);
    CHECK(D9.size() == 4);
    PdsCheck check = verify_pds(additive_group(F9), D9);
    REQUIRE(check.ok);
    CHECK(check.params == PdsParams{9, 4, 1, 2});

    CHECK_THROWS_AS(paley_pds(FiniteField::make(7, 1)), std::invalid_argument);
}

TEST_CASE("sds_from_pds lifts Paley sets") {
    FiniteField F13 = FiniteField::make(13, 1);
    AbelianGroup G = additive_group(F13);
    SdsParams predicted;
    SignedSet D = sds_from_pds(G, paley_pds(F13), &predicted);
    CHECK(predicted == SdsParams{13, 12, -1});
    CHECK(D.positive() == std::vector<Int>{1, 3, 4, 9, 10, 12});
    CHECK(D.negative().size() == 6);
}

TEST_CASE("sds_from_pds rejects lambda = mu inputs") {
    // quadratic residues mod 7 form a (7,3,1,1) difference set
    AbelianGroup z7 = group_make({7});
    PdsCheck check = verify_pds(z7, {1, 2, 4});
    REQUIRE(check.ok);
    CHECK(check.params.lambda == check.params.mu);
    CHECK_THROWS_AS(sds_from_pds(z7, {1, 2, 4}), std::invalid_argument);
}

TEST_CASE("golay_pds builds the (243,22,1,2) set") {
    std::vector<Int> D = golay_pds();
    CHECK(D.size() == 22);
    AbelianGroup G = golay_group();

    PdsCheck check = verify_pds(G, D);
    REQUIRE(check.ok);
    CHECK(check.params == PdsParams{243, 22, 1, 2});
    CHECK(check.regular);

    // complement G - D - 0
    std::vector<bool> in(243, false);
    for (Int g : D) in[static_cast<size_t>(g)] = true;
    std::vector<Int> comp;
    for (Int g = 1; g < 243; ++g)
        if (!in[static_cast<size_t>(g)]) comp.push_back(g);
    PdsCheck cc = verify_pds(G, comp);
    REQUIRE(cc.ok);
    CHECK(cc.params == PdsParams{243, 220, 199, 200});

    CHECK(golay_pds() == D);  // deterministic

    SdsParams predicted;
    SignedSet lifted = sds_from_pds(G, D, &predicted);
    CHECK(predicted == SdsParams{243, 242, 161});
    CHECK(lifted.size() == 242);
}

TEST_CASE("paley_exists") {
    CHECK(paley_exists(13).exists);
    CHECK(paley_exists(9).exists);
    CHECK(paley_exists(81).exists);        // 3^4, also a prime power
    CHECK(paley_exists(625 * 9).exists);   // 9 * 5^4
    CHECK(!paley_exists(15).exists);
    CHECK(!paley_exists(21).exists);
    CHECK(!paley_exists(3).exists);        // prime power but 3 mod 4
    CHECK_THROWS_AS(paley_exists(14), std::invalid_argument);
    CHECK_THROWS_AS(paley_exists(1), std::invalid_argument);
}

TEST_CASE("convolution and character verifiers agree on constructed sets") {
    std::mt19937 rng(31);
    for (Int q : {5, 13, 17, 29}) {
        FiniteField F = FiniteField::make(q, 1);
        AbelianGroup G = additive_group(F);
        SignedSet D = sds_from_pds(G, paley_pds(F));
        SdsCheck check = verify_sds(to_ring(D));
        REQUIRE(check.ok);
        CHECK(character_criterion(to_ring(D), check.params.n()) == -1);
    }
    // and an element that is not an SDS must fail the character side too:
    // if every |chi(D)|^2 equaled k - E_1 the convolution check would pass
    AbelianGroup z11 = group_make({11});
    std::uniform_int_distribution<int> coin(-1, 1);
    for (int trial = 0; trial < 20; ++trial) {
        GroupRingElement junk = ring_zero(z11);
        for (Int g = 0; g < 11; ++g) junk.coeffs[g] = coin(rng);
        SdsCheck check = verify_sds(junk);
        if (check.ok) continue;
        GroupRingElement E = convolve(junk, involution(junk));
        CHECK(character_criterion(junk, size_sq(junk) - E.coeffs[1]) >= 0);
    }
}
