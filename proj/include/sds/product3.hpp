#pragma once

#include <array>
#include <string>

#include "sds/group_ring.hpp"
#include "sds/types.hpp"

namespace sds {

/// Data for the 3-group product construction over Z_3^{2m+1} = G_0 x G_1 x G_1
/// with G_0 = Z_3 and G_1 = Z_3^m. Coordinates are laid out as
/// (g0, g1[0..m), g1'[0..m)).
struct Product3Spec {
    int m = 2;        // even, >= 2
    Int x0 = 1;       // nonzero element of G_0
    Int x1 = 0;       // element index in G_1
    SignedSet dprime; // a (3^m, 3^m - 1, -1) signed set over G_1
};

/// Default spec: D' lifted from the nonzero squares of GF(3^m); x1 = 0 keeps
/// the three blocks disjoint so the result is a strict +-1 signed set.
Product3Spec product3_default_spec(int m, Int x1 = 0);

AbelianGroup product3_group(int m);  // Z_3^{2m+1}

/// Sum of the three blocks (x0, 0, G_1) + (0, G_1, x1) + (0, D', D').
/// Validates the spec invariants, then verifies the result: by convolution
/// for m = 2, by the character scan for larger m. Throws on any failure.
GroupRingElement product3_construct(const Product3Spec& spec);

/// Character-side verification following the four-way split of the parameter
/// tuple (a, b1, b2) of a character of G_0 x G_1 x G_1: (1) b1 = 0, b2 != 0;
/// (2) b1 != 0, b2 = 0; (3) b1 = b2 = 0, a != 0; (4) b1, b2 != 0. Each
/// non-principal character must satisfy |chi(D)|^2 = 3^{2m} exactly.
struct Product3CharReport {
    bool ok = false;
    std::array<Int, 4> case_counts{};  // characters checked per case
    Int principal_value = 0;           // chi_0(D), for reference
    std::string failure;
    Int witness_character = -1;        // lowest failing character index
};

Product3CharReport product3_char_verify(const GroupRingElement& D, int m);

} // namespace sds
