#pragma once

#include <cstdint>
#include <vector>

#include "sds/designs.hpp"
#include "sds/group_ring.hpp"
#include "sds/types.hpp"

namespace sds {

/// Periodic sequence over {-1, 0, +1}.
struct TernarySequence {
    Int period = 0;
    std::vector<int> symbols;
};

/// Transcribe a signed set over a cyclic group: symbol i is +1, -1, 0 as
/// element i lies in P, N, or neither. Throws for non-cyclic groups.
TernarySequence sequence_from_sds(const SignedSet& D);

/// Exact periodic autocorrelation at shift tau in [0, period).
Int autocorrelation(const TernarySequence& S, Int tau);

/// True when every out-of-phase autocorrelation equals -1.
bool is_two_level(const TernarySequence& S);

std::vector<Int> autocorrelation_spectrum(const TernarySequence& S);

/// Group-invariant weighing matrix built from a signed set with lambda = 0:
/// entry (i, j) is the first-row value at g_j - g_i, and W W^T = k I holds
/// exactly. The dense matrix is materialized for order <= 512; above that
/// only the first row is kept and the orthogonality check samples 200 row
/// pairs with a seeded generator.
struct WeighingMatrix {
    AbelianGroup group;
    Int weight = 0;
    IntVector first_row;
    IntMatrix dense;  // 0 x 0 when not materialized

    Int order() const { return group.order(); }
};

WeighingMatrix weighing_from_sds(const SignedSet& D, std::uint64_t seed = 20240913);

} // namespace sds
