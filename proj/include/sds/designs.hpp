#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sds/finite_field.hpp"
#include "sds/group_ring.hpp"
#include "sds/types.hpp"

namespace sds {

struct SdsParams {
    Int v = 0, k = 0, lambda = 0;
    Int n() const { return k - lambda; }
    bool operator==(const SdsParams&) const = default;
};

struct PdsParams {
    Int v = 0, k = 0, lambda = 0, mu = 0;
    bool operator==(const PdsParams&) const = default;
};

/// Outcome of checking D D^(-1) = lambda G + n 0_G. `k` is the generalized
/// size sum a_g^2, which coincides with |P| + |N| for a +-1 element.
struct SdsCheck {
    bool ok = false;
    SdsParams params;
    bool strict = false;          // all coefficients in {-1, 0, +1}
    Int strict_violations = 0;    // elements with |coefficient| >= 2
    Int pos_count = 0;            // coefficients +1 (strict support sizes)
    Int neg_count = 0;
    Int coeff_sum = 0;            // chi_0(D) = sum a_g
    std::string failure;
    Int witness_g = -1, witness_h = -1;  // off-identity pair with differing counts
};

/// Verify the SDS equation by exact convolution. With `require_strict`, a
/// coefficient outside {-1,0,1} is a failure; otherwise strictness is only
/// reported.
SdsCheck verify_sds(const GroupRingElement& D, bool require_strict = false);

struct PdsCheck {
    bool ok = false;
    PdsParams params;
    bool regular = false;  // 0 not in D and D = -D
    std::string failure;
    Int witness = -1;
};

/// Verify D D^(-1) = lambda D + mu (G - D - 0_G) + k 0_G for a subset D.
/// Throws std::invalid_argument when 0_G is in D. Degenerate slots that the
/// equation does not constrain (empty D, or complement-free D) report 0.
PdsCheck verify_pds(const AbelianGroup& G, const std::vector<Int>& D);

struct Feasibility {
    bool ok = false;
    Int root = -1;  // the square root certificate when accepted
    std::string reason;
};

/// Counting condition: lambda >= -1 and k + lambda(v-1) a perfect square.
Feasibility feasible(Int v, Int k, Int lambda);
/// Additionally checks (|P|-|N|)^2 = k + lambda(v-1) and |P|+|N| = k.
Feasibility feasible(Int v, Int k, Int lambda, Int pos_size, Int neg_size);

/// Nonzero squares of F_q as indices in the additive group; requires
/// q = 1 mod 4 so the set is symmetric.
std::vector<Int> paley_pds(const FiniteField& F);

/// Lift of a regular PDS with lambda - mu = -1 to the signed set
/// P = D', N = G - D' - 0_G. Verifies the input, predicts
/// lambda = v - 4k + 4mu - 2, then re-verifies the output; throws on any
/// violation. `predicted` receives the predicted parameters when non-null.
SignedSet sds_from_pds(const AbelianGroup& G, const std::vector<Int>& pds,
                       SdsParams* predicted = nullptr);

/// The 22-element two-weight-code construction in Z_3^5: factor x^11 - 1 over
/// Z_3, take the 6-dimensional cyclic code generated by a degree-5 factor,
/// compute its dual by exact null space, check the dual's nonzero weights are
/// exactly {6, 9} and its generator columns pairwise independent, and return
/// all nonzero scalar multiples of those columns. Deterministic.
std::vector<Int> golay_pds();

AbelianGroup golay_group();  // Z_3^5

struct PaleyExistence {
    bool exists = false;
    std::string reason;
};

/// Existence predicate for a Paley PDS in some group of odd order v > 1:
/// v a prime power = 1 mod 4, or v = n^4 or 9 n^4 with n > 1 odd.
PaleyExistence paley_exists(Int v);

/// Character-side verification: |chi(D)|^2 = n for every non-principal chi.
/// Returns the index of the first failing character, or -1 when all pass.
Int character_criterion(const GroupRingElement& D, Int expected_n);

} // namespace sds
