#pragma once

#include <vector>

#include "sds/abelian_group.hpp"
#include "sds/cyclotomic.hpp"
#include "sds/group_ring.hpp"
#include "sds/types.hpp"

namespace sds {

/// Character chi_a of a finite abelian group, parameterized by a tuple a with
/// a[i] in [0, d_i): chi_a(x) = zeta_m ^ sum_i (m/d_i) a_i x_i where m is the
/// group exponent. Characters are enumerated in the mixed-radix order of a,
/// matching element indexing; index 0 is the principal character.
struct Character {
    AbelianGroup group;
    std::vector<Int> a;
};

Character character(const AbelianGroup& G, Int index);
bool is_principal(const Character& chi);

/// Exponent e in [0, m) with chi(x) = zeta_m^e.
Int char_exponent(const Character& chi, Int x);
CyclotomicInteger char_eval(const Character& chi, Int x);

/// chi(A) = sum_g A_g chi(g), exact in Z[zeta_m].
CyclotomicInteger char_sum(const Character& chi, const GroupRingElement& A);

/// Inverse formula: recover all coefficients from the full list of character
/// sums (indexed by character index). Throws std::domain_error when the sums
/// are inconsistent (non-integer coefficients).
GroupRingElement coefficients_from_characters(const std::vector<CyclotomicInteger>& sums,
                                               const AbelianGroup& G);

} // namespace sds
