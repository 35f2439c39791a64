#pragma once

#include <span>
#include <vector>

#include "sds/abelian_group.hpp"
#include "sds/types.hpp"

namespace sds {

/// Element of the integer group ring Z[G]: a dense coefficient vector indexed
/// by group element index.
struct GroupRingElement {
    AbelianGroup group;
    IntVector coeffs;  // length group.order()
};

/// Disjoint positive/negative supports P, N inside G; the signed set P - N.
/// Index lists are kept sorted and duplicate-free.
class SignedSet {
public:
    SignedSet(AbelianGroup group, std::vector<Int> positive, std::vector<Int> negative);

    const AbelianGroup& group() const { return group_; }
    const std::vector<Int>& positive() const { return positive_; }
    const std::vector<Int>& negative() const { return negative_; }
    Int size() const { return static_cast<Int>(positive_.size() + negative_.size()); }

private:
    AbelianGroup group_;
    std::vector<Int> positive_;
    std::vector<Int> negative_;
};

GroupRingElement ring_zero(const AbelianGroup& G);
/// Indicator of a set of element indices (coefficient 1 on each).
GroupRingElement indicator(const AbelianGroup& G, std::span<const Int> support);
GroupRingElement indicator_all(const AbelianGroup& G);

/// Coefficient +1 on P, -1 on N, 0 elsewhere.
GroupRingElement to_ring(const SignedSet& D);

/// Coefficientwise sum of any number of elements over one group.
GroupRingElement ring_sum(std::span<const GroupRingElement> parts);
GroupRingElement ring_neg(const GroupRingElement& A);

/// A -> A^(-1): coefficient at g becomes the coefficient at -g.
GroupRingElement involution(const GroupRingElement& A);

/// Exact integer convolution (A * B)_g = sum_h A_h B_{g-h}.
GroupRingElement convolve(const GroupRingElement& A, const GroupRingElement& B);

/// Generalized size sum a_g^2; equals the identity coefficient of A A^(-1).
Int size_sq(const GroupRingElement& A);

/// Extract a SignedSet from a +-1/0 element; throws if any coefficient has
/// magnitude >= 2.
SignedSet signed_set_from_ring(const GroupRingElement& A);

} // namespace sds
