#pragma once

#include <vector>

#include "sds/types.hpp"

namespace sds {

class FiniteField;

/// Finite abelian group presented as a direct product of cyclic groups of
/// orders d_1, ..., d_r (additive notation, identity 0). Elements are indices
/// in [0, v) under the mixed-radix map with coordinate 0 least significant:
/// index = sum coords[i] * d_1 * ... * d_{i-1}.
class AbelianGroup {
public:
    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<Int> orders);

    Int order() const { return v_; }
    Int exponent() const { return exponent_; }
    int rank() const { return static_cast<int>(orders_.size()); }
    const std::vector<Int>& orders() const { return orders_; }
    bool is_cyclic() const { return orders_.size() == 1; }

    std::vector<Int> coords(Int g) const;
    Int element(const std::vector<Int>& coords) const;

    Int add(Int a, Int b) const;
    Int neg(Int a) const;
    Int sub(Int a, Int b) const { return add(a, neg(b)); }

    bool operator==(const AbelianGroup& o) const { return orders_ == o.orders_; }
    bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

private:
    std::vector<Int> orders_;
    std::vector<Int> strides_;
    Int v_ = 1;
    Int exponent_ = 1;
};

AbelianGroup group_make(std::vector<Int> orders);

/// The additive group (F, +) of a finite field: orders = [p] * n, and a field
/// element's index is its group element index (same mixed-radix encoding).
AbelianGroup additive_group(const FiniteField& F);

} // namespace sds
