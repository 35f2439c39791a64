#include "sds/abelian_group.hpp"

#include <numeric>
#include <stdexcept>

#include "sds/finite_field.hpp"

namespace sds {

AbelianGroup::AbelianGroup(std::vector<Int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw std::invalid_argument("AbelianGroup: empty order list");
    strides_.resize(orders_.size());
    for (size_t i = 0; i < orders_.size(); ++i) {
        if (orders_[i] < 1) throw std::invalid_argument("AbelianGroup: factor orders must be >= 1");
        strides_[i] = v_;
        v_ *= orders_[i];
        exponent_ = std::lcm(exponent_, orders_[i]);
    }
}

std::vector<Int> AbelianGroup::coords(Int g) const {
    if (g < 0 || g >= v_) throw std::invalid_argument("AbelianGroup: element index out of range");
    std::vector<Int> c(orders_.size());
    for (size_t i = 0; i < orders_.size(); ++i) {
        c[i] = g % orders_[i];
        g /= orders_[i];
    }
    return c;
}

Int AbelianGroup::element(const std::vector<Int>& coords) const {
    if (coords.size() != orders_.size())
        throw std::invalid_argument("AbelianGroup: coordinate tuple has wrong length");
    Int g = 0;
    for (size_t i = coords.size(); i-- > 0;) {
        if (coords[i] < 0 || coords[i] >= orders_[i])
            throw std::invalid_argument("AbelianGroup: coordinate out of range");
        g = g * orders_[i] + coords[i];
    }
    return g;
}

Int AbelianGroup::add(Int a, Int b) const {
    if (orders_.size() == 1) {
        Int s = a + b;
        return s >= v_ ? s - v_ : s;
    }
    Int out = 0;
    for (size_t i = 0; i < orders_.size(); ++i) {
        Int d = orders_[i];
        Int s = a % d + b % d;
        if (s >= d) s -= d;
        out += s * strides_[i];
        a /= d;
        b /= d;
    }
    return out;
}

Int AbelianGroup::neg(Int a) const {
    if (orders_.size() == 1) return a == 0 ? 0 : v_ - a;
    Int out = 0;
    for (size_t i = 0; i < orders_.size(); ++i) {
        Int d = orders_[i];
        Int c = a % d;
        out += (c == 0 ? 0 : d - c) * strides_[i];
        a /= d;
    }
    return out;
}

AbelianGroup group_make(std::vector<Int> orders) { return AbelianGroup(std::move(orders)); }

AbelianGroup additive_group(const FiniteField& F) {
    return AbelianGroup(std::vector<Int>(static_cast<size_t>(F.degree()), F.p()));
}

} // namespace sds
