#include "sds/group_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace sds {

namespace {
std::vector<Int> sorted_unique(std::vector<Int> xs, Int v, const char* what) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (Int x : xs)
        if (x < 0 || x >= v) throw std::invalid_argument(std::string(what) + ": element index out of range");
    return xs;
}
} // namespace

SignedSet::SignedSet(AbelianGroup group, std::vector<Int> positive, std::vector<Int> negative)
    : group_(std::move(group)),
      positive_(sorted_unique(std::move(positive), group_.order(), "SignedSet")),
      negative_(sorted_unique(std::move(negative), group_.order(), "SignedSet")) {
    std::vector<Int> both;
    std::set_intersection(positive_.begin(), positive_.end(), negative_.begin(), negative_.end(),
                          std::back_inserter(both));
    if (!both.empty())
        throw std::invalid_argument("SignedSet: positive and negative supports overlap");
}

GroupRingElement ring_zero(const AbelianGroup& G) {
    return {G, IntVector::Zero(G.order())};
}

GroupRingElement indicator(const AbelianGroup& G, std::span<const Int> support) {
    GroupRingElement A = ring_zero(G);
    for (Int g : support) {
        if (g < 0 || g >= G.order()) throw std::invalid_argument("indicator: element index out of range");
        A.coeffs[g] += 1;
    }
    return A;
}

GroupRingElement indicator_all(const AbelianGroup& G) {
    return {G, IntVector::Ones(G.order())};
}

GroupRingElement to_ring(const SignedSet& D) {
    GroupRingElement A = ring_zero(D.group());
    for (Int g : D.positive()) A.coeffs[g] = 1;
    for (Int g : D.negative()) A.coeffs[g] = -1;
    return A;
}

GroupRingElement ring_sum(std::span<const GroupRingElement> parts) {
    if (parts.empty()) throw std::invalid_argument("ring_sum: no summands");
    GroupRingElement out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].group != out.group) throw std::invalid_argument("ring_sum: group mismatch");
        out.coeffs += parts[i].coeffs;
    }
    return out;
}

GroupRingElement ring_neg(const GroupRingElement& A) { return {A.group, -A.coeffs}; }

GroupRingElement involution(const GroupRingElement& A) {
    GroupRingElement out = ring_zero(A.group);
    for (Int g = 0; g < A.group.order(); ++g) out.coeffs[A.group.neg(g)] = A.coeffs[g];
    return out;
}

GroupRingElement convolve(const GroupRingElement& A, const GroupRingElement& B) {
    if (A.group != B.group) throw std::invalid_argument("convolve: group mismatch");
    const AbelianGroup& G = A.group;
    GroupRingElement out = ring_zero(G);
    for (Int g = 0; g < G.order(); ++g) {
        Int a = A.coeffs[g];
        if (a == 0) continue;
        for (Int h = 0; h < G.order(); ++h) {
            Int b = B.coeffs[h];
            if (b == 0) continue;
            out.coeffs[G.add(g, h)] += a * b;
        }
    }
    return out;
}

Int size_sq(const GroupRingElement& A) { return A.coeffs.squaredNorm(); }

SignedSet signed_set_from_ring(const GroupRingElement& A) {
    std::vector<Int> pos, neg;
    for (Int g = 0; g < A.group.order(); ++g) {
        Int c = A.coeffs[g];
        if (c == 0) continue;
        if (c == 1) pos.push_back(g);
        else if (c == -1) neg.push_back(g);
        else throw std::domain_error("signed_set_from_ring: coefficient outside {-1,0,1}");
    }
    return SignedSet(A.group, std::move(pos), std::move(neg));
}

} // namespace sds
