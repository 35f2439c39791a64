#include "sds/character.hpp"

#include <stdexcept>

namespace sds {

Character character(const AbelianGroup& G, Int index) {
    return {G, G.coords(index)};
}

bool is_principal(const Character& chi) {
    for (Int ai : chi.a)
        if (ai != 0) return false;
    return true;
}

Int char_exponent(const Character& chi, Int x) {
    const auto& orders = chi.group.orders();
    Int m = chi.group.exponent();
    Int e = 0;
    for (size_t i = 0; i < orders.size(); ++i) {
        Int d = orders[i];
        e = (e + (m / d) * chi.a[i] % m * (x % d)) % m;
        x /= d;
    }
    return e;
}

CyclotomicInteger char_eval(const Character& chi, Int x) {
    if (x < 0 || x >= chi.group.order())
        throw std::invalid_argument("char_eval: element index out of range");
    return ci_root(chi.group.exponent(), char_exponent(chi, x));
}

CyclotomicInteger char_sum(const Character& chi, const GroupRingElement& A) {
    if (A.group != chi.group) throw std::invalid_argument("char_sum: group mismatch");
    Int m = chi.group.exponent();
    const auto& basis = CyclotomicBasis::get(m);
    IntVector acc = IntVector::Zero(basis.degree());
    for (Int g = 0; g < A.group.order(); ++g) {
        Int c = A.coeffs[g];
        if (c == 0) continue;
        acc += c * basis.power(char_exponent(chi, g));
    }
    return {m, std::move(acc)};
}

GroupRingElement coefficients_from_characters(const std::vector<CyclotomicInteger>& sums,
                                               const AbelianGroup& G) {
    Int v = G.order();
    if (static_cast<Int>(sums.size()) != v)
        throw std::invalid_argument("coefficients_from_characters: need one sum per character");
    Int m = G.exponent();
    const auto& basis = CyclotomicBasis::get(m);
    GroupRingElement out = ring_zero(G);
    for (Int g = 0; g < v; ++g) {
        Int ng = G.neg(g);
        CyclotomicInteger acc = ci_zero(m);
        for (Int ci = 0; ci < v; ++ci) {
            if (sums[static_cast<size_t>(ci)].m != m)
                throw std::invalid_argument("coefficients_from_characters: mismatched root order");
            Character chi = character(G, ci);
            // chi(A) * chi(-g): multiplying by a root of unity is a basis shift
            const CyclotomicInteger& s = sums[static_cast<size_t>(ci)];
            Int e = char_exponent(chi, ng);
            acc = ci_add(acc, ci_mul(s, CyclotomicInteger{m, basis.power(e)}));
        }
        Int total = ci_as_integer(acc);  // throws when sums are inconsistent
        if (total % v != 0)
            throw std::domain_error("coefficients_from_characters: coefficient not divisible by |G|");
        out.coeffs[g] = total / v;
    }
    return out;
}

} // namespace sds
