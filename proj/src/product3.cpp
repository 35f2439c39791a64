#include "sds/product3.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sds/character.hpp"
#include "sds/designs.hpp"

namespace sds {

AbelianGroup product3_group(int m) {
    return AbelianGroup(std::vector<Int>(static_cast<size_t>(2 * m + 1), 3));
}

Product3Spec product3_default_spec(int m, Int x1) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("product3: m must be even and >= 2");
    FiniteField F = FiniteField::make(3, m);
    AbelianGroup G1 = additive_group(F);
    SignedSet dprime = sds_from_pds(G1, paley_pds(F));
    return Product3Spec{m, 1, x1, std::move(dprime)};
}

namespace {

void validate(const Product3Spec& spec) {
    if (spec.m < 2 || spec.m % 2 != 0)
        throw std::invalid_argument("product3: m must be even and >= 2");
    if (spec.x0 != 1 && spec.x0 != 2)
        throw std::invalid_argument("product3: x0 must be a nonzero element of Z_3");
    AbelianGroup G1(std::vector<Int>(static_cast<size_t>(spec.m), 3));
    if (spec.dprime.group() != G1)
        throw std::invalid_argument("product3: D' must live over Z_3^m");
    if (spec.x1 < 0 || spec.x1 >= G1.order())
        throw std::invalid_argument("product3: x1 out of range");
    Int q = G1.order();
    SdsCheck check = verify_sds(to_ring(spec.dprime), /*require_strict=*/true);
    if (!check.ok || check.params != SdsParams{q, q - 1, -1})
        throw std::invalid_argument("product3: D' is not a (3^m, 3^m - 1, -1) signed set");
}

} // namespace

GroupRingElement product3_construct(const Product3Spec& spec) {
    validate(spec);
    int m = spec.m;
    AbelianGroup G = product3_group(m);
    AbelianGroup G1(std::vector<Int>(static_cast<size_t>(m), 3));
    Int q1 = G1.order();

    // index of (g0, a, b) in G: coordinates of G_0 first, then the two copies
    auto embed = [&](Int g0, Int a, Int b) { return g0 + 3 * (a + q1 * b); };

    GroupRingElement D = ring_zero(G);
    for (Int g = 0; g < q1; ++g) D.coeffs[embed(spec.x0, 0, g)] += 1;
    for (Int g = 0; g < q1; ++g) D.coeffs[embed(0, g, spec.x1)] += 1;
    auto sign_of = [&](Int d, const SignedSet& s) {
        return std::binary_search(s.positive().begin(), s.positive().end(), d) ? 1 : -1;
    };
    std::vector<Int> support = spec.dprime.positive();
    support.insert(support.end(), spec.dprime.negative().begin(), spec.dprime.negative().end());
    for (Int d1 : support)
        for (Int d2 : support)
            D.coeffs[embed(0, d1, d2)] += sign_of(d1, spec.dprime) * sign_of(d2, spec.dprime);

    Int v = G.order();
    SdsParams want{v, v / 3 + 1, 1};  // k = 3^{2m} + 1
    if (m == 2) {
        SdsCheck check = verify_sds(D);
        if (!check.ok || check.params != want)
            throw std::runtime_error("product3: constructed element failed convolution verification");
    } else {
        Product3CharReport rep = product3_char_verify(D, m);
        if (!rep.ok)
            throw std::runtime_error("product3: constructed element failed character verification: " + rep.failure);
    }
    return D;
}

Product3CharReport product3_char_verify(const GroupRingElement& D, int m) {
    Product3CharReport out;
    AbelianGroup G = product3_group(m);
    if (D.group != G) throw std::invalid_argument("product3_char_verify: element is not over Z_3^{2m+1}");
    Int q1 = 1;
    for (int i = 0; i < m; ++i) q1 *= 3;
    Int target = q1 * q1;  // 3^{2m}

    const auto& basis = CyclotomicBasis::get(3);
    Int v = G.order();
    // support of D with coefficients, for fast repeated character sums
    std::vector<std::pair<Int, Int>> support;
    for (Int g = 0; g < v; ++g)
        if (D.coeffs[g] != 0) support.emplace_back(g, D.coeffs[g]);

    for (Int ci = 0; ci < v; ++ci) {
        // decompose the character tuple: coordinate 0 is a, then b1, b2
        Int a = ci % 3;
        Int b1 = (ci / 3) % q1;
        Int b2 = ci / (3 * q1);
        IntVector acc = IntVector::Zero(basis.degree());
        for (auto [g, c] : support) {
            Int g0 = g % 3;
            Int g1 = (g / 3) % q1;
            Int g2 = g / (3 * q1);
            // chi(g) = zeta_3 ^ (a g0 + b1 . g1 + b2 . g2)
            Int e = a * g0;
            Int bb1 = b1, gg1 = g1, bb2 = b2, gg2 = g2;
            for (int i = 0; i < m; ++i) {
                e += (bb1 % 3) * (gg1 % 3) + (bb2 % 3) * (gg2 % 3);
                bb1 /= 3; gg1 /= 3; bb2 /= 3; gg2 /= 3;
            }
            acc += c * basis.power(e % 3);
        }
        CyclotomicInteger value{3, acc};
        if (ci == 0) {
            out.principal_value = ci_as_integer(value);
            continue;
        }
        int case_id;
        if (b1 == 0 && b2 != 0) case_id = 0;
        else if (b1 != 0 && b2 == 0) case_id = 1;
        else if (b1 == 0 && b2 == 0) case_id = 2;
        else case_id = 3;
        ++out.case_counts[static_cast<size_t>(case_id)];

        CyclotomicInteger nrm = ci_norm_sq(value);
        if (!ci_is_integer(nrm) || ci_as_integer(nrm) != target) {
            std::ostringstream msg;
            msg << "character " << ci << " (case " << case_id + 1 << ") has |chi(D)|^2 != 3^(2m)";
            out.failure = msg.str();
            out.witness_character = ci;
            return out;
        }
    }
    out.ok = true;
    return out;
}

} // namespace sds
