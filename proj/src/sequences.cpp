#include "sds/sequences.hpp"

#include <random>
#include <stdexcept>

namespace sds {

TernarySequence sequence_from_sds(const SignedSet& D) {
    if (!D.group().is_cyclic())
        throw std::invalid_argument("sequence_from_sds: group must be cyclic");
    TernarySequence S;
    S.period = D.group().order();
    S.symbols.assign(static_cast<size_t>(S.period), 0);
    for (Int g : D.positive()) S.symbols[static_cast<size_t>(g)] = 1;
    for (Int g : D.negative()) S.symbols[static_cast<size_t>(g)] = -1;
    return S;
}

Int autocorrelation(const TernarySequence& S, Int tau) {
    if (tau < 0 || tau >= S.period)
        throw std::invalid_argument("autocorrelation: shift out of range");
    Int acc = 0;
    for (Int i = 0; i < S.period; ++i) {
        Int shifted = i + tau;
        if (shifted >= S.period) shifted -= S.period;
        acc += static_cast<Int>(S.symbols[static_cast<size_t>(shifted)]) *
               static_cast<Int>(S.symbols[static_cast<size_t>(i)]);
    }
    return acc;
}

bool is_two_level(const TernarySequence& S) {
    for (Int tau = 1; tau < S.period; ++tau)
        if (autocorrelation(S, tau) != -1) return false;
    return true;
}

std::vector<Int> autocorrelation_spectrum(const TernarySequence& S) {
    std::vector<Int> out(static_cast<size_t>(S.period));
    for (Int tau = 0; tau < S.period; ++tau) out[static_cast<size_t>(tau)] = autocorrelation(S, tau);
    return out;
}

WeighingMatrix weighing_from_sds(const SignedSet& D, std::uint64_t seed) {
    SdsCheck check = verify_sds(to_ring(D), /*require_strict=*/true);
    if (!check.ok) throw std::invalid_argument("weighing_from_sds: not an SDS: " + check.failure);
    if (check.params.lambda != 0)
        throw std::invalid_argument("weighing_from_sds: requires lambda = 0");

    const AbelianGroup& G = D.group();
    Int v = G.order();
    Int k = check.params.k;

    WeighingMatrix W;
    W.group = G;
    W.weight = k;
    W.first_row = to_ring(D).coeffs;

    auto row_inner = [&](Int r1, Int r2) {
        Int acc = 0;
        for (Int g = 0; g < v; ++g)
            acc += W.first_row[G.sub(g, r1)] * W.first_row[G.sub(g, r2)];
        return acc;
    };

    if (v <= 512) {
        W.dense.resize(v, v);
        for (Int r = 0; r < v; ++r)
            for (Int c = 0; c < v; ++c) W.dense(r, c) = W.first_row[G.sub(c, r)];
        IntMatrix product = W.dense * W.dense.transpose();
        IntMatrix expected = k * IntMatrix::Identity(v, v);
        if (product != expected)
            throw std::runtime_error("weighing_from_sds: W W^T != k I");
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<Int> pick(0, v - 1);
        for (int trial = 0; trial < 200; ++trial) {
            Int r1 = pick(rng), r2 = pick(rng);
            Int want = r1 == r2 ? k : 0;
            if (row_inner(r1, r2) != want)
                throw std::runtime_error("weighing_from_sds: sampled row pair fails orthogonality");
        }
    }
    return W;
}

} // namespace sds
