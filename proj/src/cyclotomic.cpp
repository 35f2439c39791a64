#include "sds/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace sds {

namespace {

// exact division of integer polynomials, divisor monic; remainder must vanish
std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    if (dd < 0 || den.back() != 1) throw std::invalid_argument("divide_exact: divisor must be monic");
    if (dn < dd) throw std::invalid_argument("divide_exact: degree underflow");
    std::vector<Int> quot(static_cast<size_t>(dn - dd + 1), 0);
    for (int i = dn; i >= dd; --i) {
        Int c = num[static_cast<size_t>(i)];
        if (c == 0) continue;
        quot[static_cast<size_t>(i - dd)] = c;
        for (int j = 0; j <= dd; ++j)
            num[static_cast<size_t>(i - dd + j)] -= c * den[static_cast<size_t>(j)];
    }
    for (Int c : num)
        if (c != 0) throw std::runtime_error("divide_exact: nonzero remainder");
    return quot;
}

std::vector<Int> cyclotomic_rec(Int m, std::map<Int, std::vector<Int>>& memo) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    // x^m - 1
    std::vector<Int> num(static_cast<size_t>(m + 1), 0);
    num[0] = -1;
    num[static_cast<size_t>(m)] = 1;
    for (Int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = divide_exact(std::move(num), cyclotomic_rec(d, memo));
    }
    memo[m] = num;
    return num;
}

} // namespace

std::vector<Int> cyclotomic_polynomial(Int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    std::map<Int, std::vector<Int>> memo;
    return cyclotomic_rec(m, memo);
}

CyclotomicBasis::CyclotomicBasis(Int m) : m_(m) {
    if (m < 1) throw std::invalid_argument("CyclotomicBasis: m must be positive");
    phi_ = cyclotomic_polynomial(m);
    degree_ = static_cast<Int>(phi_.size()) - 1;
    powers_.reserve(static_cast<size_t>(m));
    // iteratively reduce x^e: multiply by x, fold the leading term into the
    // lower coefficients via the monic Phi_m
    IntVector cur = IntVector::Zero(degree_);
    cur[0] = 1;
    for (Int e = 0; e < m; ++e) {
        powers_.push_back(cur);
        Int top = cur[degree_ - 1];
        for (Int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (Int i = 0; i < degree_; ++i) cur[i] -= top * phi_[static_cast<size_t>(i)];
    }
}

const IntVector& CyclotomicBasis::power(Int e) const {
    Int r = ((e % m_) + m_) % m_;
    return powers_[static_cast<size_t>(r)];
}

IntVector CyclotomicBasis::reduce(std::vector<Int> coeffs) const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= degree_; --i) {
        Int c = coeffs[static_cast<size_t>(i)];
        if (c == 0) continue;
        coeffs[static_cast<size_t>(i)] = 0;
        for (Int j = 0; j <= degree_; ++j)
            coeffs[static_cast<size_t>(i - degree_ + j)] -= c * phi_[static_cast<size_t>(j)];
    }
    IntVector out = IntVector::Zero(degree_);
    for (Int i = 0; i < degree_ && i < static_cast<Int>(coeffs.size()); ++i)
        out[i] = coeffs[static_cast<size_t>(i)];
    return out;
}

const CyclotomicBasis& CyclotomicBasis::get(Int m) {
    static std::mutex mu;
    static std::map<Int, std::unique_ptr<const CyclotomicBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[m];
    if (!slot) slot = std::make_unique<const CyclotomicBasis>(m);
    return *slot;
}

namespace {
void require_same_m(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    if (a.m != b.m) throw std::invalid_argument("CyclotomicInteger: mismatched root orders");
}
} // namespace

CyclotomicInteger ci_zero(Int m) {
    return {m, IntVector::Zero(CyclotomicBasis::get(m).degree())};
}

CyclotomicInteger ci_integer(Int m, Int value) {
    CyclotomicInteger out = ci_zero(m);
    out.coeffs[0] = value;
    return out;
}

CyclotomicInteger ci_root(Int m, Int e) {
    return {m, CyclotomicBasis::get(m).power(e)};
}

CyclotomicInteger ci_add(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    require_same_m(a, b);
    return {a.m, a.coeffs + b.coeffs};
}

CyclotomicInteger ci_sub(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    require_same_m(a, b);
    return {a.m, a.coeffs - b.coeffs};
}

CyclotomicInteger ci_mul(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    require_same_m(a, b);
    const auto& basis = CyclotomicBasis::get(a.m);
    Int d = basis.degree();
    std::vector<Int> prod(static_cast<size_t>(2 * d - 1), 0);
    for (Int i = 0; i < d; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (Int j = 0; j < d; ++j)
            prod[static_cast<size_t>(i + j)] += a.coeffs[i] * b.coeffs[j];
    }
    return {a.m, basis.reduce(std::move(prod))};
}

CyclotomicInteger ci_conj(const CyclotomicInteger& a) {
    const auto& basis = CyclotomicBasis::get(a.m);
    IntVector out = IntVector::Zero(basis.degree());
    for (Int j = 0; j < basis.degree(); ++j) {
        if (a.coeffs[j] == 0) continue;
        out += a.coeffs[j] * basis.power(a.m - j);
    }
    return {a.m, std::move(out)};
}

CyclotomicInteger ci_norm_sq(const CyclotomicInteger& a) { return ci_mul(a, ci_conj(a)); }

bool ci_equal(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    return a.m == b.m && a.coeffs == b.coeffs;
}

bool ci_is_zero(const CyclotomicInteger& a) { return a.coeffs.isZero(); }

bool ci_is_integer(const CyclotomicInteger& a) {
    for (Int i = 1; i < a.coeffs.size(); ++i)
        if (a.coeffs[i] != 0) return false;
    return true;
}

Int ci_as_integer(const CyclotomicInteger& a) {
    if (!ci_is_integer(a)) throw std::domain_error("CyclotomicInteger: not a rational integer");
    return a.coeffs[0];
}

} // namespace sds
