#pragma once

#include <vector>

#include "sds/types.hpp"

namespace sds {

/// Reduction context for Z[zeta_m]: the m-th cyclotomic polynomial and the
/// table of zeta^e, 0 <= e < m, expressed on the power basis
/// {1, zeta, ..., zeta^{phi(m)-1}}. Built once per m and cached process-wide;
/// immutable afterwards, so safe to share across threads.
class CyclotomicBasis {
public:
    explicit CyclotomicBasis(Int m);

    Int m() const { return m_; }
    Int degree() const { return degree_; }
    /// Phi_m, ascending coefficients, monic, length degree + 1.
    const std::vector<Int>& phi() const { return phi_; }
    /// zeta^e on the power basis, e taken mod m.
    const IntVector& power(Int e) const;

    /// Reduce an arbitrary polynomial in zeta (ascending coefficients) to the
    /// power basis.
    IntVector reduce(std::vector<Int> coeffs) const;

    static const CyclotomicBasis& get(Int m);

private:
    Int m_ = 1;
    Int degree_ = 1;
    std::vector<Int> phi_;
    std::vector<IntVector> powers_;
};

/// Exact element of Z[zeta_m] on the power basis modulo Phi_m.
struct CyclotomicInteger {
    Int m = 1;
    IntVector coeffs;  // length phi(m)
};

CyclotomicInteger ci_zero(Int m);
CyclotomicInteger ci_integer(Int m, Int value);
CyclotomicInteger ci_root(Int m, Int e);  // zeta_m^e

CyclotomicInteger ci_add(const CyclotomicInteger& a, const CyclotomicInteger& b);
CyclotomicInteger ci_sub(const CyclotomicInteger& a, const CyclotomicInteger& b);
CyclotomicInteger ci_mul(const CyclotomicInteger& a, const CyclotomicInteger& b);
/// Complex conjugation zeta -> zeta^{m-1}.
CyclotomicInteger ci_conj(const CyclotomicInteger& a);
/// |a|^2 = a * conj(a).
CyclotomicInteger ci_norm_sq(const CyclotomicInteger& a);

bool ci_equal(const CyclotomicInteger& a, const CyclotomicInteger& b);
bool ci_is_zero(const CyclotomicInteger& a);
/// True when all non-constant coordinates vanish.
bool ci_is_integer(const CyclotomicInteger& a);
/// The rational integer value; throws std::domain_error if not rational.
Int ci_as_integer(const CyclotomicInteger& a);

/// The m-th cyclotomic polynomial, ascending integer coefficients, computed
/// by exact division of x^m - 1 by the product of the proper-divisor factors.
std::vector<Int> cyclotomic_polynomial(Int m);

} // namespace sds
