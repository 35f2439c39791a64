#pragma once

#include <string>
#include <vector>

#include "sds/types.hpp"

namespace sds {

/// GF(p^n) with an explicit monic modulus polynomial and a fixed primitive
/// element. Elements are indices in [0, q): the element with polynomial-basis
/// coordinates (x_0, ..., x_{n-1}) has index sum x_i * p^i, so for prime
/// fields the index is the residue itself.
///
/// Immutable after construction; all operations are pure and thread-safe.
class FiniteField {
public:
    /// Deterministic construction: the modulus is the monic irreducible of
    /// degree n over Z_p with the smallest coefficient encoding, and the
    /// generator is the element of smallest index with multiplicative order
    /// q - 1. Two calls with the same (p, n) yield identical fields.
    static FiniteField make(Int p, int n);

    /// Explicit presentation. `modulus` is the ascending coefficient list of
    /// a monic degree-n polynomial (length n + 1); `generator` is an element
    /// index. Both are validated.
    FiniteField(Int p, int n, std::vector<Int> modulus, Int generator);

    Int p() const { return p_; }
    int degree() const { return n_; }
    Int q() const { return q_; }
    const std::vector<Int>& modulus() const { return modulus_; }
    Int generator() const { return w_; }

    std::vector<Int> coords(Int x) const;
    Int element(const std::vector<Int>& coords) const;

    Int add(Int a, Int b) const;
    Int sub(Int a, Int b) const;
    Int neg(Int a) const;
    Int mul(Int a, Int b) const;
    Int inv(Int a) const;           // throws std::domain_error on zero
    Int pow(Int a, Int e) const;    // e may be negative for nonzero a

    /// Discrete log base the generator; defined for nonzero elements only.
    Int log(Int a) const;
    /// generator^k for any integer k.
    Int exp(Int k) const;
    /// Total discrete-log table over F*: table[x] = log(x), table[0] = -1.
    const std::vector<Int>& log_table() const { return log_; }

    /// Multiplicative order of a nonzero element.
    Int element_order(Int a) const;

    bool operator==(const FiniteField& o) const {
        return p_ == o.p_ && n_ == o.n_ && modulus_ == o.modulus_ && w_ == o.w_;
    }

private:
    FiniteField() = default;
    void check_element(Int a) const;
    void build_tables();

    Int p_ = 0;
    int n_ = 0;
    Int q_ = 0;
    std::vector<Int> modulus_;
    Int w_ = 0;
    std::vector<Int> exp_;  // exp_[k] = w^k, k in [0, q-1)
    std::vector<Int> log_;  // log_[x] for x in [0, q), log_[0] = -1
};

namespace poly {

// Dense polynomials over Z_p, ascending coefficients, used by the field
// construction and by the Golay code factorization.
using Poly = std::vector<Int>;

Poly trim(Poly a);
Poly add(const Poly& a, const Poly& b, Int p);
Poly sub(const Poly& a, const Poly& b, Int p);
Poly mul(const Poly& a, const Poly& b, Int p);
Poly mod(Poly a, const Poly& m, Int p);
std::pair<Poly, Poly> divmod(Poly a, const Poly& m, Int p);
Poly gcd(Poly a, Poly b, Int p);
Poly pow_mod(const Poly& base, Int e, const Poly& m, Int p);
bool is_irreducible(const Poly& m, Int p);
int deg(const Poly& a);

} // namespace poly

} // namespace sds
