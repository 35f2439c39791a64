#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sds/types.hpp"

namespace sds {

inline bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Prime factorization by trial division, as (prime, multiplicity) pairs.
inline std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<Int, int>> out;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// If n = p^e for a prime p, returns (p, e); otherwise (0, 0).
inline std::pair<Int, int> prime_power_decompose(Int n) {
    if (n < 2) return {0, 0};
    auto f = factorize(n);
    if (f.size() != 1) return {0, 0};
    return f[0];
}

inline bool is_prime_power(Int n) { return prime_power_decompose(n).first != 0; }

/// Floor of the square root, exact for all nonnegative Int.
inline Int isqrt(Int n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative input");
    if (n == 0) return 0;
    Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// Returns the root when n is a perfect square, -1 otherwise.
inline Int perfect_square_root(Int n) {
    if (n < 0) return -1;
    Int r = isqrt(n);
    return r * r == n ? r : -1;
}

/// Floor of the fourth root.
inline Int iroot4(Int n) {
    Int r = isqrt(isqrt(n));
    while ((r + 1) * (r + 1) * (r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline Int mod_pow(Int base, Int exp, Int mod) {
    Int result = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

/// Inverse of a modulo prime p.
inline Int mod_inv(Int a, Int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::domain_error("mod_inv: zero has no inverse");
    return mod_pow(a, p - 2, p);
}

} // namespace sds
