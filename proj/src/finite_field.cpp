#include "sds/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sds/arith.hpp"

namespace sds {

namespace poly {

int deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly trim(Poly a) {
    a.resize(static_cast<size_t>(deg(a) + 1));
    return a;
}

Poly add(const Poly& a, const Poly& b, Int p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        Int v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        out[i] = v % p;
    }
    return trim(std::move(out));
}

Poly sub(const Poly& a, const Poly& b, Int p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        Int v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        out[i] = ((v % p) + p) % p;
    }
    return trim(std::move(out));
}

Poly mul(const Poly& a, const Poly& b, Int p) {
    if (deg(a) < 0 || deg(b) < 0) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    return trim(std::move(out));
}

std::pair<Poly, Poly> divmod(Poly a, const Poly& m, Int p) {
    a = trim(std::move(a));
    int dm = deg(m);
    if (dm < 0) throw std::invalid_argument("poly::divmod: division by zero");
    Int lead_inv = mod_inv(m[static_cast<size_t>(dm)], p);
    int da = deg(a);
    if (da < dm) return {{}, std::move(a)};
    Poly quot(static_cast<size_t>(da - dm + 1), 0);
    for (int i = da; i >= dm; --i) {
        Int c = a[static_cast<size_t>(i)] % p;
        if (c == 0) continue;
        Int f = c * lead_inv % p;
        quot[static_cast<size_t>(i - dm)] = f;
        for (int j = 0; j <= dm; ++j) {
            Int& t = a[static_cast<size_t>(i - dm + j)];
            t = ((t - f * m[static_cast<size_t>(j)]) % p + p) % p;
        }
    }
    return {trim(std::move(quot)), trim(std::move(a))};
}

Poly mod(Poly a, const Poly& m, Int p) { return divmod(std::move(a), m, p).second; }

Poly gcd(Poly a, Poly b, Int p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (deg(b) >= 0) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    // normalize to monic so constants compare as {1}
    if (deg(a) >= 0) {
        Int inv = mod_inv(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

Poly pow_mod(const Poly& base, Int e, const Poly& m, Int p) {
    Poly result{1};
    Poly b = mod(base, m, p);
    while (e > 0) {
        if (e & 1) result = mod(mul(result, b, p), m, p);
        b = mod(mul(b, b, p), m, p);
        e >>= 1;
    }
    return result;
}

// No irreducible factor of degree <= n/2 exists iff gcd(m, x^{p^i} - x) is
// constant for all 1 <= i <= n/2; for monic m of degree n that settles it.
bool is_irreducible(const Poly& m, Int p) {
    int n = deg(m);
    if (n < 1) return false;
    if (n == 1) return true;
    Poly x{0, 1};
    Poly frob = x;  // x^{p^i} mod m, starting at i = 0
    for (int i = 1; i <= n / 2; ++i) {
        frob = pow_mod(frob, p, m, p);
        Poly g = gcd(m, sub(frob, x, p), p);
        if (deg(g) != 0) return false;
    }
    return true;
}

} // namespace poly

namespace {

constexpr Int kOrderLimit = 1'000'000;  // desk scale: q <= 10^6

std::vector<Int> index_to_coords(Int x, Int p, int n) {
    std::vector<Int> c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) { c[static_cast<size_t>(i)] = x % p; x /= p; }
    return c;
}

Int coords_to_index(const std::vector<Int>& c, Int p) {
    Int x = 0;
    for (size_t i = c.size(); i-- > 0;) x = x * p + c[i];
    return x;
}

} // namespace

FiniteField FiniteField::make(Int p, int n) {
    if (!is_prime(p)) throw std::invalid_argument("FiniteField: p is not prime");
    if (n < 1) throw std::invalid_argument("FiniteField: degree must be >= 1");
    Int q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > kOrderLimit) throw std::invalid_argument("FiniteField: q exceeds desk-scale limit 10^6");
    }

    // smallest monic irreducible of degree n, ordered by the coefficient
    // encoding sum c_i p^i of the non-leading part
    std::vector<Int> modulus;
    for (Int enc = 0; enc < q; ++enc) {
        poly::Poly cand = index_to_coords(enc, p, n);
        cand.push_back(1);
        if (poly::is_irreducible(cand, p)) { modulus = std::move(cand); break; }
    }
    if (modulus.empty()) throw std::runtime_error("FiniteField: no irreducible polynomial found");

    FiniteField F;
    F.p_ = p;
    F.n_ = n;
    F.q_ = q;
    F.modulus_ = std::move(modulus);

    // smallest element of multiplicative order q - 1
    auto prime_factors = factorize(q - 1);
    auto raw_pow = [&](Int a, Int e) {
        poly::Poly base = index_to_coords(a, p, n);
        poly::Poly r = poly::pow_mod(base, e, F.modulus_, p);
        r.resize(static_cast<size_t>(n), 0);
        return coords_to_index(r, p);
    };
    Int w = 0;
    for (Int cand = 1; cand < q; ++cand) {
        bool primitive = true;
        for (auto [r, e] : prime_factors) {
            (void)e;
            if (raw_pow(cand, (q - 1) / r) == 1) { primitive = false; break; }
        }
        if (primitive) { w = cand; break; }
    }
    if (w == 0) throw std::runtime_error("FiniteField: no primitive element found");
    F.w_ = w;
    F.build_tables();
    return F;
}

FiniteField::FiniteField(Int p, int n, std::vector<Int> modulus, Int generator) {
    if (!is_prime(p)) throw std::invalid_argument("FiniteField: p is not prime");
    if (n < 1) throw std::invalid_argument("FiniteField: degree must be >= 1");
    if (modulus.size() != static_cast<size_t>(n + 1) || modulus.back() != 1)
        throw std::invalid_argument("FiniteField: modulus must be monic of degree n");
    for (Int c : modulus)
        if (c < 0 || c >= p) throw std::invalid_argument("FiniteField: modulus coefficients out of range");
    if (!poly::is_irreducible(modulus, p))
        throw std::invalid_argument("FiniteField: modulus is reducible");
    p_ = p;
    n_ = n;
    q_ = 1;
    for (int i = 0; i < n; ++i) {
        q_ *= p;
        if (q_ > kOrderLimit) throw std::invalid_argument("FiniteField: q exceeds desk-scale limit 10^6");
    }
    modulus_ = std::move(modulus);
    if (generator <= 0 || generator >= q_)
        throw std::invalid_argument("FiniteField: generator index out of range");
    w_ = generator;

    auto raw_pow = [&](Int a, Int e) {
        poly::Poly base = index_to_coords(a, p_, n_);
        poly::Poly r = poly::pow_mod(base, e, modulus_, p_);
        r.resize(static_cast<size_t>(n_), 0);
        return coords_to_index(r, p_);
    };
    for (auto [r, e] : factorize(q_ - 1)) {
        (void)e;
        if (raw_pow(w_, (q_ - 1) / r) == 1)
            throw std::invalid_argument("FiniteField: generator is not primitive");
    }
    build_tables();
}

void FiniteField::build_tables() {
    exp_.assign(static_cast<size_t>(q_ - 1), 0);
    log_.assign(static_cast<size_t>(q_), -1);
    poly::Poly wp = index_to_coords(w_, p_, n_);
    poly::Poly acc{1};
    for (Int k = 0; k < q_ - 1; ++k) {
        poly::Poly full = acc;
        full.resize(static_cast<size_t>(n_), 0);
        Int idx = coords_to_index(full, p_);
        exp_[static_cast<size_t>(k)] = idx;
        if (log_[static_cast<size_t>(idx)] != -1)
            throw std::runtime_error("FiniteField: generator order is too small");
        log_[static_cast<size_t>(idx)] = k;
        acc = poly::mod(poly::mul(acc, wp, p_), modulus_, p_);
    }
}

void FiniteField::check_element(Int a) const {
    if (a < 0 || a >= q_) throw std::invalid_argument("FiniteField: element index out of range");
}

std::vector<Int> FiniteField::coords(Int x) const {
    check_element(x);
    return index_to_coords(x, p_, n_);
}

Int FiniteField::element(const std::vector<Int>& coords) const {
    if (coords.size() != static_cast<size_t>(n_))
        throw std::invalid_argument("FiniteField: coordinate vector has wrong length");
    for (Int c : coords)
        if (c < 0 || c >= p_) throw std::invalid_argument("FiniteField: coordinate out of range");
    return coords_to_index(coords, p_);
}

Int FiniteField::add(Int a, Int b) const {
    check_element(a);
    check_element(b);
    Int out = 0, stride = 1;
    for (int i = 0; i < n_; ++i) {
        Int s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * stride;
        a /= p_;
        b /= p_;
        stride *= p_;
    }
    return out;
}

Int FiniteField::neg(Int a) const {
    check_element(a);
    Int out = 0, stride = 1;
    for (int i = 0; i < n_; ++i) {
        Int c = a % p_;
        out += (c == 0 ? 0 : p_ - c) * stride;
        a /= p_;
        stride *= p_;
    }
    return out;
}

Int FiniteField::sub(Int a, Int b) const { return add(a, neg(b)); }

Int FiniteField::mul(Int a, Int b) const {
    check_element(a);
    check_element(b);
    if (a == 0 || b == 0) return 0;
    Int k = log_[static_cast<size_t>(a)] + log_[static_cast<size_t>(b)];
    if (k >= q_ - 1) k -= q_ - 1;
    return exp_[static_cast<size_t>(k)];
}

Int FiniteField::inv(Int a) const {
    check_element(a);
    if (a == 0) throw std::domain_error("FiniteField: inversion of zero");
    Int k = (q_ - 1 - log_[static_cast<size_t>(a)]) % (q_ - 1);
    return exp_[static_cast<size_t>(k)];
}

Int FiniteField::pow(Int a, Int e) const {
    check_element(a);
    if (a == 0) {
        if (e <= 0) throw std::domain_error("FiniteField: 0 to a non-positive power");
        return 0;
    }
    Int ord = q_ - 1;
    Int k = (log_[static_cast<size_t>(a)] % ord) * (((e % ord) + ord) % ord) % ord;
    return exp_[static_cast<size_t>(k)];
}

Int FiniteField::log(Int a) const {
    check_element(a);
    if (a == 0) throw std::domain_error("FiniteField: log of zero");
    return log_[static_cast<size_t>(a)];
}

Int FiniteField::exp(Int k) const {
    Int ord = q_ - 1;
    Int r = ((k % ord) + ord) % ord;
    return exp_[static_cast<size_t>(r)];
}

Int FiniteField::element_order(Int a) const {
    check_element(a);
    if (a == 0) throw std::domain_error("FiniteField: order of zero");
    Int ord = q_ - 1;
    Int k = log_[static_cast<size_t>(a)];
    return ord / std::gcd(ord, k);
}

} // namespace sds
