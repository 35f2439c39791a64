#include "sds/designs.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sds/arith.hpp"
#include "sds/character.hpp"

namespace sds {

SdsCheck verify_sds(const GroupRingElement& D, bool require_strict) {
    SdsCheck out;
    const AbelianGroup& G = D.group;
    Int v = G.order();

    out.strict = true;
    for (Int g = 0; g < v; ++g) {
        Int c = D.coeffs[g];
        if (c == 1) ++out.pos_count;
        else if (c == -1) ++out.neg_count;
        else if (c != 0) {
            out.strict = false;
            ++out.strict_violations;
        }
        out.coeff_sum += c;
    }
    if (require_strict && !out.strict) {
        for (Int g = 0; g < v; ++g) {
            Int c = D.coeffs[g];
            if (c != 0 && c != 1 && c != -1) {
                std::ostringstream msg;
                msg << "coefficient " << c << " at element " << g << " violates strictness";
                out.failure = msg.str();
                out.witness_g = g;
                return out;
            }
        }
    }

    GroupRingElement E = convolve(D, involution(D));
    Int k = size_sq(D);
    Int lambda = 0;
    Int first = -1;
    for (Int g = 1; g < v; ++g) {
        if (first == -1) {
            first = g;
            lambda = E.coeffs[g];
        } else if (E.coeffs[g] != lambda) {
            std::ostringstream msg;
            msg << "off-identity coefficients differ: " << lambda << " at " << first << " vs "
                << E.coeffs[g] << " at " << g;
            out.failure = msg.str();
            out.witness_g = first;
            out.witness_h = g;
            return out;
        }
    }
    // identity coefficient of D D^(-1) is sum a_g^2 = k = lambda + n by construction
    out.ok = true;
    out.params = {v, k, lambda};
    return out;
}

PdsCheck verify_pds(const AbelianGroup& G, const std::vector<Int>& D) {
    PdsCheck out;
    Int v = G.order();
    std::set<Int> ds(D.begin(), D.end());
    if (ds.size() != D.size()) throw std::invalid_argument("verify_pds: repeated elements");
    if (ds.count(0)) throw std::invalid_argument("verify_pds: identity element in D");
    for (Int g : ds)
        if (g < 0 || g >= v) throw std::invalid_argument("verify_pds: element index out of range");

    std::vector<Int> idx(ds.begin(), ds.end());
    GroupRingElement A = indicator(G, idx);
    GroupRingElement E = convolve(A, involution(A));

    Int k = static_cast<Int>(idx.size());
    bool have_lambda = false, have_mu = false;
    Int lambda = 0, mu = 0;
    for (Int g = 1; g < v; ++g) {
        Int e = E.coeffs[g];
        if (ds.count(g)) {
            if (!have_lambda) { lambda = e; have_lambda = true; }
            else if (e != lambda) {
                std::ostringstream msg;
                msg << "coefficient " << e << " at in-set element " << g << " differs from lambda=" << lambda;
                out.failure = msg.str();
                out.witness = g;
                return out;
            }
        } else {
            if (!have_mu) { mu = e; have_mu = true; }
            else if (e != mu) {
                std::ostringstream msg;
                msg << "coefficient " << e << " at out-of-set element " << g << " differs from mu=" << mu;
                out.failure = msg.str();
                out.witness = g;
                return out;
            }
        }
    }
    if (E.coeffs[0] != k) {
        std::ostringstream msg;
        msg << "identity coefficient " << E.coeffs[0] << " != k = " << k;
        out.failure = msg.str();
        out.witness = 0;
        return out;
    }

    bool symmetric = true;
    for (Int g : idx)
        if (!ds.count(G.neg(g))) { symmetric = false; break; }

    out.ok = true;
    out.params = {v, k, lambda, mu};
    out.regular = symmetric;  // 0_G excluded above
    return out;
}

Feasibility feasible(Int v, Int k, Int lambda) {
    Feasibility out;
    if (v < 2) throw std::invalid_argument("feasible: v must be >= 2");
    if (lambda < -1) {
        out.reason = "lambda < -1";
        return out;
    }
    Int target = k + lambda * (v - 1);
    Int root = perfect_square_root(target);
    if (root < 0) {
        std::ostringstream msg;
        msg << "k + lambda(v-1) = " << target << " is not a perfect square";
        out.reason = msg.str();
        return out;
    }
    out.ok = true;
    out.root = root;
    return out;
}

Feasibility feasible(Int v, Int k, Int lambda, Int pos_size, Int neg_size) {
    Feasibility out = feasible(v, k, lambda);
    if (!out.ok) return out;
    if (pos_size + neg_size != k) {
        out = {};
        out.reason = "|P| + |N| != k";
        return out;
    }
    Int diff = pos_size - neg_size;
    if (diff * diff != k + lambda * (v - 1)) {
        out = {};
        out.reason = "(|P| - |N|)^2 != k + lambda(v-1)";
        return out;
    }
    return out;
}

std::vector<Int> paley_pds(const FiniteField& F) {
    if (F.q() % 2 == 0 || F.q() % 4 != 1)
        throw std::invalid_argument("paley_pds: requires q = 1 mod 4");
    std::set<Int> squares;
    for (Int x = 1; x < F.q(); ++x) squares.insert(F.mul(x, x));
    return {squares.begin(), squares.end()};
}

SignedSet sds_from_pds(const AbelianGroup& G, const std::vector<Int>& pds, SdsParams* predicted) {
    PdsCheck check = verify_pds(G, pds);
    if (!check.ok) throw std::invalid_argument("sds_from_pds: input is not a PDS: " + check.failure);
    if (!check.regular) throw std::invalid_argument("sds_from_pds: input PDS is not regular");
    if (check.params.lambda - check.params.mu != -1)
        throw std::invalid_argument("sds_from_pds: requires lambda - mu = -1");

    Int v = G.order();
    SdsParams want{v, v - 1, v - 4 * check.params.k + 4 * check.params.mu - 2};
    if (predicted) *predicted = want;

    std::set<Int> ps(pds.begin(), pds.end());
    std::vector<Int> neg;
    for (Int g = 1; g < v; ++g)
        if (!ps.count(g)) neg.push_back(g);
    SignedSet D(G, pds, std::move(neg));

    SdsCheck sc = verify_sds(to_ring(D), /*require_strict=*/true);
    if (!sc.ok || sc.params != want)
        throw std::runtime_error("sds_from_pds: lifted set failed re-verification");
    return D;
}

namespace {

// rows: generator-matrix rows over Z_3 as length-11 coefficient vectors
std::vector<std::vector<Int>> null_space_mod3(std::vector<std::vector<Int>> rows, int ncols) {
    const Int p = 3;
    int nrows = static_cast<int>(rows.size());
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int sel = -1;
        for (int r = rank; r < nrows; ++r)
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(rows[static_cast<size_t>(sel)], rows[static_cast<size_t>(rank)]);
        Int inv = mod_inv(rows[static_cast<size_t>(rank)][static_cast<size_t>(col)], p);
        for (auto& c : rows[static_cast<size_t>(rank)]) c = c * inv % p;
        for (int r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            Int f = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int c = 0; c < ncols; ++c) {
                Int& t = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
                t = ((t - f * rows[static_cast<size_t>(rank)][static_cast<size_t>(c)]) % p + p) % p;
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(static_cast<size_t>(ncols), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Int>> basis;
    for (int free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        std::vector<Int> vec(static_cast<size_t>(ncols), 0);
        vec[static_cast<size_t>(free_col)] = 1;
        for (int r = 0; r < rank; ++r) {
            Int val = rows[static_cast<size_t>(r)][static_cast<size_t>(free_col)];
            vec[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = (p - val) % p;
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

} // namespace

AbelianGroup golay_group() { return AbelianGroup(std::vector<Int>(5, 3)); }

std::vector<Int> golay_pds() {
    const Int p = 3;
    const int n = 11;

    // x^11 - 1 over Z_3
    poly::Poly xn1(static_cast<size_t>(n + 1), 0);
    xn1[0] = p - 1;
    xn1[static_cast<size_t>(n)] = 1;

    // smallest monic degree-5 irreducible factor
    poly::Poly gen;
    for (Int enc = 0; enc < 243 && gen.empty(); ++enc) {
        poly::Poly cand(6, 0);
        Int e = enc;
        for (int i = 0; i < 5; ++i) { cand[static_cast<size_t>(i)] = e % p; e /= p; }
        cand[5] = 1;
        if (!poly::is_irreducible(cand, p)) continue;
        if (poly::deg(poly::mod(xn1, cand, p)) < 0) gen = cand;
    }
    if (gen.empty()) throw std::runtime_error("golay_pds: no degree-5 factor of x^11 - 1 found");

    // 6 x 11 generator matrix of the cyclic code: shifts of the factor
    std::vector<std::vector<Int>> gmat;
    for (int shift = 0; shift < 6; ++shift) {
        std::vector<Int> row(static_cast<size_t>(n), 0);
        for (int i = 0; i <= 5; ++i) row[static_cast<size_t>(i + shift)] = gen[static_cast<size_t>(i)];
        gmat.push_back(std::move(row));
    }

    // dual code basis: exact null space of the generator matrix
    std::vector<std::vector<Int>> dual = null_space_mod3(gmat, n);
    if (dual.size() != 5) throw std::runtime_error("golay_pds: dual code has wrong dimension");

    // nonzero dual weights must be exactly {6, 9}
    std::set<Int> weights;
    for (Int msg = 1; msg < 243; ++msg) {
        std::vector<Int> cw(static_cast<size_t>(n), 0);
        Int e = msg;
        for (int r = 0; r < 5; ++r) {
            Int c = e % p;
            e /= p;
            if (c == 0) continue;
            for (int i = 0; i < n; ++i)
                cw[static_cast<size_t>(i)] = (cw[static_cast<size_t>(i)] + c * dual[static_cast<size_t>(r)][static_cast<size_t>(i)]) % p;
        }
        Int w = 0;
        for (Int c : cw) w += (c != 0);
        weights.insert(w);
    }
    if (weights != std::set<Int>{6, 9})
        throw std::runtime_error("golay_pds: dual code is not a two-weight {6,9} code");

    // columns of the dual generator matrix as elements of Z_3^5
    AbelianGroup G = golay_group();
    std::vector<Int> cols;
    for (int i = 0; i < n; ++i) {
        std::vector<Int> coord(5);
        for (int r = 0; r < 5; ++r) coord[static_cast<size_t>(r)] = dual[static_cast<size_t>(r)][static_cast<size_t>(i)];
        cols.push_back(G.element(coord));
    }
    // projectivity: no zero column, no two columns scalar multiples
    for (size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] == 0) throw std::runtime_error("golay_pds: zero column in dual generator matrix");
        for (size_t j = i + 1; j < cols.size(); ++j)
            if (cols[j] == cols[i] || cols[j] == G.neg(cols[i]))
                throw std::runtime_error("golay_pds: dual generator columns are not projective");
    }

    std::set<Int> D;
    for (Int c : cols) {
        D.insert(c);
        D.insert(G.neg(c));  // the alpha = 2 multiple
    }
    if (D.size() != 22) throw std::runtime_error("golay_pds: expected 22 elements");
    return {D.begin(), D.end()};
}

PaleyExistence paley_exists(Int v) {
    if (v <= 1) throw std::invalid_argument("paley_exists: v must be > 1");
    if (v % 2 == 0) throw std::invalid_argument("paley_exists: v must be odd");
    PaleyExistence out;
    auto [p, e] = prime_power_decompose(v);
    if (p != 0 && v % 4 == 1) {
        std::ostringstream msg;
        msg << "v = " << p << "^" << e << " is a prime power with v = 1 mod 4";
        return {true, msg.str()};
    }
    Int r = iroot4(v);
    if (r > 1 && r * r * r * r == v && r % 2 == 1)
        return {true, "v = n^4 with n = " + std::to_string(r) + " odd"};
    if (v % 9 == 0) {
        Int s = iroot4(v / 9);
        if (s > 1 && s * s * s * s == v / 9 && s % 2 == 1)
            return {true, "v = 9 n^4 with n = " + std::to_string(s) + " odd"};
    }
    out.reason = "v is neither a prime power = 1 mod 4 nor n^4 nor 9 n^4 with n > 1 odd";
    return out;
}

Int character_criterion(const GroupRingElement& D, Int expected_n) {
    const AbelianGroup& G = D.group;
    for (Int ci = 1; ci < G.order(); ++ci) {
        Character chi = character(G, ci);
        CyclotomicInteger s = char_sum(chi, D);
        CyclotomicInteger nrm = ci_norm_sq(s);
        if (!ci_is_integer(nrm) || ci_as_integer(nrm) != expected_n) return ci;
    }
    return -1;
}

} // namespace sds
