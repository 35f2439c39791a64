#include "sds/cyclotomy.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sds/arith.hpp"

namespace sds {

CyclotomicSystem cyclotomic_system(const FiniteField& F, std::optional<Int> w_override) {
    Int q = F.q();
    if (q % 4 != 1) throw std::invalid_argument("cyclotomic_system: requires q = 1 mod 4");
    CyclotomicSystem sys{F, additive_group(F), w_override.value_or(F.generator()), (q - 1) / 4, {}, {}};
    if (sys.w <= 0 || sys.w >= q || F.element_order(sys.w) != q - 1)
        throw std::invalid_argument("cyclotomic_system: w is not a generator of F_q*");
    sys.class_of.assign(static_cast<size_t>(q), -1);
    Int x = 1;
    for (Int k = 0; k < q - 1; ++k) {
        sys.class_of[static_cast<size_t>(x)] = static_cast<int>(k % 4);
        x = F.mul(x, sys.w);
    }
    for (Int g = 1; g < q; ++g)
        sys.classes[static_cast<size_t>(sys.class_of[static_cast<size_t>(g)])].push_back(g);
    return sys;
}

Int cyclo_number_oracle(const CyclotomicSystem& sys, int i, int j) {
    if (i < 0 || i > 3 || j < 0 || j > 3)
        throw std::invalid_argument("cyclo_number_oracle: indices must be in [0,3]");
    Int count = 0;
    for (Int x : sys.classes[static_cast<size_t>(i)]) {
        Int y = sys.field.add(x, 1);
        if (y != 0 && sys.class_of[static_cast<size_t>(y)] == j) ++count;
    }
    return count;
}

QuarticParams quartic_params(const CyclotomicSystem& sys) {
    const FiniteField& F = sys.field;
    Int p = F.p();
    Int q = F.q();
    int n = F.degree();

    if (p % 4 == 3) {
        if (n % 2 != 0) throw std::logic_error("quartic_params: p = 3 mod 4 with odd degree");
        Int s = 1;
        for (int i = 0; i < n / 2; ++i) s *= -p;
        return {s, 0};
    }

    // p = 1 mod 4: scan for the unique s = 1 mod 4 with p not dividing s and
    // q - s^2 a perfect square
    Int bound = isqrt(q);
    Int s_found = 0, t_abs = -1;
    for (Int s = -bound; s <= bound; ++s) {
        if (((s % 4) + 4) % 4 != 1) continue;
        if (s % p == 0) continue;
        Int t = perfect_square_root(q - s * s);
        if (t < 0) continue;
        if (t_abs >= 0) throw std::logic_error("quartic_params: decomposition not unique");
        s_found = s;
        t_abs = t;
    }
    if (t_abs < 0) throw std::logic_error("quartic_params: no quartic decomposition found");

    // fix the sign of t: w^{(q-1)/4} lies in the prime subfield and must
    // equal s/t there
    Int r = F.pow(sys.w, (q - 1) / 4);
    auto rc = F.coords(r);
    for (size_t i = 1; i < rc.size(); ++i)
        if (rc[i] != 0) throw std::logic_error("quartic_params: fourth root of unity not in prime subfield");
    Int r0 = rc[0];
    Int s_mod = ((s_found % p) + p) % p;
    for (Int t : {t_abs, -t_abs}) {
        Int t_mod = ((t % p) + p) % p;
        if (s_mod * mod_inv(t_mod, p) % p == r0) return {s_found, t};
    }
    throw std::logic_error("quartic_params: sign of t could not be determined");
}

namespace {

enum Letter { A, B, C, D, E };

constexpr Letter kTableFEven[4][4] = {
    {A, B, C, D},
    {B, D, E, E},
    {C, E, C, E},
    {D, E, E, B},
};

constexpr Letter kTableFOdd[4][4] = {
    {A, B, C, D},
    {E, E, D, B},
    {A, E, A, E},
    {E, D, B, E},
};

} // namespace

Int cyclo_number_table(Int q, const QuarticParams& params, bool f_even, int i, int j) {
    if (i < 0 || i > 3 || j < 0 || j > 3)
        throw std::invalid_argument("cyclo_number_table: indices must be in [0,3]");
    Int s = params.s, t = params.t;
    Int numerator = 0;
    Letter letter = f_even ? kTableFEven[i][j] : kTableFOdd[i][j];
    if (f_even) {
        switch (letter) {
            case A: numerator = q - 11 - 6 * s; break;
            case B: numerator = q - 3 + 2 * s + 4 * t; break;
            case C: numerator = q - 3 + 2 * s; break;
            case D: numerator = q - 3 + 2 * s - 4 * t; break;
            case E: numerator = q + 1 - 2 * s; break;
        }
    } else {
        switch (letter) {
            case A: numerator = q - 7 + 2 * s; break;
            case B: numerator = q + 1 + 2 * s - 4 * t; break;
            case C: numerator = q + 1 - 6 * s; break;
            case D: numerator = q + 1 + 2 * s + 4 * t; break;
            case E: numerator = q - 3 - 2 * s; break;
        }
    }
    if (numerator % 16 != 0 || numerator < 0)
        throw std::domain_error("cyclo_number_table: value is not a nonnegative integer");
    return numerator / 16;
}

Int cyclo_number_table(const CyclotomicSystem& sys, int i, int j) {
    return cyclo_number_table(sys.q(), quartic_params(sys), sys.f % 2 == 0, i, j);
}

namespace {

// q = 4t^2 + c for an odd t
bool odd_t_multiple(Int q, Int c) {
    if (q - c < 0 || (q - c) % 4 != 0) return false;
    Int t = perfect_square_root((q - c) / 4);
    return t > 0 && t % 2 == 1;
}

} // namespace

QuarticDsReport quartic_ds_test(const CyclotomicSystem& sys) {
    QuarticDsReport out;
    Int q = sys.q();
    out.c0_predicted = odd_t_multiple(q, 1);
    out.c0_plus_predicted = odd_t_multiple(q, 9);

    // difference-set check is the SDS equation with empty N
    {
        GroupRingElement ind = indicator(sys.group, sys.classes[0]);
        SdsCheck check = verify_sds(ind);
        out.c0_verified = check.ok && check.params == SdsParams{q, (q - 1) / 4, (q - 5) / 16};
        if (check.ok) out.c0_params = check.params;
    }
    {
        std::vector<Int> with_zero = sys.classes[0];
        with_zero.push_back(0);
        GroupRingElement ind = indicator(sys.group, with_zero);
        SdsCheck check = verify_sds(ind);
        out.c0_plus_verified = check.ok && check.params == SdsParams{q, (q + 3) / 4, (q + 3) / 16};
        if (check.ok) out.c0_plus_params = check.params;
    }
    return out;
}

const std::vector<std::string>& table3_case_ids() {
    static const std::vector<std::string> ids = {"1a", "1b", "1c", "1d", "2a", "2b",
                                                 "3a", "3b", "3c", "4",  "5",  "6a", "6b"};
    return ids;
}

namespace {

int diff_mod4(int i, int j) { return ((i - j) % 4 + 4) % 4; }

// condition on (s, t) for the index-difference branches of cases 3a/3b/4
bool st_condition(const std::string& case_id, int d, const QuarticParams& qp) {
    Int s = qp.s, t = qp.t;
    if (case_id == "3a") {
        if (d == 1) return 4 * t + 3 * s == 3;
        if (d == 2) return s == 9;
        return 3 * s - 4 * t == 3;
    }
    if (case_id == "3b") {
        if (d == 1) return 3 * s + 4 * t == -5;
        if (d == 2) return s == -15;
        return 4 * t - 3 * s == 5;
    }
    // case 4
    if (d == 1) return 3 * s + 4 * t == -1;
    if (d == 2) return s == -3;
    return 3 * s - 4 * t == -1;
}

// the closed-form existence condition of the classification, evaluated for
// explicit quartic parameters so the generator-independent aggregate can try
// both signs of t
bool closed_form_condition(const std::string& case_id, int i, int j, Int q, Int f, Int p,
                           const QuarticParams& qp) {
    if (case_id == "1a") return true;
    if (case_id == "1b") return odd_t_multiple(q, 9);
    if (case_id == "1d") return odd_t_multiple(q, 1);
    if (case_id == "2b") return diff_mod4(i, j) == 2 || p % 4 == 3;
    if (case_id == "3a") return f % 4 == 1 && st_condition("3a", diff_mod4(i, j), qp);
    if (case_id == "3b") return f % 4 == 1 && st_condition("3b", diff_mod4(i, j), qp);
    if (case_id == "3c") return f % 4 == 1 && qp.s == -7;
    if (case_id == "4") return f % 4 == 3 && st_condition("4", diff_mod4(i, j), qp);
    if (case_id == "5") return f % 4 == 3 && qp.s == 5;
    return false;  // 1c, 2a, 6a, 6b never exist
}

bool is_never_case(const std::string& case_id) {
    return case_id == "1c" || case_id == "2a" || case_id == "6a" || case_id == "6b";
}

std::vector<std::pair<int, int>> index_pairs(const std::string& case_id) {
    if (case_id == "1a") return {{-1, -1}};
    if (case_id == "1b" || case_id == "1d" || case_id == "2a" || case_id == "5") {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < 4; ++i) out.push_back({i, -1});
        return out;
    }
    if (case_id == "3c") {
        std::vector<std::pair<int, int>> out;
        for (int j = 0; j < 4; ++j) out.push_back({-1, j});
        return out;
    }
    if (case_id == "1c" || case_id == "2b") {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) out.push_back({i, j});
        return out;
    }
    // 3a, 3b, 4, 6a, 6b: ordered pairs, the two indices play different roles
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) out.push_back({i, j});
    return out;
}

} // namespace

Table3Candidate table3_construct(const CyclotomicSystem& sys, const std::string& case_id, int i, int j) {
    const auto& ids = table3_case_ids();
    if (std::find(ids.begin(), ids.end(), case_id) == ids.end())
        throw std::invalid_argument("table3_construct: unknown case id '" + case_id + "'");

    const bool uses_i = case_id != "1a" && case_id != "3c";
    const bool uses_j = case_id == "1c" || case_id == "2b" || case_id == "3a" || case_id == "3b" ||
                        case_id == "3c" || case_id == "4" || case_id == "6a" || case_id == "6b";
    if (uses_i && (i < 0 || i > 3))
        throw std::invalid_argument("table3_construct: case " + case_id + " needs index i in [0,3]");
    if (!uses_i && i != -1)
        throw std::invalid_argument("table3_construct: case " + case_id + " does not take index i");
    if (uses_j && (j < 0 || j > 3))
        throw std::invalid_argument("table3_construct: case " + case_id + " needs index j in [0,3]");
    if (!uses_j && j != -1)
        throw std::invalid_argument("table3_construct: case " + case_id + " does not take index j");
    if (uses_i && uses_j && i == j)
        throw std::invalid_argument("table3_construct: case " + case_id + " requires i != j");

    Int q = sys.q();
    Int f = sys.f;
    QuarticParams qp = quartic_params(sys);

    Table3Candidate cand;
    cand.case_id = case_id;
    cand.i = i;
    cand.j = j;
    cand.never_exists = is_never_case(case_id);
    cand.condition =
        !cand.never_exists && closed_form_condition(case_id, i, j, q, f, sys.field.p(), qp);

    auto klass = [&](int c) { return sys.classes[static_cast<size_t>(c)]; };
    // all elements outside the marked classes; zero kept unless excluded
    auto complement = [&](std::initializer_list<int> drop, bool drop_zero) {
        bool mask[4] = {false, false, false, false};
        for (int c : drop) mask[c] = true;
        std::vector<Int> out;
        for (Int g = drop_zero ? 1 : 0; g < q; ++g) {
            int c = sys.class_of[static_cast<size_t>(g)];
            if (c >= 0 && mask[c]) continue;
            out.push_back(g);
        }
        return out;
    };
    auto with_zero = [&](std::vector<Int> xs) {
        xs.insert(xs.begin(), 0);
        return xs;
    };
    auto union2 = [&](int a, int b) {
        std::vector<Int> out = klass(a);
        const auto& cb = klass(b);
        out.insert(out.end(), cb.begin(), cb.end());
        return out;
    };
    auto make = [&](std::vector<Int> pos, std::vector<Int> neg) {
        cand.set = SignedSet(sys.group, std::move(pos), std::move(neg));
    };
    auto predict = [&](Int k, Int lambda_num) {
        cand.lambda_integral = lambda_num % 4 == 0;
        cand.predicted = {q, k, cand.lambda_integral ? lambda_num / 4 : 0};
    };

    if (case_id == "1a") {
        make(complement({}, true), {0});
        cand.predicted = {q, q, q - 4};
    } else if (case_id == "1b") {
        make(complement({i}, true), with_zero(klass(i)));
        predict(q, q - 9);
    } else if (case_id == "1c") {
        make(union2(i, j), complement({i, j}, false));
        cand.never_reason = "no choice of q makes the four class coefficients of DD^(-1) equal";
    } else if (case_id == "1d") {
        make(klass(i), complement({i}, false));
        predict(q, q - 1);
    } else if (case_id == "2a") {
        make(complement({i}, true), klass(i));
        cand.never_reason = "forces s = -1 (f odd) or q = 9 with s = 3 (f even), neither is possible";
    } else if (case_id == "2b") {
        int k1 = -1, k2 = -1;
        for (int c = 0; c < 4; ++c)
            if (c != i && c != j) (k1 < 0 ? k1 : k2) = c;
        make(union2(i, j), union2(k1, k2));
        cand.predicted = {q, q - 1, -1};
    } else if (case_id == "3a") {
        make(klass(i), complement({i, j}, false));
        predict(3 * f + 1, f - 1);
    } else if (case_id == "3b") {
        make(complement({i, j}, true), with_zero(klass(i)));
        predict(3 * f + 1, f - 5);
    } else if (case_id == "3c") {
        make(complement({j}, true), {0});
        predict(3 * f + 1, 9 * f - 9);
    } else if (case_id == "4") {
        make(klass(i), complement({i, j}, true));
        predict(3 * f, f - 3);
    } else if (case_id == "5") {
        make(klass(i), {0});
        predict(f + 1, f - 3);
        cand.note = "k = |P| + |N| = f + 1; the alternative reading k = q - 1 "
                    "conflicts with the support sizes and is not used";
    } else {  // 6a / 6b
        make(klass(i), case_id == "6a" ? with_zero(klass(j)) : klass(j));
        cand.never_reason = "counting forces lambda = -1/2, not an integer";
    }
    return cand;
}

ClassificationReport table3_classify(const CyclotomicSystem& sys) {
    ClassificationReport report;
    report.q = sys.q();
    report.w = sys.w;
    report.f = sys.f;
    report.params = quartic_params(sys);
    QuarticParams flipped{report.params.s, -report.params.t};

    for (const auto& case_id : table3_case_ids()) {
        CaseFamilySummary summary;
        summary.case_id = case_id;
        for (auto [i, j] : index_pairs(case_id)) {
            ClassificationRow row;
            row.candidate = table3_construct(sys, case_id, i, j);

            SdsCheck check = verify_sds(to_ring(row.candidate.set), /*require_strict=*/true);
            row.verified = check.ok;
            if (check.ok) {
                row.actual = check.params;
                summary.exists_for_w = true;
                Feasibility fez = feasible(check.params.v, check.params.k, check.params.lambda,
                                           check.pos_count, check.neg_count);
                if (!fez.ok)
                    row.defect = "verified SDS fails the counting condition: " + fez.reason;
                else
                    row.root = fez.root;
            }

            bool predicted_exists = !row.candidate.never_exists && row.candidate.condition;
            if (row.defect.empty() && predicted_exists != row.verified) {
                std::ostringstream msg;
                msg << "condition says " << (predicted_exists ? "exists" : "does not exist")
                    << " but verification says " << (row.verified ? "exists" : "does not exist");
                row.defect = msg.str();
            }
            if (row.defect.empty() && row.verified && !row.candidate.never_exists) {
                if (!row.candidate.lambda_integral || row.actual != row.candidate.predicted) {
                    std::ostringstream msg;
                    msg << "verified parameters (" << row.actual.v << "," << row.actual.k << ","
                        << row.actual.lambda << ") differ from the table prediction";
                    row.defect = msg.str();
                }
            }
            if (!row.agree()) report.all_agree = false;
            report.rows.push_back(std::move(row));

            if (!is_never_case(case_id)) {
                for (const QuarticParams& qp : {report.params, flipped})
                    if (closed_form_condition(case_id, i, j, report.q, report.f, sys.field.p(), qp))
                        summary.exists_some_generator = true;
            }
        }
        report.summaries.push_back(summary);
    }
    return report;
}

} // namespace sds
