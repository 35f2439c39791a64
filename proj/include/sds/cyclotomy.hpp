#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sds/designs.hpp"
#include "sds/finite_field.hpp"
#include "sds/group_ring.hpp"
#include "sds/types.hpp"

namespace sds {

/// Fourth-order cyclotomic classes of F_q*, q = 1 mod 4: C_i = w^i <w^4>,
/// each of size f = (q-1)/4, partitioning the nonzero elements. All derived
/// data (class membership, quartic parameters) depends on the generator w
/// actually used, which may differ from the field's default.
struct CyclotomicSystem {
    FiniteField field;
    AbelianGroup group;  // additive group of the field
    Int w = 0;           // generator the classes are built from
    Int f = 0;           // (q - 1) / 4
    std::array<std::vector<Int>, 4> classes;  // ascending element indices
    std::vector<int> class_of;                // size q; -1 at zero

    Int q() const { return field.q(); }
};

CyclotomicSystem cyclotomic_system(const FiniteField& F, std::optional<Int> w_override = {});

/// Brute-force cyclotomic number (i,j) = |(C_i + 1) n C_j|; the reference
/// oracle for the closed-form tables.
Int cyclo_number_oracle(const CyclotomicSystem& sys, int i, int j);

/// The quartic decomposition q = s^2 + t^2: s = (-p)^{n/2}, t = 0 when
/// p = 3 mod 4; otherwise s = 1 mod 4 with p not dividing s, and the sign of
/// t fixed by w^{(q-1)/4} = s/t in the prime subfield.
struct QuarticParams {
    Int s = 0, t = 0;
};

QuarticParams quartic_params(const CyclotomicSystem& sys);

/// Closed-form cyclotomic number of order 4 from the (s,t) decomposition;
/// throws std::domain_error when the table value is not a nonnegative
/// integer (inconsistent parameters).
Int cyclo_number_table(Int q, const QuarticParams& params, bool f_even, int i, int j);
Int cyclo_number_table(const CyclotomicSystem& sys, int i, int j);

/// The two quartic-residue difference-set tests: C_0 with parameters
/// (q, (q-1)/4, (q-5)/16) iff q = 4t^2 + 1 with t odd, and C_0 + 0_G with
/// (q, (q+3)/4, (q+3)/16) iff q = 4t^2 + 9 with t odd. Each is decided both
/// by the closed form and by brute-force convolution.
struct QuarticDsReport {
    bool c0_predicted = false, c0_verified = false;
    bool c0_plus_predicted = false, c0_plus_verified = false;
    SdsParams c0_params, c0_plus_params;  // filled when verified
    bool consistent() const {
        return c0_predicted == c0_verified && c0_plus_predicted == c0_plus_verified;
    }
};

QuarticDsReport quartic_ds_test(const CyclotomicSystem& sys);

/// One candidate row of the fourth-order classification. The 13 shapes are:
///   1a: P = G-0,            N = 0
///   1b: P = G-C_i-0,        N = C_i+0
///   1c: P = C_i+C_j,        N = rest            (never an SDS)
///   1d: P = C_i,            N = G-C_i
///   2a: P = G-C_i-0,        N = C_i             (never an SDS)
///   2b: P = C_i+C_j,        N = C_k+C_l
///   3a: P = C_i,            N = G-C_i-C_j
///   3b: P = G-C_i-C_j-0,    N = C_i+0
///   3c: P = G-C_j-0,        N = 0
///   4:  P = C_i,            N = G-C_i-C_j-0
///   5:  P = C_i,            N = 0
///   6a: P = C_i,            N = C_j+0           (never an SDS)
///   6b: P = C_i,            N = C_j             (never an SDS)
struct Table3Candidate {
    std::string case_id;
    int i = -1, j = -1;          // -1 when the case does not use the index
    bool never_exists = false;
    std::string never_reason;
    bool condition = false;      // closed-form prediction for this (i,j) and w
    bool lambda_integral = true;
    SdsParams predicted;         // table parameters; lambda valid when integral
    SignedSet set{AbelianGroup({1}), {}, {}};
    std::string note;
};

const std::vector<std::string>& table3_case_ids();

/// Build the shape for one case and attach the predicted parameters and the
/// closed-form condition; throws std::invalid_argument on bad case or
/// indices. The shape is built even for never-exists rows so it can be
/// refuted by brute force.
Table3Candidate table3_construct(const CyclotomicSystem& sys, const std::string& case_id,
                                 int i = -1, int j = -1);

struct ClassificationRow {
    Table3Candidate candidate;
    bool verified = false;       // brute-force convolution verdict
    SdsParams actual;            // filled when verified
    Int root = -1;               // feasibility certificate |P| - |N| when verified
    std::string defect;          // non-empty when prediction and verification disagree
    bool agree() const { return defect.empty(); }
};

struct CaseFamilySummary {
    std::string case_id;
    bool exists_for_w = false;         // some (i,j) verified with the configured w
    bool exists_some_generator = false; // closed form holds for t or -t
};

struct ClassificationReport {
    Int q = 0;
    Int w = 0;
    Int f = 0;
    QuarticParams params;
    std::vector<ClassificationRow> rows;        // (case, i, j) ascending
    std::vector<CaseFamilySummary> summaries;
    bool all_agree = true;
};

/// The executable classification: every case, every admissible (i, j),
/// closed-form condition and brute-force verification side by side.
ClassificationReport table3_classify(const CyclotomicSystem& sys);

} // namespace sds
