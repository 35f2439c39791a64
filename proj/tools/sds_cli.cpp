// Command-line front end: construct the signed-difference-set families,
// verify documents, run the fourth-order cyclotomic classification, and
// export sequences / weighing matrices.
//
// Exit codes are a contract:
//   0 success / positive verification
//   1 negative verification result (not an SDS, infeasible triple)
//   2 invalid flags or unparseable document
//   3 construction or export precondition failed
//   4 internal defect (a construction failed its own re-verification)
//   5 classification found a prediction/verification disagreement

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sds/arith.hpp"
#include "sds/character.hpp"
#include "sds/cyclotomy.hpp"
#include "sds/designs.hpp"
#include "sds/document.hpp"
#include "sds/product3.hpp"
#include "sds/sequences.hpp"

namespace {

using namespace sds;

constexpr int kExitNotVerified = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitDefect = 4;
constexpr int kExitDisagreement = 5;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int thread_budget() {
    if (const char* env = std::getenv("SDS_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<Int> parse_tuple(const std::string& text) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

// ---------------------------------------------------------------- construct

int construct_paley(Int q) {
    auto [p, n] = prime_power_decompose(q);
    if (p == 0) throw std::invalid_argument("construct paley: q must be a prime power");
    FiniteField F = FiniteField::make(p, n);
    AbelianGroup G = additive_group(F);
    SdsParams predicted;
    SignedSet D = sds_from_pds(G, paley_pds(F), &predicted);
    std::cout << serialize_document(document_from_ring(to_ring(D), field_descriptor(F), predicted));
    return 0;
}

int construct_golay() {
    AbelianGroup G = golay_group();
    SdsParams predicted;
    SignedSet D = sds_from_pds(G, golay_pds(), &predicted);
    std::cout << serialize_document(document_from_ring(to_ring(D), {}, predicted));
    return 0;
}

int construct_product3(int m, const std::string& x1_text, bool big_ok) {
    if (m != 2 && !(m == 4 && big_ok))
        throw std::invalid_argument(m == 4 ? "construct product3: m = 4 needs --big"
                                           : "construct product3: supported sizes are m = 2 and m = 4");
    AbelianGroup G1(std::vector<Int>(static_cast<size_t>(m), 3));
    Int x1 = 0;
    if (!x1_text.empty()) {
        try {
            x1 = G1.element(parse_tuple(x1_text));
        } catch (const std::exception& e) {
            throw CLI::ValidationError("--x1", e.what());
        }
    }
    Product3Spec spec = product3_default_spec(m, x1);
    GroupRingElement D = product3_construct(spec);  // verifies internally
    SdsParams params{D.group.order(), size_sq(D), 1};
    std::cout << serialize_document(document_from_ring(D, {}, params));
    return 0;
}

int construct_cyclotomic(Int q, const std::string& case_id, int i, int j, std::optional<Int> w) {
    auto [p, n] = prime_power_decompose(q);
    if (p == 0) throw std::invalid_argument("construct cyclotomic: q must be a prime power");
    FiniteField F = FiniteField::make(p, n);
    CyclotomicSystem sys = cyclotomic_system(F, w);
    // a bad case id or index shape is a flag error, not a precondition failure
    Table3Candidate cand = [&] {
        try {
            return table3_construct(sys, case_id, i, j);
        } catch (const std::invalid_argument& e) {
            throw CLI::ValidationError("construct cyclotomic", e.what());
        }
    }();
    if (cand.never_exists)
        throw std::invalid_argument("case " + case_id + " never yields an SDS: " + cand.never_reason);
    if (!cand.condition)
        throw std::invalid_argument("case " + case_id + " condition fails at q = " + std::to_string(q));
    SdsCheck check = verify_sds(to_ring(cand.set), /*require_strict=*/true);
    if (!check.ok || check.params != cand.predicted)
        throw std::runtime_error("constructed set failed re-verification");
    FieldDescriptor fd = field_descriptor(F);
    fd.w_coords = F.coords(sys.w);  // record the generator actually used
    std::cout << serialize_document(document_from_ring(to_ring(cand.set), fd, cand.predicted));
    if (!cand.note.empty()) std::cerr << "note: " << cand.note << "\n";
    return 0;
}

// ------------------------------------------------------------------- verify

int run_verify(const std::string& path) {
    SignedSetDocument doc = parse_document(read_input(path));
    SdsCheck check = verify_sds(doc.element);
    if (!check.ok) {
        std::cout << "not an SDS: " << check.failure << "\n";
        return kExitNotVerified;
    }
    const SdsParams& p = check.params;
    std::cout << (check.strict ? "SDS (" : "relaxed SDS (") << p.v << "," << p.k << "," << p.lambda
              << ")";
    if (!check.strict) std::cout << "; strictness violated at " << check.strict_violations << " elements";

    Feasibility fez = check.strict
                          ? feasible(p.v, p.k, p.lambda, check.pos_count, check.neg_count)
                          : feasible(p.v, p.k, p.lambda);
    if (!fez.ok) {
        std::cout << "\ncounting condition failed: " << fez.reason << "\n";
        return kExitDefect;
    }
    std::cout << (check.strict ? ", strict" : "") << ", root " << fez.root;

    Int bad = character_criterion(doc.element, p.n());
    if (bad >= 0) {
        std::cout << "\ncharacter criterion failed at character " << bad << "\n";
        return kExitDefect;
    }
    std::cout << ", characters ok";
    if (doc.declared && *doc.declared != p)
        std::cout << "\nwarning: declared parameters differ from verified parameters";
    std::cout << "\n";
    return 0;
}

// ----------------------------------------------------------------- classify

void print_rows(const ClassificationReport& rep, bool records, std::ostream& out) {
    for (const auto& row : rep.rows) {
        const Table3Candidate& c = row.candidate;
        auto k_str = [&]() -> std::string {
            if (c.never_exists) return "-";
            return std::to_string(c.predicted.k);
        };
        auto lambda_str = [&]() -> std::string {
            if (c.never_exists || !c.lambda_integral) return "-";
            return std::to_string(c.predicted.lambda);
        };
        auto root_str = [&]() -> std::string {
            return row.verified ? std::to_string(row.root) : "-";
        };
        if (records) {
            out << rep.q << '\t' << c.case_id << '\t' << c.i << '\t' << c.j << '\t' << k_str()
                << '\t' << lambda_str() << '\t' << (c.condition ? 1 : 0) << '\t'
                << (row.verified ? 1 : 0) << '\t' << root_str() << '\t' << (row.agree() ? 1 : 0)
                << '\n';
        } else {
            out << "q=" << rep.q << " case=" << c.case_id;
            if (c.i >= 0) out << " i=" << c.i;
            if (c.j >= 0) out << " j=" << c.j;
            if (c.never_exists)
                out << " never (" << c.never_reason << ")";
            else
                out << " predicted=(" << rep.q << "," << k_str() << "," << lambda_str() << ")"
                    << " condition=" << (c.condition ? "yes" : "no");
            out << " verified=" << (row.verified ? "yes" : "no") << " root=" << root_str()
                << " agree=" << (row.agree() ? "yes" : "no");
            if (!row.candidate.note.empty()) out << " note=\"" << row.candidate.note << "\"";
            if (!row.defect.empty()) out << " defect=\"" << row.defect << "\"";
            out << '\n';
        }
    }
    if (!records) {
        out << "q=" << rep.q << " w=" << rep.w << " f=" << rep.f << " s=" << rep.params.s
            << " t=" << rep.params.t << " families:";
        for (const auto& s : rep.summaries) {
            if (s.exists_for_w)
                out << " " << s.case_id;
            else if (s.exists_some_generator)
                out << " " << s.case_id << "(other-generator)";
        }
        out << '\n';
    }
}

int run_classify(std::optional<Int> q_opt, std::optional<Int> max_q, bool records) {
    std::vector<Int> qs;
    if (q_opt && max_q) throw CLI::ValidationError("classify", "--q and --max-q are exclusive");
    if (q_opt) {
        qs.push_back(*q_opt);
    } else if (max_q) {
        for (Int q = 5; q <= *max_q; ++q)
            if (q % 4 == 1 && is_prime_power(q)) qs.push_back(q);
    } else {
        throw CLI::ValidationError("classify", "one of --q / --max-q is required");
    }
    for (Int q : qs)
        if (q % 4 != 1 || !is_prime_power(q))
            throw std::invalid_argument("classify: q must be a prime power = 1 mod 4");

    std::vector<ClassificationReport> reports(qs.size());
    std::atomic<size_t> next{0};
    int workers = std::min<int>(thread_budget(), static_cast<int>(qs.size()));
    auto work = [&] {
        for (size_t idx = next.fetch_add(1); idx < qs.size(); idx = next.fetch_add(1)) {
            auto [p, n] = prime_power_decompose(qs[idx]);
            FiniteField F = FiniteField::make(p, n);
            reports[idx] = table3_classify(cyclotomic_system(F));
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    bool all_agree = true;
    for (const auto& rep : reports) {
        print_rows(rep, records, std::cout);
        all_agree = all_agree && rep.all_agree;
    }
    if (!all_agree) {
        std::cerr << "classification found prediction/verification disagreements\n";
        return kExitDisagreement;
    }
    return 0;
}

// ------------------------------------------------------------------ exports

int run_sequence(const std::string& path, bool acf) {
    SignedSetDocument doc = parse_document(read_input(path));
    SignedSet D = [&] {
        try {
            return signed_set_from_ring(doc.element);
        } catch (const std::domain_error& e) {
            throw std::invalid_argument(e.what());
        }
    }();
    TernarySequence S = sequence_from_sds(D);
    std::string line;
    for (int s : S.symbols) line += (s > 0 ? '+' : s < 0 ? '-' : '0');
    std::cout << line << "\n";
    if (acf) {
        for (Int tau = 0; tau < S.period; ++tau)
            std::cout << tau << " " << autocorrelation(S, tau) << "\n";
    }
    return 0;
}

int run_weighing(const std::string& path, bool dense, std::uint64_t seed) {
    SignedSetDocument doc = parse_document(read_input(path));
    SignedSet D = [&] {
        try {
            return signed_set_from_ring(doc.element);
        } catch (const std::domain_error& e) {
            throw std::invalid_argument(e.what());
        }
    }();
    WeighingMatrix W = weighing_from_sds(D, seed);
    std::string row;
    for (Int g = 0; g < W.order(); ++g) {
        Int c = W.first_row[g];
        row += (c > 0 ? '+' : c < 0 ? '-' : '0');
    }
    std::cout << W.order() << " " << W.weight << " " << row << "\n";
    if (dense && W.dense.size() > 0) {
        for (Int r = 0; r < W.order(); ++r) {
            for (Int c = 0; c < W.order(); ++c)
                std::cout << (c ? " " : "") << W.dense(r, c);
            std::cout << "\n";
        }
    }
    return 0;
}

int run_feasible(Int v, Int k, Int lambda, std::optional<Int> pos, std::optional<Int> neg) {
    Feasibility fez = (pos && neg) ? feasible(v, k, lambda, *pos, *neg) : feasible(v, k, lambda);
    if (fez.ok) {
        std::cout << "accept root=" << fez.root << "\n";
        return 0;
    }
    std::cout << "reject: " << fez.reason << "\n";
    return kExitNotVerified;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed difference set construction, verification and export"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a family member and print its document");
    construct->require_subcommand(1);

    Int paley_q = 0;
    auto* c_paley = construct->add_subcommand("paley", "quadratic-residue lift over GF(q), q = 1 mod 4");
    c_paley->add_option("--q", paley_q, "field order")->required();

    auto* c_golay = construct->add_subcommand("golay", "the (243,242,161) lift of the 22-element two-weight-code set");

    int p3_m = 2;
    std::string p3_x1;
    bool p3_big = false;
    auto* c_p3 = construct->add_subcommand("product3", "3-group product construction over Z_3^(2m+1)");
    c_p3->add_option("--m", p3_m, "half-rank parameter, even (default 2)");
    c_p3->add_option("--x1", p3_x1, "offset element of Z_3^m as comma-separated coordinates (default 0)");
    c_p3->add_flag("--big", p3_big, "allow m = 4 (verified through characters only)");

    Int cy_q = 0;
    std::string cy_case;
    int cy_i = -1, cy_j = -1;
    Int cy_w = -1;
    auto* c_cy = construct->add_subcommand("cyclotomic", "fourth-order cyclotomic family member");
    c_cy->add_option("--q", cy_q, "field order, prime power = 1 mod 4")->required();
    c_cy->add_option("--case", cy_case, "case id: 1a 1b 1c 1d 2a 2b 3a 3b 3c 4 5 6a 6b")->required();
    c_cy->add_option("--i", cy_i, "class index i");
    c_cy->add_option("--j", cy_j, "class index j");
    c_cy->add_option("--w", cy_w, "generator override (element index)");

    // verify
    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "verify a signed-set document");
    verify->add_option("file", verify_path, "document path, or - for stdin")->required();

    // classify
    std::optional<Int> cls_q, cls_max;
    bool cls_records = false;
    auto* classify = app.add_subcommand("classify", "run the fourth-order classification");
    classify->add_option("--q", cls_q, "single field order");
    classify->add_option("--max-q", cls_max, "scan all prime powers = 1 mod 4 up to this bound");
    std::string cls_format;
    classify->add_option("--format", cls_format, "output format: plain (default) or records");

    // sequence
    std::string seq_path;
    bool seq_acf = false;
    auto* sequence = app.add_subcommand("sequence", "export the ternary sequence of a cyclic-group document");
    sequence->add_option("file", seq_path, "document path, or - for stdin")->required();
    sequence->add_flag("--acf", seq_acf, "also print the autocorrelation table");

    // weighing
    std::string wgh_path;
    bool wgh_dense = false;
    std::uint64_t wgh_seed = 20240913;
    auto* weighing = app.add_subcommand("weighing", "export the invariant weighing matrix of a lambda = 0 document");
    weighing->add_option("file", wgh_path, "document path, or - for stdin")->required();
    weighing->add_flag("--dense", wgh_dense, "print the dense matrix");
    weighing->add_option("--seed", wgh_seed, "seed for the sampled check above order 512");

    // feasible
    Int f_v = 0, f_k = 0, f_lambda = 0;
    std::optional<Int> f_pos, f_neg;
    auto* feas = app.add_subcommand("feasible", "test the counting condition for (v, k, lambda)");
    feas->add_option("--v", f_v)->required();
    feas->add_option("--k", f_k)->required();
    feas->add_option("--lambda", f_lambda)->required();
    feas->add_option("--p-size", f_pos, "|P|, checked together with --n-size");
    feas->add_option("--n-size", f_neg, "|N|");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (c_paley->parsed()) return construct_paley(paley_q);
        if (c_golay->parsed()) return construct_golay();
        if (c_p3->parsed()) return construct_product3(p3_m, p3_x1, p3_big);
        if (c_cy->parsed())
            return construct_cyclotomic(cy_q, cy_case, cy_i, cy_j,
                                        cy_w >= 0 ? std::optional<Int>(cy_w) : std::nullopt);
        if (verify->parsed()) return run_verify(verify_path);
        if (classify->parsed()) {
            if (!cls_format.empty() && cls_format != "plain" && cls_format != "records")
                throw CLI::ValidationError("--format", "must be plain or records");
            return run_classify(cls_q, cls_max, cls_format == "records");
        }
        if (sequence->parsed()) return run_sequence(seq_path, seq_acf);
        if (weighing->parsed()) return run_weighing(wgh_path, wgh_dense, wgh_seed);
        if (feas->parsed()) return run_feasible(f_v, f_k, f_lambda, f_pos, f_neg);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDefect;
    }
    return kExitParse;
}
