// adjmat: exact adjugate/determinant CLI over big integers and integer
// polynomials. Subcommands: adj, det, selftest, bench.

#include <bit>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adjmat/adjmat.hpp"

namespace {

using namespace adjmat;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitRetries = 3;
constexpr int kExitVerify = 4;

struct CommonFlags {
    std::string input;
    std::string mode = "par";
    std::uint64_t seed = 0;
    int retries = 8;
    bool stats = false;
    bool trace = false;
    bool verify = false;
    bool oracle = false;  // det only
};

ExecMode parse_mode(const std::string& mode) {
    if (mode == "par") return ExecMode::parallel;
    if (mode == "seq") return ExecMode::sequential;
    throw Error("--mode: expected 'par' or 'seq'");
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    const auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double, std::milli>(dt).count();
}

void print_stats(const RunStats& s, double wall_ms, std::string_view mode,
                 std::uint64_t seed, int attempts) {
    std::cout << "matmul_count " << s.matmul_count << '\n'
              << "exact_div_count " << s.exact_div_count << '\n'
              << "recursion_calls " << s.recursion_calls << '\n'
              << "critical_path_stages " << s.critical_path_stages << '\n'
              << "wall_time_ms " << std::fixed << std::setprecision(3) << wall_ms << '\n'
              << "mode " << mode << '\n'
              << "seed " << seed << '\n'
              << "attempts " << attempts << '\n';
    std::cout.unsetf(std::ios::fixed);
}

template <Domain R>
void print_trace(const TraceNode<R>& tr) {
    const auto mat = [](const Matrix<R>& m) {
        std::string out = "[";
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i > 0) out += "; ";
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (j > 0) out += ' ';
                out += to_text(m.at(i, j));
            }
        }
        return out + "]";
    };
    if (tr.base_case) {
        std::cout << "trace base-case order 2, no named intermediates\n";
        return;
    }
    std::cout << "trace alpha " << to_text(tr.alpha) << '\n'
              << "trace Astar " << mat(tr.a_star) << '\n'
              << "trace beta " << to_text(tr.beta) << '\n'
              << "trace Bstar " << mat(tr.b_star) << '\n'
              << "trace N " << mat(tr.n) << '\n'
              << "trace M " << mat(tr.m) << '\n'
              << "trace F " << mat(tr.f) << '\n'
              << "trace phi " << to_text(tr.phi) << '\n'
              << "trace Fstar " << mat(tr.f_star) << '\n'
              << "trace phiprime " << to_text(tr.phi_prime) << '\n'
              << "trace H " << mat(tr.h) << '\n'
              << "trace L " << mat(tr.l) << '\n'
              << "trace Hprime " << mat(tr.h_prime) << '\n'
              << "trace Lprime " << mat(tr.l_prime) << '\n';
}

/// Opens and parses a matrix file, then calls fn(matrix) for the file's
/// domain. Returns fn's exit code, or kExitParse for unreadable input.
template <typename Fn>
int with_matrix_file(const std::string& path, Fn&& fn) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "adjmat: cannot open '" << path << "'\n";
        return kExitParse;
    }
    std::size_t header_line = 1;
    const MatrixFileHeader h = read_matrix_header(in, &header_line);
    if (h.tag == DomainTag::integer)
        return fn(read_matrix_body<Int>(in, h.order, header_line));
    return fn(read_matrix_body<Polynomial>(in, h.order, header_line));
}

template <Domain R>
bool defining_relation_holds(const Matrix<R>& a, const Matrix<R>& adj, const R& det) {
    const Matrix<R> di = scalar_mul(det, identity_like<R>(a.rows(), a.at(0, 0)));
    return mat_mul(a, adj) == di && mat_mul(adj, a) == di;
}

template <Domain R>
int run_adj(const Matrix<R>& a, const CommonFlags& fl, bool det_only) {
    const ExecMode mode = parse_mode(fl.mode);
    ParAdjOptions<R> opt;
    opt.mode = mode;
    TraceNode<R> tr;

    R det = zero_like(a.at(0, 0));
    Matrix<R> adj;
    RunStats stats;
    std::string_view mode_label = mode_name(mode);
    int attempts = 0;
    bool have_adj = false;
    bool have_trace = false;

    const auto t0 = std::chrono::steady_clock::now();
    if (det_only && fl.oracle) {
        det = det_bareiss(a);
        mode_label = "oracle";
    } else {
        try {
            auto res = adj_any(a, fl.retries, fl.seed, opt, fl.trace ? &tr : nullptr);
            det = std::move(res.det);
            adj = std::move(res.adj);
            stats = res.stats;
            attempts = res.record.attempts;
            have_adj = true;
            have_trace = fl.trace;
        } catch (const RetriesExhausted& e) {
            attempts = e.attempts();
            if (det_only) {
                det = det_bareiss(a);
                mode_label = "oracle";
            } else if (a.rows() <= 8) {
                det = det_bareiss(a);
                adj = adj_cofactor(a);
                mode_label = "oracle";
                have_adj = true;
            } else {
                std::cerr << "adjmat: " << e.what()
                          << " (order > 8, no oracle fallback for the adjugate)\n";
                return kExitRetries;
            }
        }
    }
    const double wall_ms = elapsed_ms(t0);

    std::cout << "determinant " << to_text(det) << '\n';
    if (!det_only) {
        std::cout << "adjugate\n" << format_matrix(adj) << '\n';
    }
    if (fl.verify && have_adj) {
        if (!defining_relation_holds(a, adj, det)) {
            std::cerr << "adjmat: verification failed: A*adj != det*I\n";
            return kExitVerify;
        }
        std::cout << "verify ok\n";
    }
    if (have_trace) print_trace(tr);
    if (fl.stats) print_stats(stats, wall_ms, mode_label, fl.seed, attempts);
    return kExitOk;
}

// --- selftest ----------------------------------------------------------

struct SuiteStats {
    long cases = 0;
    long failures = 0;
};

template <Domain R>
Matrix<R> random_matrix_like(Rng& rng, std::size_t n, const R& like);

template <>
Matrix<Int> random_matrix_like<Int>(Rng& rng, std::size_t n, const Int&) {
    return random_int_matrix(rng, n, 9);
}

template <>
Matrix<Polynomial> random_matrix_like<Polynomial>(Rng& rng, std::size_t n, const Polynomial&) {
    return random_poly_matrix(rng, n, 3, 1);
}

template <Domain R>
std::vector<R> random_column(Rng& rng, std::size_t n, const R& like) {
    std::vector<R> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(random_matrix_like<R>(rng, 1, like).at(0, 0));
    return v;
}

template <Domain R>
SuiteStats suite_column_replacement(Rng& rng, long cases, const R& like) {
    SuiteStats st;
    for (long t = 0; t < cases; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.below(5));
        const Matrix<R> base = random_matrix_like<R>(rng, n, like);
        std::size_t i = static_cast<std::size_t>(rng.below(n));
        std::size_t j = static_cast<std::size_t>(rng.below(n - 1));
        if (j >= i) ++j;
        if (i > j) std::swap(i, j);
        const ColumnReplacement<R> ctx{base, i, j};
        const auto a = random_column(rng, n, like);
        const auto b = random_column(rng, n, like);
        const auto c = random_column(rng, n, like);
        const auto d = random_column(rng, n, like);
        ++st.cases;
        if (!check_column_replacement(ctx, a, b, c, d)) ++st.failures;
    }
    return st;
}

template <Domain R>
SuiteStats suite_sylvester(Rng& rng, long cases, const R& like) {
    SuiteStats st;
    for (long t = 0; t < cases; ++t) {
        const std::size_t n = 3 + static_cast<std::size_t>(t % 3);
        Matrix<R> f = random_matrix_like<R>(rng, n, like);
        int guard = 0;
        while (is_zero(f.at(0, 0)) && guard++ < 64)
            f = random_matrix_like<R>(rng, n, like);
        if (is_zero(f.at(0, 0))) continue;
        ++st.cases;
        if (!check_sylvester(f)) ++st.failures;
    }
    return st;
}

template <Domain R>
SuiteStats suite_minor_divisibility(Rng& rng, long per_order, const R& like) {
    SuiteStats st;
    for (const std::size_t n : {4u, 6u, 8u}) {
        for (long t = 0; t < per_order; ++t) {
            Matrix<R> m = random_matrix_like<R>(rng, n, like);
            int guard = 0;
            while (guard++ < 64) {
                const auto blk = split_blocks(m);
                if (!is_zero(det_bareiss(blk.a)) && !is_zero(det_bareiss(blk.b))) break;
                m = random_matrix_like<R>(rng, n, like);
            }
            for (std::size_t k = 1; k <= n / 2; ++k) {
                ++st.cases;
                if (!check_f_minor_divisibility(m, k)) ++st.failures;
            }
        }
    }
    return st;
}

int run_selftest(long cases, std::uint64_t seed, const std::string& domain) {
    bool all_ok = true;
    const auto report = [&](const char* suite, const char* dom, const SuiteStats& st) {
        std::cout << "suite " << suite << " domain " << dom << " cases " << st.cases
                  << (st.failures == 0 ? " pass" : " FAIL") << '\n';
        if (st.failures != 0) all_ok = false;
    };
    const bool do_int = domain == "int" || domain == "both";
    const bool do_poly = domain == "poly" || domain == "both";
    const long syl_cases = std::max(1L, cases / 5);
    const long minor_per_order = std::max(1L, cases / 50);

    if (do_int) {
        Rng rng(derive_seed(seed, 1));
        report("column-replacement", "int", suite_column_replacement(rng, cases, Int(0)));
        report("sylvester", "int", suite_sylvester(rng, syl_cases, Int(0)));
        report("minor-divisibility", "int",
               suite_minor_divisibility(rng, minor_per_order, Int(0)));
    }
    if (do_poly) {
        Rng rng(derive_seed(seed, 2));
        report("column-replacement", "poly",
               suite_column_replacement(rng, cases, Polynomial(0)));
        report("sylvester", "poly", suite_sylvester(rng, syl_cases, Polynomial(0)));
        report("minor-divisibility", "poly",
               suite_minor_divisibility(rng, minor_per_order, Polynomial(0)));
    }
    std::cout << (all_ok ? "selftest pass" : "selftest FAIL") << '\n';
    return all_ok ? kExitOk : kExitError;
}

// --- bench -------------------------------------------------------------

std::uint64_t predicted_stages(std::size_t n) {
    std::uint64_t s = 1;
    for (std::size_t k = 2; k < n; k *= 2) s = 2 * s + 3;
    return s;
}

int run_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed) {
    Rng rng(seed);
    for (const std::size_t n : sizes) {
        if (n < 2 || !std::has_single_bit(n)) {
            std::cerr << "adjmat: bench sizes must be powers of two >= 2, got " << n << '\n';
            return kExitError;
        }
        Matrix<Int> a = random_int_matrix(rng, n, 9);
        AdjResult<Int> seq_res;
        for (;;) {
            try {
                const auto t0 = std::chrono::steady_clock::now();
                seq_res = par_adj_with_mode(a, Int(1), ExecMode::sequential);
                const double seq_ms = elapsed_ms(t0);

                const auto t1 = std::chrono::steady_clock::now();
                const AdjResult<Int> par_res =
                    par_adj_with_mode(a, Int(1), ExecMode::parallel);
                const double par_ms = elapsed_ms(t1);

                const bool same =
                    par_res.phi == seq_res.phi && par_res.adj == seq_res.adj;
                std::cout << "bench n " << n << " seq_ms " << std::fixed
                          << std::setprecision(3) << seq_ms << " par_ms " << par_ms
                          << " speedup " << std::setprecision(2)
                          << (par_ms > 0 ? seq_ms / par_ms : 0.0) << " matmul_count "
                          << seq_res.stats.matmul_count << " critical_path_stages "
                          << seq_res.stats.critical_path_stages << " predicted_stages "
                          << predicted_stages(n) << (same ? "" : " MODE-MISMATCH")
                          << '\n';
                std::cout.unsetf(std::ios::fixed);
                break;
            } catch (const DegenerateMinor&) {
                a = random_int_matrix(rng, n, 9);
            }
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact adjugate and determinant of square matrices over big "
                 "integers and integer polynomials"};
    app.require_subcommand(1);

    CommonFlags adj_fl, det_fl;
    long st_cases = 500;
    std::uint64_t st_seed = 0;
    std::string st_domain = "both";
    std::vector<std::size_t> bench_sizes = {4, 8, 16, 32, 64};
    std::uint64_t bench_seed = 0;

    auto* adj = app.add_subcommand("adj", "Adjugate and determinant of a matrix file");
    adj->add_option("input", adj_fl.input, "matrix file")->required();
    adj->add_option("--mode", adj_fl.mode, "execution mode: par or seq")
        ->check(CLI::IsMember({"par", "seq"}));
    adj->add_option("--seed", adj_fl.seed, "preconditioning seed");
    adj->add_option("--retries", adj_fl.retries, "max preconditioning retries")
        ->check(CLI::NonNegativeNumber);
    adj->add_flag("--stats", adj_fl.stats, "print run statistics");
    adj->add_flag("--trace", adj_fl.trace, "print top-level intermediates");
    adj->add_flag("--verify", adj_fl.verify, "check A*adj = det*I, exit 4 on failure");

    auto* det = app.add_subcommand("det", "Determinant of a matrix file");
    det->add_option("input", det_fl.input, "matrix file")->required();
    det->add_option("--mode", det_fl.mode, "execution mode: par or seq")
        ->check(CLI::IsMember({"par", "seq"}));
    det->add_option("--seed", det_fl.seed, "preconditioning seed");
    det->add_option("--retries", det_fl.retries, "max preconditioning retries")
        ->check(CLI::NonNegativeNumber);
    det->add_flag("--stats", det_fl.stats, "print run statistics");
    det->add_flag("--oracle", det_fl.oracle, "use fraction-free elimination instead");

    auto* st = app.add_subcommand("selftest", "Run the algebraic identity suites");
    st->add_option("--cases", st_cases, "cases for the column-replacement suite")
        ->check(CLI::PositiveNumber);
    st->add_option("--seed", st_seed, "random seed");
    st->add_option("--domain", st_domain, "int, poly, or both")
        ->check(CLI::IsMember({"int", "poly", "both"}));

    auto* be = app.add_subcommand("bench", "Time sequential vs parallel execution");
    be->add_option("--sizes", bench_sizes, "matrix orders (powers of two)");
    be->add_option("--seed", bench_seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (adj->parsed())
            return with_matrix_file(adj_fl.input,
                                    [&](const auto& m) { return run_adj(m, adj_fl, false); });
        if (det->parsed())
            return with_matrix_file(det_fl.input,
                                    [&](const auto& m) { return run_adj(m, det_fl, true); });
        if (st->parsed()) return run_selftest(st_cases, st_seed, st_domain);
        if (be->parsed()) return run_bench(bench_sizes, bench_seed);
    } catch (const ParseError& e) {
        std::cerr << "adjmat: parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const DomainMismatch& e) {
        std::cerr << "adjmat: " << e.what() << '\n';
        return kExitParse;
    } catch (const RetriesExhausted& e) {
        std::cerr << "adjmat: " << e.what() << '\n';
        return kExitRetries;
    } catch (const Error& e) {
        std::cerr << "adjmat: " << e.what() << '\n';
        return kExitError;
    }
    return kExitOk;
}
