// Command-line surface: exact coefficient tables, kernel evaluation,
// verification suites, and the Berezin convolution solver. All machine
// output is deterministic: fixed float formatting, canonical term order,
// newline-terminated UTF-8.
//
// Exit codes: 0 success (an expected UNSAT certificate is success),
// 1 check failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "supersol/berezin.hpp"
#include "supersol/json_io.hpp"
#include "supersol/verify.hpp"

using namespace supersol;
using nlohmann::ordered_json;

namespace {

struct OutputTarget {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (text.empty() || text.back() != '\n') std::cout << '\n';
            return;
        }
        std::ofstream os(path, std::ios::binary);
        if (!os) throw Error("cannot open output file '" + path + "'");
        os << text;
        if (text.empty() || text.back() != '\n') os << '\n';
    }
};

std::string csv_escape(const std::string& s) { return s; }  // fields never contain commas

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < header.size(); ++i)
            os << (i ? "," : "") << csv_escape(header[i]);
        os << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << csv_escape(row[i]);
            os << "\n";
        }
        return os.str();
    }
    std::string to_json() const {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json obj;
            for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }
    std::string to_pretty() const {
        std::vector<std::size_t> widths(header.size());
        for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
        for (const auto& row : rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                widths[i] = std::max(widths[i], row[i].size());
        std::ostringstream os;
        auto emit = [&](const std::vector<std::string>& row) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << row[i];
                if (i + 1 < row.size())
                    os << std::string(widths[i] - row[i].size(), ' ') << "  ";
            }
            os << "\n";
        };
        emit(header);
        for (const auto& row : rows) emit(row);
        return os.str();
    }
    std::string render(const std::string& format) const {
        if (format == "csv") return to_csv();
        if (format == "json") return to_json();
        return to_pretty();
    }
};

std::vector<double> parse_grid_spec(const std::string& spec) {
    // "lo:hi:count"
    double lo = 0.0, hi = 0.0;
    int count = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(spec);
    if (!(is >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' || count < 2)
        throw CLI::ValidationError("--grid", "expected lo:hi:count with count >= 2");
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i)
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    return grid;
}

ordered_json load_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open '" + path + "'");
    ordered_json j;
    is >> j;
    return j;
}

// --- coeffs -----------------------------------------------------------------

Table terms_table(int m, int n, int order) {
    FundamentalSolution fs = nu_super(m, n, order);
    Table t;
    t.header = {"m", "n", "order", "alpha", "xvec", "beta", "q", "pi_pow"};
    for (const auto& term : fs.expr.term_list()) {
        t.rows.push_back({std::to_string(m), std::to_string(n), std::to_string(order),
                          std::to_string(term.alpha), term.xvec ? "1" : "0",
                          std::to_string(term.beta), term.c.q().to_string(),
                          std::to_string(term.c.pi_half())});
    }
    return t;
}

Table a_table(int m, int n, int order) {
    if (order % 2 != 0 || order < 2)
        throw Error("the expansion coefficient table is defined for even orders");
    int k = order / 2;
    Table t;
    t.header = {"n", "k", "l", "a", "gamma_q", "gamma_pi_pow"};
    for (int l = 0; l <= n; ++l) {
        Coefficient g = gamma_coeff(m, l + k - 1);
        t.rows.push_back({std::to_string(n), std::to_string(k), std::to_string(l),
                          coeff_a_general(n, k, l).to_string(), g.q().to_string(),
                          std::to_string(g.pi_half())});
    }
    return t;
}

Table gamma_table(int m, int lmax) {
    Table t;
    t.header = {"m", "l", "q", "pi_pow"};
    for (int l = 0; l <= lmax; ++l) {
        Coefficient g = gamma_coeff(m, l);
        t.rows.push_back({std::to_string(m), std::to_string(l), g.q().to_string(),
                          std::to_string(g.pi_half())});
    }
    return t;
}

Table b_table(int kmax, int lmax) {
    Table t;
    t.header = {"k", "l", "b"};
    for (int k = 1; k <= kmax; ++k)
        for (int l = 0; l <= lmax; ++l)
            t.rows.push_back({std::to_string(k), std::to_string(l),
                              coeff_b(k, l).to_string()});
    return t;
}

// --- check ------------------------------------------------------------------

int run_checks(const std::string& suite, int n_opt, int kmax, int lmax,
               std::uint64_t seed, bool timings, const std::string& format,
               const OutputTarget& out) {
    std::vector<CheckReport> reports;
    if (suite == "annihilation") {
        std::vector<int> ms{1, 3, 5, 7}, ns{0, 1, 2, 3}, ks{1, 2, 3};
        if (n_opt >= 0) ns = {n_opt};
        reports = annihilation_suite(ms, ns, ks);
    } else if (suite == "fermionic") {
        std::vector<int> ns{1, 2, 3};
        if (n_opt >= 0) ns = {n_opt};
        for (int n : ns) reports.push_back(fermionic_no_solution(n));
    } else if (suite == "lemma") {
        reports.push_back(lemma_bruteforce(kmax, lmax));
    } else if (suite == "oracle") {
        reports = oracle_equivalence_suite(3, 2, 6, 40, seed);
    } else if (suite == "system") {
        reports.push_back(coefficient_system_check(6, 4));
    } else {
        throw CLI::ValidationError("suite", "unknown suite '" + suite + "'");
    }

    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, timings));
    if (format == "pretty") {
        std::ostringstream os;
        for (const auto& r : reports) {
            os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << " (m=" << r.m
               << ", n=" << r.n << ", k=" << r.k << ")";
            if (!r.detail.empty()) os << "  " << r.detail;
            if (!r.witness.empty()) os << "  witness: " << r.witness;
            os << "\n";
        }
        out.write(os.str());
    } else {
        out.write(arr.dump(2) + "\n");
    }
    return all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact fundamental solutions of the super Laplace and Dirac "
                 "operators on R^{m|2n}"};
    app.require_subcommand(1);

    int m = 3, n = 1, order = 2;
    std::string format = "pretty";
    std::string out_path;
    std::string table = "terms";
    int kmax = 30, lmax = 30;
    std::uint64_t seed = 1;
    bool timings = false;
    double tol = 1e-12;
    double fd_h = 1e-3;
    std::string points_path, rho_path, grid_spec = "-1.5:1.5:21";
    int check_n = -1;

    auto* coeffs = app.add_subcommand("coeffs", "exact coefficient and kernel term tables");
    coeffs->add_option("--m", m, "bosonic dimension (odd)");
    coeffs->add_option("--n", n, "half the fermionic dimension");
    coeffs->add_option("--order", order, "kernel order");
    coeffs->add_option("--table", table, "terms|a|gamma|b");
    coeffs->add_option("--kmax", kmax, "max k for the b table");
    coeffs->add_option("--lmax", lmax, "max l for the gamma/b tables");
    coeffs->add_option("--format", format, "csv|json|pretty");
    coeffs->add_option("--out", out_path, "output file (default stdout)");

    auto* eval = app.add_subcommand("eval", "evaluate a kernel at sample points");
    eval->add_option("--m", m, "bosonic dimension (odd)");
    eval->add_option("--n", n, "half the fermionic dimension");
    eval->add_option("--order", order, "kernel order");
    eval->add_option("--points", points_path, "JSON file: array of m-vectors")->required();
    eval->add_option("--format", format, "json|pretty");
    eval->add_option("--out", out_path, "output file");

    auto* check = app.add_subcommand("check", "run a verification suite");
    std::string suite;
    check->add_option("suite", suite, "annihilation|fermionic|lemma|oracle|system")->required();
    check->add_option("--n", check_n, "restrict to one n");
    check->add_option("--kmax", kmax, "lemma: max k");
    check->add_option("--lmax", lmax, "lemma: max l");
    check->add_option("--seed", seed, "oracle suite seed");
    check->add_flag("--timings", timings, "include elapsed times in the report");
    check->add_option("--format", format, "json|pretty");
    check->add_option("--out", out_path, "output file");

    auto* convolve = app.add_subcommand("convolve", "solve the inhomogeneous equation by "
                                                    "Berezin convolution");
    convolve->add_option("--m", m, "bosonic dimension (must be 1 for the residual)");
    convolve->add_option("--n", n, "half the fermionic dimension");
    convolve->add_option("--order", order, "kernel order (even)");
    convolve->add_option("--rho", rho_path, "JSON source description")->required();
    convolve->add_option("--grid", grid_spec, "lo:hi:count sample grid");
    convolve->add_option("--tol", tol, "quadrature tolerance")
        ->check(CLI::PositiveNumber);
    convolve->add_option("--fd-step", fd_h, "finite-difference step for the residual");
    convolve->add_option("--format", format, "json|pretty");
    convolve->add_option("--out", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    OutputTarget out{out_path};
    try {
        if (coeffs->parsed()) {
            // JSON of the term table is the canonical interchange form of the
            // radial expression itself, not a generic row dump.
            if (table == "terms" && format == "json") {
                out.write(to_json(nu_super(m, n, order).expr).dump(2) + "\n");
                return 0;
            }
            Table t;
            if (table == "terms")
                t = terms_table(m, n, order);
            else if (table == "a")
                t = a_table(m, n, order);
            else if (table == "gamma")
                t = gamma_table(m, lmax);
            else if (table == "b")
                t = b_table(kmax, lmax);
            else
                throw CLI::ValidationError("--table", "unknown table '" + table + "'");
            out.write(t.render(format));
            return 0;
        }
        if (eval->parsed()) {
            FundamentalSolution fs = nu_super(m, n, order);
            ordered_json rows = ordered_json::array();
            bool partial = false;
            for (const auto& pj : load_json_file(points_path)) {
                auto point = pj.get<std::vector<double>>();
                ordered_json row;
                row["point"] = point;
                try {
                    ordered_json sectors = ordered_json::array();
                    for (const auto& s : eval_numeric(fs.expr, point)) {
                        ordered_json sj;
                        sj["xvec"] = s.xvec ? 1 : 0;
                        sj["beta"] = s.beta;
                        sj["value"] = format_double(s.value);
                        if (s.xvec) {
                            ordered_json vec = ordered_json::array();
                            for (double c : s.vector_part) vec.push_back(format_double(c));
                            sj["vector"] = std::move(vec);
                        }
                        sectors.push_back(std::move(sj));
                    }
                    row["sectors"] = std::move(sectors);
                } catch (const SingularityError& e) {
                    row["error"] = e.what();
                    partial = true;
                }
                rows.push_back(std::move(row));
            }
            ordered_json result{{"m", m}, {"n", n}, {"order", order},
                                {"partial", partial}, {"rows", std::move(rows)}};
            out.write(result.dump(2) + "\n");
            return 0;
        }
        if (check->parsed()) return run_checks(suite, check_n, kmax, lmax, seed, timings,
                                               format, out);
        if (convolve->parsed()) {
            FundamentalSolution fs = nu_super(m, n, order);
            SuperTestFunction rho = test_function_from_json(load_json_file(rho_path));
            std::vector<double> grid1d = parse_grid_spec(grid_spec);
            std::vector<std::vector<double>> grid;
            for (double x : grid1d) grid.push_back({x});
            quad::Options opt;
            opt.tol = tol;
            SampledSuperFunction samples = convolve_solve(fs, rho, grid, opt);
            ordered_json result = to_json(samples);
            if (m == 1) {
                std::vector<double> interior(grid1d.begin() + 1, grid1d.end() - 1);
                ResidualReport rr = convolve_residual(fs, rho, interior, fd_h, 1e-3, opt);
                result["residual"] = to_json(rr);
            }
            out.write(result.dump(2) + "\n");
            return 0;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedDimensionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
