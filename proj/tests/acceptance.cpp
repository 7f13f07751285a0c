// Acceptance suite: runs every project-level criterion at its pinned
// tolerance and prints one PASS/FAIL line per criterion. Exit code is the
// number of failed criteria.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "supersol/berezin.hpp"
#include "supersol/verify.hpp"

using namespace supersol;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

const std::vector<int> kGridM{1, 3, 5, 7};
const std::vector<int> kGridN{0, 1, 2, 3};
const std::vector<int> kGridK{1, 2, 3};

// 1. Exact annihilation over the full grid, zero tolerance.
void criterion_1() {
    auto reports = annihilation_suite(kGridM, kGridN, kGridK);
    bool pass = all_pass(reports);
    std::string detail = std::to_string(reports.size()) + " (m,n,k) triples, exact";
    for (const auto& r : reports)
        if (!r.pass) detail = "first failure at m=" + std::to_string(r.m) +
                              " n=" + std::to_string(r.n) + " k=" + std::to_string(r.k) +
                              ": " + r.witness;
    report(1, "exact annihilation of both kernel families", pass, detail);
}

// 2. Order relations and the lowest-order coincidences, exact.
void criterion_2() {
    bool pass = true;
    std::string detail = "exact";
    for (int m : kGridM) {
        for (int n : kGridN) {
            for (int k : kGridK) {
                if (k >= 2 && !(radial_laplace(nu_super(m, n, 2 * k).expr) ==
                                nu_super(m, n, 2 * k - 2).expr)) {
                    pass = false;
                    detail = "Laplace descent fails at m=" + std::to_string(m) +
                             " n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
                if (!(radial_dirac(nu_super(m, n, 2 * k + 2).expr) ==
                      nu_super(m, n, 2 * k + 1).expr)) {
                    pass = false;
                    detail = "Dirac descent fails at m=" + std::to_string(m) +
                             " n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
            }
            if (!(laplace_power_kernel(m, n, 1) == laplace_kernel_direct(m, n)) ||
                !(dirac_power_kernel(m, n, 0) == dirac_kernel_direct(m, n))) {
                pass = false;
                detail = "lowest-order coincidence fails at m=" + std::to_string(m) +
                         " n=" + std::to_string(n);
            }
        }
    }
    report(2, "order relations and lowest-order coincidences", pass, detail);
}

// 3. Radial rules agree with the coordinate algebra; power identities.
void criterion_3() {
    bool pass = true;
    std::string detail;
    long cases = 0;
    for (int m = 1; m <= 3 && pass; ++m) {
        for (int n = 0; n <= 2 && pass; ++n) {
            for (int alpha = 0; alpha <= 6 && pass; alpha += 2) {
                for (int xvec = 0; xvec <= 1 && pass; ++xvec) {
                    for (int beta = 0; beta <= 2 * n && pass; ++beta) {
                        RadialExpr e = RadialExpr::term(m, n, Coefficient(Rational(1)),
                                                        alpha, xvec != 0, beta);
                        SuperElement coords = to_coordinates(e);
                        ++cases;
                        if (!(to_coordinates(radial_dirac(e)) == dirac(coords)) ||
                            !(to_coordinates(radial_laplace(e)) == laplace(coords))) {
                            pass = false;
                            detail = "mismatch at m=" + std::to_string(m) +
                                     " n=" + std::to_string(n) +
                                     " alpha=" + std::to_string(alpha) +
                                     " xvec=" + std::to_string(xvec) +
                                     " beta=" + std::to_string(beta);
                        }
                    }
                }
            }
            if (m + n == 0) continue;
            SuperElement x = vector_variable(m, n);
            long M = m - 2 * n;
            for (int s = 0; s <= 4 && pass; ++s) {
                SuperElement even = pow(x, 2 * s);
                SuperElement odd = pow(x, 2 * s + 1);
                ++cases;
                SuperElement even_expect =
                    (s == 0) ? SuperElement::zero(m, n)
                             : SuperElement::scalar(m, n, Coefficient(Rational(2 * s))) *
                                   pow(x, 2 * s - 1);
                if (!(dirac(even) == even_expect)) {
                    pass = false;
                    detail = "even power identity fails at s=" + std::to_string(s);
                }
                if (!(dirac(odd) ==
                      SuperElement::scalar(m, n, Coefficient(Rational(M + 2 * s))) * even)) {
                    pass = false;
                    detail = "odd power identity fails at s=" + std::to_string(s);
                }
            }
        }
    }
    if (pass) detail = std::to_string(cases) + " exact comparisons";
    report(3, "radial calculus matches the coordinate oracle", pass, detail);
}

// 4. Closed form of the auxiliary sequence vs. its recurrence, k, l <= 30.
void criterion_4() {
    CheckReport rep = lemma_bruteforce(30, 30);
    report(4, "auxiliary sequence closed form (k, l <= 30)", rep.pass,
           rep.pass ? std::to_string(rep.term_count) + " exact values" : rep.witness);
}

// 5. The coefficient linear system annihilates for 1 <= l <= n.
void criterion_5() {
    CheckReport rep = coefficient_system_check(6, 4);
    report(5, "expansion coefficients solve the linear system (n <= 6, k <= 4)", rep.pass,
           rep.pass ? std::to_string(rep.term_count) + " rows, exact" : rep.witness);
}

std::vector<SuperTestFunction> battery(int m, int n) {
    std::vector<double> origin(m, 0.0);
    auto off = [&](double v) {
        std::vector<double> c(m, 0.0);
        c[0] = v;
        return c;
    };
    const std::uint32_t top = (n == 0) ? 0u : ((1u << (2 * n)) - 1u);

    std::vector<SuperTestFunction> fns;
    {
        SuperTestFunction f(m, n);
        f.add_gaussian(0, 1.0, origin, 1.0);
        fns.push_back(f);
    }
    {
        SuperTestFunction f(m, n);
        f.add_gaussian(0, 1.0, origin, 1.0);
        f.add_gaussian(top, 1.0, origin, 1.0);
        fns.push_back(f);
    }
    {
        SuperTestFunction f(m, n);
        f.add_gaussian(0, 1.2, off(0.4), 0.8);
        f.add_gaussian(top, -0.6, off(-0.2), 1.1);
        fns.push_back(f);
    }
    {
        SuperTestFunction f(m, n);
        f.add_gaussian(0, 0.9, origin, 0.6);
        if (n >= 1) f.add_gaussian(0b01u, 0.5, off(0.3), 0.9);
        if (n >= 2) {
            f.add_gaussian(0b0011u, 0.4, off(-0.3), 1.0);
            f.add_gaussian(0b0101u, -0.8, origin, 0.7);
        }
        fns.push_back(f);
    }
    {
        SuperTestFunction f(m, n);
        f.add_gaussian(0, 0.7, off(0.5), 0.9);
        f.add_gaussian(0, 0.5, off(-0.5), 0.7);
        if (n >= 1) f.add_gaussian(top, 0.8, off(0.1), 0.8);
        if (n >= 2) f.add_gaussian(0b1100u, 0.6, origin, 0.9);
        fns.push_back(f);
    }
    return fns;
}

// 6. Distributional reproduction of test functions.
void criterion_6() {
    struct Config { int m, n; };
    bool pass = true;
    std::string detail;
    double worst2 = 0.0, worst4 = 0.0;
    for (Config cfg : {Config{1, 1}, {3, 1}, {3, 2}}) {
        auto fns = battery(cfg.m, cfg.n);
        auto rep2 = distributional_check(nu_super(cfg.m, cfg.n, 2), fns, 1e-4);
        auto rep4 = distributional_check(nu_super(cfg.m, cfg.n, 4), fns, 1e-3);
        for (const auto& e : rep2.entries) worst2 = std::max(worst2, e.rel_error);
        for (const auto& e : rep4.entries) worst4 = std::max(worst4, e.rel_error);
        if (!rep2.pass || !rep4.pass) {
            pass = false;
            detail = "failure at m=" + std::to_string(cfg.m) + " n=" + std::to_string(cfg.n);
        }
    }
    if (pass) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "worst rel err: order2 %.2e (tol 1e-4), order4 %.2e (tol 1e-3)",
                      worst2, worst4);
        detail = buf;
    }
    report(6, "distributional delta against Gaussian batteries", pass, detail);
}

// 7. Convolution solver residual at m = 1, n = 1.
void criterion_7() {
    FundamentalSolution nu = nu_super(1, 1, 2);
    SuperTestFunction rho(1, 1);
    rho.add_gaussian(0b11, 1.0, {0.0}, 0.5);
    rho.add_gaussian(0, 0.8, {0.2}, 0.6);
    std::vector<double> interior;
    for (int i = 0; i <= 20; ++i) interior.push_back(-1.0 + 0.1 * i);
    quad::Options opt;
    opt.tol = 1e-12;
    auto rep = convolve_residual(nu, rho, interior, 1e-3, 1e-3, opt);
    char buf[96];
    std::snprintf(buf, sizeof buf, "max rel residual %.2e at h = 1e-3 (tol 1e-3)",
                  rep.max_rel_residual);
    report(7, "convolution solves the inhomogeneous equation", rep.pass, buf);
}

// 8. Constant ratio between the binomial expansion and kernel coefficients.
void criterion_8() {
    bool pass = true;
    std::string detail = "exact ratios";
    for (int m : {3, 5, 7})
        for (int n = 0; n <= 3; ++n) {
            auto rep = radial_ansatz_check(m, n);
            if (!rep.pass) {
                pass = false;
                detail = "ratio drifts at m=" + std::to_string(m) + " n=" + std::to_string(n);
            }
        }
    report(8, "radial-algebra expansion is proportional termwise", pass, detail);
}

// 9. Purely fermionic infeasibility with rank certificates; solvable sanity.
void criterion_9() {
    bool pass = true;
    std::string detail;
    for (int n : {1, 2, 3}) {
        CheckReport rep = fermionic_no_solution(n);
        if (!rep.pass) {
            pass = false;
            detail = "expected UNSAT at n=" + std::to_string(n);
        } else {
            detail += (detail.empty() ? "" : "; ") + rep.detail;
        }
    }
    {
        int n = 2;
        std::vector<Rational> target(1u << (2 * n), Rational(0));
        target[0b0011] = Rational(1);
        target[0b1100] = Rational(1);
        auto res = fermionic_solve(n, target);
        if (!res.sat) {
            pass = false;
            detail = "degree-2 modified target unexpectedly UNSAT";
        } else {
            detail += "; degree-2 target SAT";
        }
    }
    report(9, "purely fermionic case has no fundamental solution", pass, detail);
}

// 10. Generalized construction: degenerate case and the shifted operator.
void criterion_10() {
    bool pass = true;
    std::string detail;
    for (int m : {1, 3, 5}) {
        RadialKernelSeq seq;
        seq.m = m;
        seq.mu = [m](int k) { return nu_classical(m, 2 * k); };
        seq.L = [](const RadialExpr& e) { return radial_laplace_b(e); };
        for (int n = 0; n <= 2; ++n)
            for (int k = 1; k <= 2; ++k)
                if (!(generalized_fundsol(seq, n, k) == nu_super(m, n, 2 * k).expr)) {
                    pass = false;
                    detail = "degenerate case mismatch at m=" + std::to_string(m) +
                             " n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
    }
    double worst = 0.0;
    if (pass) {
        const double lambda = 1.0;
        NumericSuperKernel kernel = generalized_fundsol_numeric(helmholtz_seq_1d(lambda), 1, 1);
        auto fns = battery(1, 1);
        auto rep = distributional_check_generalized(
            kernel_profiles(kernel),
            [lambda](const SuperTestFunction& phi) { return phi.apply_helmholtz(lambda); },
            fns, 1e-3);
        for (const auto& e : rep.entries) worst = std::max(worst, e.rel_error);
        if (!rep.pass) {
            pass = false;
            detail = "shifted-operator pairing exceeded 1e-3";
        }
    }
    if (pass) {
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "degenerate case exact; shifted-operator worst rel err %.2e", worst);
        detail = buf;
    }
    report(10, "generalized operator family", pass, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%s: %d/10 criteria passed\n", g_failures == 0 ? "OK" : "FAILURES",
                10 - g_failures);
    return g_failures;
}
