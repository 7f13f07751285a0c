#include "supersol/verify.hpp"

#include <bit>
#include <chrono>
#include <random>
#include <sstream>

#include "supersol/errors.hpp"
#include "supersol/super_element.hpp"

namespace supersol {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string first_term_witness(const RadialExpr& e) {
    if (e.is_zero()) return "";
    auto t = e.term_list().front();
    std::ostringstream os;
    os << "(" << t.c.to_string() << ") r^" << t.alpha << (t.xvec ? " xv" : "") << " xgv^"
       << t.beta;
    return os.str();
}

// Dense exact Gauss-Jordan; returns rank and, when solving, a particular
// solution of A x = b if one exists.
struct EliminationResult {
    int rank = 0;
    bool consistent = true;
    std::vector<Rational> solution;
};

EliminationResult eliminate(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                            bool solve) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivot_col_of_row;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        std::swap(b[pivot], b[rank]);
        Rational inv = Rational(1) / a[rank][col];
        for (int c = col; c < cols; ++c) a[rank][c] *= inv;
        b[rank] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (int c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
            b[r] -= f * b[rank];
        }
        pivot_col_of_row.push_back(col);
        ++rank;
    }
    EliminationResult res;
    res.rank = rank;
    for (int r = rank; r < rows; ++r)
        if (!b[r].is_zero()) res.consistent = false;
    if (solve && res.consistent) {
        res.solution.assign(cols, Rational(0));
        for (int r = 0; r < rank; ++r) res.solution[pivot_col_of_row[r]] = b[r];
    }
    return res;
}

// Matrix of the fermionic Laplacian on the Grassmann polynomial basis of
// 2n variables: each whole generator pair inside a monomial folds out with
// weight -4.
std::vector<std::vector<Rational>> fermionic_laplace_matrix(int n) {
    const std::uint32_t dim = 1u << (2 * n);
    std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(dim, Rational(0)));
    for (std::uint32_t col = 0; col < dim; ++col) {
        for (int j = 0; j < n; ++j) {
            std::uint32_t pair = 0x3u << (2 * j);
            if ((col & pair) == pair) a[col & ~pair][col] += Rational(-4);
        }
    }
    return a;
}

}  // namespace

bool all_pass(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

std::vector<CheckReport> annihilation_suite(const std::vector<int>& ms,
                                            const std::vector<int>& ns,
                                            const std::vector<int>& ks) {
    std::vector<CheckReport> out;
    for (int m : ms) {
        for (int n : ns) {
            for (int k : ks) {
                auto t0 = Clock::now();
                CheckReport rep;
                rep.id = "annihilation";
                rep.m = m;
                rep.n = n;
                rep.k = k;

                FundamentalSolution even = nu_super(m, n, 2 * k);
                RadialExpr acc = even.expr;
                rep.term_count = static_cast<long>(acc.terms().size());
                for (int i = 0; i < k; ++i) acc = radial_laplace(acc);
                bool even_ok = acc.is_zero();

                FundamentalSolution odd = nu_super(m, n, 2 * k + 1);
                RadialExpr dacc = odd.expr;
                for (int i = 0; i < 2 * k + 1; ++i) dacc = radial_dirac(dacc);
                bool odd_ok = dacc.is_zero();

                rep.pass = even_ok && odd_ok;
                if (!even_ok)
                    rep.witness = "Laplace^k residue: " + first_term_witness(acc);
                else if (!odd_ok)
                    rep.witness = "Dirac^(2k+1) residue: " + first_term_witness(dacc);
                rep.elapsed_ms = ms_since(t0);
                out.push_back(std::move(rep));
            }
        }
    }
    return out;
}

FermionicSolveResult fermionic_solve(int n, const std::vector<Rational>& target) {
    if (n < 1) throw Error("fermionic_solve: need n >= 1");
    const std::uint32_t dim = 1u << (2 * n);
    if (target.size() != dim) throw Error("fermionic_solve: target has wrong dimension");
    auto a = fermionic_laplace_matrix(n);
    std::vector<Rational> b = target;

    FermionicSolveResult res;
    res.rank = eliminate(a, std::vector<Rational>(dim, Rational(0)), false).rank;
    auto solved = eliminate(a, b, true);
    res.rank_augmented = res.rank + (solved.consistent ? 0 : 1);
    res.sat = solved.consistent;
    if (res.sat) res.solution = std::move(solved.solution);
    return res;
}

CheckReport fermionic_no_solution(int n) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.id = "fermionic-no-solution";
    rep.n = n;
    const std::uint32_t dim = 1u << (2 * n);
    std::vector<Rational> top(dim, Rational(0));
    top[dim - 1] = Rational(1);  // the full monomial xg_1...xg_2n
    auto res = fermionic_solve(n, top);
    rep.term_count = static_cast<long>(dim);
    rep.pass = !res.sat;  // infeasibility is the expected outcome
    std::ostringstream os;
    os << (res.sat ? "SAT" : "UNSAT") << ": rank(A) = " << res.rank
       << ", rank([A|b]) = " << res.rank_augmented << ", dim = " << dim;
    rep.detail = os.str();
    if (res.sat) rep.witness = "unexpected solution found";
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

CheckReport lemma_bruteforce(int k_max, int l_max) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.id = "lemma-closed-form";
    rep.k = k_max;
    rep.pass = true;
    for (int k = 1; k <= k_max && rep.pass; ++k) {
        for (int l = 0; l <= l_max; ++l) {
            ++rep.term_count;
            if (coeff_b(k, l) != coeff_b_bruteforce(k, l)) {
                rep.pass = false;
                rep.witness = "k = " + std::to_string(k) + ", l = " + std::to_string(l);
                break;
            }
        }
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

std::vector<CheckReport> oracle_equivalence_suite(int m_max, int n_max, int degree_max,
                                                  int trials, std::uint64_t seed) {
    std::vector<CheckReport> out;
    std::mt19937_64 rng(seed);
    for (int m = 1; m <= m_max; ++m) {
        for (int n = 0; n <= n_max; ++n) {
            auto t0 = Clock::now();
            CheckReport rep;
            rep.id = "oracle-equivalence";
            rep.m = m;
            rep.n = n;
            rep.pass = true;
            rep.detail = "seed = " + std::to_string(seed);

            std::uniform_int_distribution<int> alpha_dist(0, degree_max / 2);
            std::uniform_int_distribution<int> beta_dist(0, 2 * n);
            std::uniform_int_distribution<int> bit(0, 1);
            std::uniform_int_distribution<int> num(-6, 6);

            for (int t = 0; t < trials && rep.pass; ++t) {
                RadialExpr e(m, n);
                int nterms = 1 + static_cast<int>(rng() % 3);
                for (int i = 0; i < nterms; ++i) {
                    int q = num(rng);
                    if (q == 0) q = 1;
                    e.add_term(2 * alpha_dist(rng), bit(rng) != 0, beta_dist(rng),
                               Coefficient(Rational(q, 1 + (i % 3))));
                }
                ++rep.term_count;
                SuperElement coords = to_coordinates(e);
                bool dirac_ok = to_coordinates(radial_dirac(e)) == dirac(coords);
                bool lap_ok = to_coordinates(radial_laplace(e)) == laplace(coords);
                bool lapb_ok = to_coordinates(radial_laplace_b(e)) == laplace_bosonic(coords);
                bool lapf_ok = to_coordinates(radial_laplace_f(e)) == laplace_fermionic(coords);
                if (!(dirac_ok && lap_ok && lapb_ok && lapf_ok)) {
                    rep.pass = false;
                    rep.witness = "trial " + std::to_string(t) + ": " + e.to_string();
                }
            }
            rep.elapsed_ms = ms_since(t0);
            out.push_back(std::move(rep));
        }
    }
    return out;
}

CheckReport coefficient_system_check(int n_max, int k_max) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.id = "coefficient-linear-system";
    rep.n = n_max;
    rep.k = k_max;
    rep.pass = true;
    for (int n = 0; n <= n_max && rep.pass; ++n) {
        for (int k = 1; k <= k_max && rep.pass; ++k) {
            for (int l = 1; l <= n; ++l) {
                // sum_j a_{l-j} binom(k,j) 4^j (-1)^j (n-l+j)!/(n-l)! l!/(l-j)! = 0
                Rational s(0);
                for (int j = 0; j <= std::min(k, l); ++j) {
                    Rational t = coeff_a_general(n, k, l - j) * binomial(k, j) *
                                 pow_rational(Rational(4), j) *
                                 (factorial(n - l + j) / factorial(n - l)) *
                                 (factorial(l) / factorial(l - j));
                    s += (j & 1) ? -t : t;
                }
                ++rep.term_count;
                if (!s.is_zero()) {
                    rep.pass = false;
                    rep.witness = "n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                                  ", l = " + std::to_string(l) + ": sum = " + s.to_string();
                    break;
                }
            }
        }
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

}  // namespace supersol
