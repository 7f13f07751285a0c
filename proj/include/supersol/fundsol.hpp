#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "supersol/radial.hpp"

namespace supersol {

// ---------------------------------------------------------------------------
// Closed-form fundamental solutions. Kernel orders are indexed so that order
// 2k is a fundamental solution of the k-th power of the super Laplace
// operator and order 2k+1 one of that power composed with the super Dirac
// operator. Even bosonic dimension m is rejected by all closed-form
// constructors; the generalized interface accepts caller-supplied sequences
// so other base kernels can be plugged in without API changes.
// ---------------------------------------------------------------------------

// Gamma(z) at half-integer z = twice_z/2 as (rational) * sqrt(pi)^(twice_z odd).
// Exact recursion, no floating point. twice_z must not be a non-positive
// even value (pole).
Coefficient gamma_half_integer(int twice_z);

// Normalization constants of the classical polyharmonic kernels, odd m only:
// gamma_l = (-1)^{l+1} (2-m) 4^l l! * [G(l+2-m/2)/G(2-m/2)] * [2 pi^{m/2}/G(m/2)].
// For odd m this is an exact rational times an integer power of pi.
Coefficient gamma_coeff(int m, int l);

// Classical kernels on R^m, m odd:
//   order 2l   ->  r^{2l-m} / gamma_{l-1}
//   order 2l+1 ->  the bosonic vector derivative of the order 2l+2 kernel.
RadialExpr nu_classical(int m, int order);

// Pre-populated table of classical kernels up to a maximal order; immutable
// after construction, so concurrent readers need no locking.
class ClassicalFundSeq {
public:
    ClassicalFundSeq(int m, int max_order);
    int m() const { return m_; }
    const RadialExpr& at(int order) const;

private:
    int m_;
    std::map<int, RadialExpr> entries_;
};

// First-order coefficients a_k = 4^k k!/(n-k)! (0 <= k <= n) and the same
// values generated by the recurrence a_k = 4k(n-k+1) a_{k-1}, a_0 = 1/n!.
Rational coeff_a(int n, int k);
Rational coeff_a_recurrence(int n, int k);

// Higher-order coefficients a_l = 4^l (l+k-1)!/((n-l)!(k-1)!), k >= 1.
Rational coeff_a_general(int n, int k, int l);

// b_l = binom(l+k-1, l) in closed form and via its defining recurrence
// sum_{j<=min(k,l)} b_{l-j} binom(k,j) (-1)^j = 0, b_0 = 1.
Rational coeff_b(int k, int l);
Rational coeff_b_bruteforce(int k, int l);

struct FundamentalSolution {
    int m = 0;
    int n = 0;
    int order = 0;
    RadialExpr expr;
    std::string provenance;  // which construction produced it
};

// The individual closed forms, kept as separate code paths so the stated
// coincidences (general construction at lowest order vs. the first-order
// formulas) are real checks rather than tautologies.
RadialExpr laplace_kernel_direct(int m, int n);
RadialExpr dirac_kernel_direct(int m, int n);
RadialExpr laplace_power_kernel(int m, int n, int k);
RadialExpr dirac_power_kernel(int m, int n, int k);

// Fundamental solution of the given order on R^{m|2n}. Odd orders compute
// both the closed form and the Dirac derivative of the next even order and
// insist they agree exactly; the closed form is returned.
FundamentalSolution nu_super(int m, int n, int order);

// Termwise comparison between the binomial expansion of 1/(x^2)^{(M-2)/2}
// and the first-order kernel coefficients. The global factor is a fixed
// phase, so the test is that all termwise ratios agree exactly.
struct RadialAnsatzReport {
    int m = 0, n = 0;
    std::vector<Coefficient> kernel_coeffs;   // matched to descending fermionic power
    std::vector<Rational> binomial_coeffs;    // binom(1-M/2, n-k) * (-1)^k
    std::vector<Coefficient> ratios;
    bool pass = false;
};
RadialAnsatzReport radial_ansatz_check(int m, int n);

// --- generalized operators L + fermionic Laplacian --------------------------

// Radial flavor: kernels and the operator L both act on radial expressions.
struct RadialKernelSeq {
    int m = 0;
    std::function<RadialExpr(int k)> mu;  // kernel of order 2k, k >= 1
    std::function<RadialExpr(const RadialExpr&)> L;
};

// Checks L(mu_{2j}) = mu_{2j-2} for 2 <= j <= n+k and L(mu_2) = 0 away from
// the origin, then assembles sum_l a_l mu_{2(l+k)} xgv^{2n-2l}. Throws
// ContractViolationError carrying the first failing order.
RadialExpr generalized_fundsol(const RadialKernelSeq& seq, int n, int k);

// Numeric flavor: radial profiles mu_{2k}(r) plus the pointwise action of L
// on them, checked on sample radii away from the origin.
struct NumericKernelSeq {
    int m = 0;
    std::function<double(int k, double r)> mu;
    std::function<double(int k, double r)> L_mu;  // L applied to mu_{2k}, at r
};

struct NumericSuperKernel {
    int m = 0, n = 0, k = 0;
    struct Component {
        Rational a;
        int classical_order = 0;  // 2(l+k)
        int beta = 0;             // 2n-2l
    };
    std::vector<Component> components;
    NumericKernelSeq seq;

    // Radial profile of the requested fermionic-power sector.
    double sector_profile(int beta, double r) const;
    std::vector<int> sector_betas() const;
};

NumericSuperKernel generalized_fundsol_numeric(const NumericKernelSeq& seq, int n, int k,
                                               double check_tol = 1e-4);

// Built-in numeric sequence for the shifted operator (bosonic Laplacian
// minus lambda^2) on the real line:
//   mu_2(x) = -sin(lambda |x|) / (2 lambda)
//   mu_4(x) = sin(lambda |x|) / (4 lambda^3) - |x| cos(lambda |x|) / (4 lambda^2)
// The pointwise descent is exposed through L_mu for the contract check.
NumericKernelSeq helmholtz_seq_1d(double lambda);

}  // namespace supersol
