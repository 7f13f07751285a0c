#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "supersol/fundsol.hpp"
#include "supersol/quadrature.hpp"
#include "supersol/test_function.hpp"

namespace supersol {

// ---------------------------------------------------------------------------
// Berezin integral over R^{m|2n}: Lebesgue integration composed with the
// Grassmann derivatives d_{xg_2n} ... d_{xg_1}, the innermost (first) one
// being d_{xg_1}. With that ordering the integral of the full monomial
// xg_1...xg_2n is +1 and the super Dirac delta reproduces test functions
// with coefficient +1.
// ---------------------------------------------------------------------------

// Top-coefficient extraction of (fermionic vector)^beta * (monomial mask):
// the exact rational weight with which the pair contributes the full
// Grassmann monomial; zero unless the mask complement consists of whole
// generator pairs of total size beta. beta must be even.
Rational wedge_top_coefficient(int n, int beta, std::uint32_t mask);

// Berezin integral of a test function, optionally against a radial weight
// r^weight_alpha. Throws DivergenceError when the weighted top coefficient
// is not integrable (weight_alpha + m - 1 < 0).
double berezin_integral(const SuperTestFunction& f, int weight_alpha = 0,
                        const quad::Options& opt = {});

// Full Berezin pairing of two test functions (used for the operator-symmetry
// checks): integral of the product, top Grassmann sector extracted exactly.
double berezin_pair(const SuperTestFunction& u, const SuperTestFunction& v,
                    const quad::Options& opt = {});

// Super Dirac distribution centered at a bosonic point; the Grassmann shift
// is formal and enters only through the doubled-algebra expansion below.
struct SuperDelta {
    std::vector<double> center;
};

// <delta(x - y), f(x)> = f(y): per Grassmann sector, the coefficient
// function evaluated at the bosonic point y. No quadrature involved; the
// underlying Grassmann-shift identity is established symbolically by
// delta_pair_symbolic below and exercised in the test suite.
std::map<std::uint32_t, double> delta_pair(const SuperTestFunction& f,
                                           const std::vector<double>& y);
std::map<std::uint32_t, double> delta_pair(const SuperTestFunction& f, const SuperDelta& d);

// The same pairing carried out with formal Grassmann shifts in the doubled
// algebra (2n + 2n generators), with exact rational stand-ins for the sector
// values. Returns the resulting per-shift-monomial coefficients, which must
// reproduce the stand-ins exactly.
std::map<std::uint32_t, Rational> delta_pair_symbolic(
    int n, const std::map<std::uint32_t, Rational>& sector_values);

// Scalar-sector pairing against a normalized Gaussian mollifier of width
// sigma centered at y; converges to delta_pair's scalar value at rate sigma^2.
double delta_pair_mollified(const SuperTestFunction& f, const std::vector<double>& y,
                            double sigma, const quad::Options& opt = {});

// --- kernels as per-sector radial profiles ----------------------------------

struct KernelProfiles {
    int m = 0, n = 0;
    struct Sector {
        int beta = 0;
        std::function<double(double)> profile;  // radial factor at r > 0
    };
    std::vector<Sector> sectors;
};

// Profiles of a closed-form kernel. Requires a kernel without bosonic vector
// factors (even orders); checks integrability of each power at the origin.
KernelProfiles kernel_profiles(const RadialExpr& e);
KernelProfiles kernel_profiles(const NumericSuperKernel& k);

// Berezin pairing of a kernel with an (already operator-applied) test
// function: exact fermionic combinatorics, bosonic quadrature in spherical
// coordinates.
double berezin_pair_kernel(const KernelProfiles& kernel, const SuperTestFunction& psi,
                           const quad::Options& opt = {});

// --- distributional verification ---------------------------------------------

struct PairingEntry {
    double value = 0.0;
    double target = 0.0;
    double rel_error = 0.0;
    bool pass = false;
};
struct PairingReport {
    std::vector<PairingEntry> entries;
    double tolerance = 0.0;
    bool pass = false;
};

// For an order-2k kernel: <kernel, Laplace^k phi> must equal the scalar
// coefficient of phi at the origin, within tol (relative).
PairingReport distributional_check(const FundamentalSolution& candidate,
                                   const std::vector<SuperTestFunction>& battery,
                                   double tol, const quad::Options& opt = {});

// Same pairing with a caller-supplied operator in place of the Laplacian
// (the generalized kernels of the L + fermionic-Laplacian family).
PairingReport distributional_check_generalized(
    const KernelProfiles& kernel,
    const std::function<SuperTestFunction(const SuperTestFunction&)>& apply_operator,
    const std::vector<SuperTestFunction>& battery, double tol,
    const quad::Options& opt = {});

// --- convolution solver -------------------------------------------------------

struct SampledSuperFunction {
    int m = 0, n = 0;
    std::vector<std::vector<double>> grid;
    std::map<std::uint32_t, std::vector<double>> sectors;
};

// Evaluate (kernel * rho)(x) by Berezin convolution: the Grassmann shift of
// the kernel is expanded exactly in the doubled algebra, the bosonic factor
// integrated by quadrature.
std::map<std::uint32_t, double> convolve_eval(const FundamentalSolution& nu,
                                              const SuperTestFunction& rho,
                                              const std::vector<double>& point,
                                              const quad::Options& opt = {});

SampledSuperFunction convolve_solve(const FundamentalSolution& nu,
                                    const SuperTestFunction& rho,
                                    const std::vector<std::vector<double>>& grid,
                                    const quad::Options& opt = {});

// Residual Laplace(f) - rho on interior grid points: bosonic part by central
// finite differences with step h (m = 1), fermionic part exact. Residuals are
// reported relative to the largest source amplitude on the grid.
struct ResidualReport {
    double max_rel_residual = 0.0;
    double h = 0.0;
    bool pass = false;
    double tolerance = 0.0;
};
ResidualReport convolve_residual(const FundamentalSolution& nu, const SuperTestFunction& rho,
                                 const std::vector<double>& grid_1d, double h, double tol,
                                 const quad::Options& opt = {});

}  // namespace supersol
