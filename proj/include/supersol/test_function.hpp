#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "supersol/errors.hpp"

namespace supersol {

// One Gaussian bump times a polynomial in t = |x - center|^2. The polynomial
// form is closed under the bosonic Laplace operator (minus the Euclidean
// one), so arbitrary operator powers stay analytic; no finite differences
// anywhere in the test-function layer.
struct GaussianTerm {
    std::vector<double> poly;  // coefficients in t, lowest degree first
    std::vector<double> center;
    double width = 1.0;

    double eval(const std::vector<double>& x) const;

    // Bosonic Laplacian in dimension m: p -> -(m q + 2 t q' - t q / w^2)
    // with q = 2 p' - p / w^2.
    GaussianTerm laplace_b(int m) const;
};

// Smooth compactly-supported-in-practice test function on R^{m|2n}: one
// numeric coefficient function per Grassmann monomial (bitmask over the 2n
// anticommuting variables, bit j-1 for the j-th one).
class SuperTestFunction {
public:
    SuperTestFunction(int m, int n) : m_(m), n_(n) {}

    int m() const { return m_; }
    int n() const { return n_; }
    double support_radius() const { return support_radius_; }
    const std::map<std::uint32_t, std::vector<GaussianTerm>>& sectors() const {
        return sectors_;
    }

    void add_gaussian(std::uint32_t mask, double amplitude, std::vector<double> center,
                      double width);

    double eval_sector(std::uint32_t mask, const std::vector<double>& x) const;
    bool has_sector(std::uint32_t mask) const { return sectors_.count(mask) != 0; }

    // Bosonic Laplace operator applied to every sector (exact formulas).
    SuperTestFunction apply_laplace_b() const;
    // Fermionic Laplace operator: exact Grassmann recombination, each full
    // generator pair inside a monomial drops out with weight -4.
    SuperTestFunction apply_laplace_f() const;
    // Scalar multiple.
    SuperTestFunction scaled(double s) const;
    friend SuperTestFunction operator+(const SuperTestFunction& a, const SuperTestFunction& b);

    // Full super Laplace operator, applied k times.
    SuperTestFunction apply_laplace(int k = 1) const;
    // Shifted operator (bosonic Laplacian - lambda^2) + fermionic Laplacian.
    SuperTestFunction apply_helmholtz(double lambda) const;

private:
    int m_, n_;
    double support_radius_ = 0.0;
    std::map<std::uint32_t, std::vector<GaussianTerm>> sectors_;
};

}  // namespace supersol
