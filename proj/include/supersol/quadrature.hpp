#pragma once

#include <functional>
#include <vector>

namespace supersol::quad {

struct Options {
    double tol = 1e-6;        // default target per 1D integral
    int max_depth = 15;       // adaptive refinement depth
    int sphere_azimuth = 56;  // trapezoid nodes on the final circle
};

// Adaptive 1D integral of f over [a, b].
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const Options& opt = {});

// Quadrature nodes and weights on the unit sphere S^{m-1} (m >= 1). For m = 1
// this is the two-point set {+1, -1} with unit weights.
struct SphereRule {
    std::vector<std::vector<double>> nodes;
    std::vector<double> weights;
};
SphereRule sphere_rule(int m, const Options& opt = {});

// Integral over R^m of profile(|x|) * g(x), with g supported in |x| < radius.
// Uses spherical coordinates; the radial factor profile(r) * r^{m-1} must be
// integrable at the origin. For m = 1 the integral splits at the origin so
// even-reflection kinks of the profile do not degrade accuracy.
double integrate_radial_weighted(const std::function<double(double)>& profile,
                                 const std::function<double(const std::vector<double>&)>& g,
                                 int m, double radius, const Options& opt = {});

// Same with an additional finite set of 1D split points (m = 1 only), used
// when the profile has kinks away from the origin.
double integrate_weighted_1d(const std::function<double(double)>& integrand, double lo,
                             double hi, const std::vector<double>& splits,
                             const Options& opt = {});

}  // namespace supersol::quad
