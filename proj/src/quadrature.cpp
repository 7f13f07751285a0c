#include "supersol/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>

#include "supersol/errors.hpp"

namespace supersol::quad {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

double integrate_gk(const std::function<double(double)>& f, double a, double b,
                    const Options& opt) {
    if (a == b) return 0.0;
    double err = 0.0;
    double v = GK::integrate(f, a, b, opt.max_depth, opt.tol, &err);
    if (!std::isfinite(v))
        throw DivergenceError("quadrature: non-finite integral value");
    if (err > 1e-4 * std::max(1.0, std::abs(v)))
        throw DivergenceError("quadrature: failed to converge (error estimate " +
                              std::to_string(err) + ")");
    return v;
}

}  // namespace

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const Options& opt) {
    return integrate_gk(f, a, b, opt);
}

double integrate_weighted_1d(const std::function<double(double)>& integrand, double lo,
                             double hi, const std::vector<double>& splits,
                             const Options& opt) {
    std::vector<double> cuts{lo, hi};
    for (double s : splits)
        if (s > lo && s < hi) cuts.push_back(s);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += integrate_gk(integrand, cuts[i], cuts[i + 1], opt);
    return total;
}

SphereRule sphere_rule(int m, const Options& opt) {
    if (m < 1) throw Error("sphere_rule: need m >= 1");
    SphereRule rule;
    if (m == 1) {
        rule.nodes = {{1.0}, {-1.0}};
        rule.weights = {1.0, 1.0};
        return rule;
    }
    if (m == 2) {
        int nphi = opt.sphere_azimuth;
        double w = 2.0 * M_PI / nphi;
        for (int i = 0; i < nphi; ++i) {
            double phi = w * i;
            rule.nodes.push_back({std::cos(phi), std::sin(phi)});
            rule.weights.push_back(w);
        }
        return rule;
    }
    // Recursive product rule over the polar angle: x = (cos t, sin t * y)
    // with y on S^{m-2} and measure sin^{m-2} t dt. The integrand is analytic
    // in t, so Gauss-Legendre converges spectrally for every m.
    SphereRule sub = sphere_rule(m - 1, opt);
    using GL = boost::math::quadrature::gauss<double, 32>;
    const auto& abscissa = GL::abscissa();  // nonnegative half of the nodes
    const auto& gl_w = GL::weights();
    std::vector<std::pair<double, double>> tnodes;  // on [0, pi]
    for (std::size_t i = 0; i < abscissa.size(); ++i) {
        tnodes.emplace_back(0.5 * M_PI * (1.0 + abscissa[i]), 0.5 * M_PI * gl_w[i]);
        if (abscissa[i] != 0.0)
            tnodes.emplace_back(0.5 * M_PI * (1.0 - abscissa[i]), 0.5 * M_PI * gl_w[i]);
    }
    for (const auto& [t, wt] : tnodes) {
        double c = std::cos(t), s = std::sin(t);
        double jac = std::pow(s, m - 2);
        for (std::size_t j = 0; j < sub.nodes.size(); ++j) {
            std::vector<double> x;
            x.reserve(m);
            x.push_back(c);
            for (double y : sub.nodes[j]) x.push_back(s * y);
            rule.nodes.push_back(std::move(x));
            rule.weights.push_back(wt * jac * sub.weights[j]);
        }
    }
    return rule;
}

double integrate_radial_weighted(const std::function<double(double)>& profile,
                                 const std::function<double(const std::vector<double>&)>& g,
                                 int m, double radius, const Options& opt) {
    if (m == 1) {
        auto f = [&](double x) { return profile(std::abs(x)) * g({x}); };
        return integrate_weighted_1d(f, -radius, radius, {0.0}, opt);
    }
    SphereRule rule = sphere_rule(m, opt);
    std::vector<double> pt(m);
    auto radial = [&](double r) {
        double ang = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            for (int d = 0; d < m; ++d) pt[d] = r * rule.nodes[i][d];
            ang += rule.weights[i] * g(pt);
        }
        return profile(r) * std::pow(r, m - 1) * ang;
    };
    // Graded split near the origin keeps the adaptive pass off the
    // integrable singularity of the profile.
    std::vector<double> cuts{0.0, radius * 1e-4, radius * 1e-2, 0.1 * radius, radius};
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += integrate_gk(radial, cuts[i], cuts[i + 1], opt);
    return total;
}

}  // namespace supersol::quad
