#include "supersol/berezin.hpp"

#include <bit>
#include <cmath>

#include "supersol/errors.hpp"
#include "supersol/super_element.hpp"

namespace supersol {

namespace {

int interleave_sign(std::uint32_t a, std::uint32_t b) {
    int inv = 0;
    while (a) {
        std::uint32_t low = a & (~a + 1);
        inv += std::popcount(b & (low - 1));
        a ^= low;
    }
    return (inv & 1) ? -1 : 1;
}

double scalar_at_origin(const SuperTestFunction& f) {
    return f.eval_sector(0, std::vector<double>(f.m(), 0.0));
}

// Doubled Grassmann algebra (indices 1..2n for the integration family,
// 2n+1..4n for the shift family), used for the formal Grassmann translation.
SuperElement doubled_generator(int n, int index) {
    return SuperElement::grassmann(0, 2 * n, index);
}

// ((shifted fermionic vector)^2)^s = (sum_j (a_{2j-1} - b_{2j-1})(a_{2j} - b_{2j}))^s
// with a the integration family and b the shift family.
SuperElement shifted_vector_square_power(int n, int s) {
    SuperElement sq = SuperElement::zero(0, 2 * n);
    for (int j = 1; j <= n; ++j) {
        SuperElement odd = doubled_generator(n, 2 * j - 1) - doubled_generator(n, 2 * n + 2 * j - 1);
        SuperElement even = doubled_generator(n, 2 * j) - doubled_generator(n, 2 * n + 2 * j);
        sq = sq + odd * even;
    }
    return pow(sq, s);
}

SuperElement mask_monomial(int n, std::uint32_t mask, int offset) {
    SuperElement out = SuperElement::one(0, 2 * n);
    for (int j = 1; j <= 2 * n; ++j)
        if (mask >> (j - 1) & 1) out = out * doubled_generator(n, offset + j);
    return out;
}

// Berezin extraction over the first family: d_{1} first, then d_{2}, ...
SuperElement berezin_extract_first_family(int n, SuperElement e) {
    for (int j = 1; j <= 2 * n; ++j) e = partial_fermionic(e, j);
    return e;
}

// Translation weights for one kernel power and one source monomial: the
// Berezin-in-y extraction of (xgv - ygv)^beta * y^mask, as a map from output
// x-monomial to exact weight.
std::map<std::uint32_t, Rational> convolution_weights(int n, int beta, std::uint32_t mask) {
    if (beta % 2 != 0) throw Error("convolution_weights: odd kernel power");
    SuperElement p = shifted_vector_square_power(n, beta / 2) * mask_monomial(n, mask, 2 * n);
    // Berezin derivatives act on the shift family here.
    for (int j = 1; j <= 2 * n; ++j) p = partial_fermionic(p, 2 * n + j);
    std::map<std::uint32_t, Rational> out;
    for (const auto& [mono, c] : p.terms()) {
        if (mono.g_mask >> (2 * n))
            throw Error("convolution_weights: shift generators survived extraction");
        if (c.pi_half() != 0) throw Error("convolution_weights: unexpected pi power");
        out[mono.g_mask] += c.q();
        if (out[mono.g_mask].is_zero()) out.erase(mono.g_mask);
    }
    return out;
}

double eval_rho_shifted(const SuperTestFunction& rho, std::uint32_t mask,
                        const std::vector<double>& x, const std::vector<double>& u) {
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] - u[i];
    return rho.eval_sector(mask, y);
}

}  // namespace

Rational wedge_top_coefficient(int n, int beta, std::uint32_t mask) {
    if (beta % 2 != 0) throw Error("wedge_top_coefficient: beta must be even");
    const std::uint32_t full = (n == 0) ? 0u : ((1u << (2 * n)) - 1u);
    std::uint32_t complement = full & ~mask;
    if (std::popcount(complement) != beta) return Rational(0);
    for (int j = 0; j < n; ++j) {
        std::uint32_t pair = 0x3u << (2 * j);
        std::uint32_t got = complement & pair;
        if (got != 0 && got != pair) return Rational(0);  // not pair-aligned
    }
    Rational w = factorial(beta / 2);
    if (interleave_sign(complement, mask) < 0) w = -w;
    return w;
}

double berezin_integral(const SuperTestFunction& f, int weight_alpha,
                        const quad::Options& opt) {
    const int m = f.m(), n = f.n();
    if (weight_alpha + m - 1 < 0)
        throw DivergenceError("berezin_integral: r^" + std::to_string(weight_alpha) +
                              " weight is not integrable on R^" + std::to_string(m));
    const std::uint32_t top = (n == 0) ? 0u : ((1u << (2 * n)) - 1u);
    if (!f.has_sector(top)) return 0.0;
    auto profile = [weight_alpha](double r) { return std::pow(r, weight_alpha); };
    auto g = [&](const std::vector<double>& x) { return f.eval_sector(top, x); };
    return quad::integrate_radial_weighted(profile, g, m, f.support_radius(), opt);
}

double berezin_pair(const SuperTestFunction& u, const SuperTestFunction& v,
                    const quad::Options& opt) {
    if (u.m() != v.m() || u.n() != v.n())
        throw DimensionMismatchError("berezin_pair: mixed dimensions");
    const int m = u.m(), n = u.n();
    const std::uint32_t full = (n == 0) ? 0u : ((1u << (2 * n)) - 1u);
    double total = 0.0;
    double radius = std::max(u.support_radius(), v.support_radius());
    for (const auto& [mask_u, terms_u] : u.sectors()) {
        std::uint32_t mask_v = full & ~mask_u;
        if (!v.has_sector(mask_v)) continue;
        int sign = interleave_sign(mask_u, mask_v);
        auto g = [&, mu = mask_u, mv = mask_v](const std::vector<double>& x) {
            return u.eval_sector(mu, x) * v.eval_sector(mv, x);
        };
        total += sign * quad::integrate_radial_weighted([](double) { return 1.0; }, g, m,
                                                        radius, opt);
    }
    return total;
}

std::map<std::uint32_t, double> delta_pair(const SuperTestFunction& f,
                                           const std::vector<double>& y) {
    if (static_cast<int>(y.size()) != f.m())
        throw DimensionMismatchError("delta_pair: point has wrong dimension");
    std::map<std::uint32_t, double> out;
    for (const auto& [mask, terms] : f.sectors()) out[mask] = f.eval_sector(mask, y);
    return out;
}

std::map<std::uint32_t, double> delta_pair(const SuperTestFunction& f, const SuperDelta& d) {
    return delta_pair(f, d.center);
}

std::map<std::uint32_t, Rational> delta_pair_symbolic(
    int n, const std::map<std::uint32_t, Rational>& sector_values) {
    // Product (a_1 - b_1)(a_2 - b_2)...(a_2n - b_2n) with a the integration
    // family and b the shift family, times the stand-in expansion of f.
    SuperElement shift = SuperElement::one(0, 2 * n);
    for (int j = 1; j <= 2 * n; ++j)
        shift = shift * (doubled_generator(n, j) - doubled_generator(n, 2 * n + j));
    SuperElement f = SuperElement::zero(0, 2 * n);
    for (const auto& [mask, v] : sector_values)
        f = f + Coefficient(v) * mask_monomial(n, mask, 0);
    SuperElement reduced = berezin_extract_first_family(n, shift * f);
    std::map<std::uint32_t, Rational> out;
    for (const auto& [mono, c] : reduced.terms()) {
        std::uint32_t ymask = mono.g_mask >> (2 * n);
        if (mono.g_mask & ((n == 0) ? 0u : ((1u << (2 * n)) - 1u)))
            throw Error("delta_pair_symbolic: unextracted integration generators");
        out[ymask] += c.q();
        if (out[ymask].is_zero()) out.erase(ymask);
    }
    return out;
}

double delta_pair_mollified(const SuperTestFunction& f, const std::vector<double>& y,
                            double sigma, const quad::Options& opt) {
    const int m = f.m();
    const double norm = std::pow(2.0 * M_PI * sigma * sigma, -0.5 * m);
    auto g = [&](const std::vector<double>& x) {
        double u2 = 0.0;
        for (int i = 0; i < m; ++i) u2 += (x[i] - y[i]) * (x[i] - y[i]);
        return norm * std::exp(-0.5 * u2 / (sigma * sigma)) * f.eval_sector(0, x);
    };
    double ynorm = 0.0;
    for (double c : y) ynorm += c * c;
    double radius = std::max(f.support_radius(), std::sqrt(ynorm) + 12.0 * sigma);
    return quad::integrate_radial_weighted([](double) { return 1.0; }, g, m, radius, opt);
}

KernelProfiles kernel_profiles(const RadialExpr& e) {
    KernelProfiles out;
    out.m = e.m();
    out.n = e.n();
    std::map<int, std::vector<std::pair<double, int>>> by_beta;  // beta -> (coef, alpha)
    for (const auto& [key, c] : e.terms()) {
        if (key.xvec)
            throw Error("kernel_profiles: kernel has a bosonic vector factor; only "
                        "even-order kernels can be paired");
        if (key.alpha + e.m() - 1 < 0)
            throw DivergenceError("kernel_profiles: r^" + std::to_string(key.alpha) +
                                  " is not integrable on R^" + std::to_string(e.m()));
        by_beta[key.beta].emplace_back(c.value(), key.alpha);
    }
    for (auto& [beta, parts] : by_beta) {
        out.sectors.push_back(
            {beta, [parts](double r) {
                 double v = 0.0;
                 for (const auto& [coef, alpha] : parts) v += coef * std::pow(r, alpha);
                 return v;
             }});
    }
    return out;
}

KernelProfiles kernel_profiles(const NumericSuperKernel& k) {
    KernelProfiles out;
    out.m = k.m;
    out.n = k.n;
    for (int beta : k.sector_betas())
        out.sectors.push_back(
            {beta, [kernel = k, beta](double r) { return kernel.sector_profile(beta, r); }});
    return out;
}

double berezin_pair_kernel(const KernelProfiles& kernel, const SuperTestFunction& psi,
                           const quad::Options& opt) {
    if (kernel.m != psi.m() || kernel.n != psi.n())
        throw DimensionMismatchError("berezin_pair_kernel: mixed dimensions");
    double total = 0.0;
    for (const auto& sector : kernel.sectors) {
        for (const auto& [mask, terms] : psi.sectors()) {
            Rational w = wedge_top_coefficient(kernel.n, sector.beta, mask);
            if (w.is_zero()) continue;
            auto g = [&psi, mask](const std::vector<double>& x) {
                return psi.eval_sector(mask, x);
            };
            try {
                total += w.to_double() *
                         quad::integrate_radial_weighted(sector.profile, g, kernel.m,
                                                         psi.support_radius(), opt);
            } catch (const DivergenceError& e) {
                throw DivergenceError("kernel sector beta=" + std::to_string(sector.beta) +
                                      " against mask " +
                                      std::to_string(static_cast<unsigned>(mask)) + ": " +
                                      e.what());
            }
        }
    }
    return total;
}

PairingReport distributional_check(const FundamentalSolution& candidate,
                                   const std::vector<SuperTestFunction>& battery,
                                   double tol, const quad::Options& opt) {
    if (candidate.order % 2 != 0)
        throw Error("distributional_check: only even-order kernels can be paired");
    const int k = candidate.order / 2;
    return distributional_check_generalized(
        kernel_profiles(candidate.expr),
        [k](const SuperTestFunction& phi) { return phi.apply_laplace(k); }, battery, tol, opt);
}

PairingReport distributional_check_generalized(
    const KernelProfiles& kernel,
    const std::function<SuperTestFunction(const SuperTestFunction&)>& apply_operator,
    const std::vector<SuperTestFunction>& battery, double tol, const quad::Options& opt) {
    PairingReport report;
    report.tolerance = tol;
    report.pass = true;
    for (const auto& phi : battery) {
        PairingEntry entry;
        entry.target = scalar_at_origin(phi);
        entry.value = berezin_pair_kernel(kernel, apply_operator(phi), opt);
        double scale = std::max(std::abs(entry.target), 1e-12);
        entry.rel_error = std::abs(entry.value - entry.target) / scale;
        entry.pass = entry.rel_error <= tol;
        report.pass = report.pass && entry.pass;
        report.entries.push_back(entry);
    }
    return report;
}

std::map<std::uint32_t, double> convolve_eval(const FundamentalSolution& nu,
                                              const SuperTestFunction& rho,
                                              const std::vector<double>& point,
                                              const quad::Options& opt) {
    if (nu.m != rho.m() || nu.n != rho.n())
        throw DimensionMismatchError("convolve_eval: kernel and source dimensions differ");
    if (nu.m % 2 == 0)
        throw UnsupportedDimensionError("convolve_eval: even bosonic dimension unsupported");
    if (nu.order % 2 != 0)
        throw Error("convolve_eval: only even-order kernels are convolved");
    const int m = nu.m, n = nu.n;

    // Group kernel terms into per-beta radial profiles.
    std::map<int, std::vector<std::pair<double, int>>> by_beta;
    for (const auto& [key, c] : nu.expr.terms()) {
        if (key.xvec) throw Error("convolve_eval: unexpected bosonic vector factor");
        by_beta[key.beta].emplace_back(c.value(), key.alpha);
    }

    double xnorm = 0.0;
    for (double c : point) xnorm += c * c;
    const double radius = std::sqrt(xnorm) + rho.support_radius();

    std::map<std::uint32_t, double> out;
    for (const auto& [beta, parts] : by_beta) {
        auto profile = [&parts](double r) {
            double v = 0.0;
            for (const auto& [coef, alpha] : parts) v += coef * std::pow(r, alpha);
            return v;
        };
        for (const auto& [mask, terms] : rho.sectors()) {
            auto weights = convolution_weights(n, beta, mask);
            if (weights.empty()) continue;
            auto g = [&](const std::vector<double>& u) {
                return eval_rho_shifted(rho, mask, point, u);
            };
            double integral =
                quad::integrate_radial_weighted(profile, g, m, radius, opt);
            for (const auto& [mask_out, w] : weights)
                out[mask_out] += w.to_double() * integral;
        }
    }
    return out;
}

SampledSuperFunction convolve_solve(const FundamentalSolution& nu,
                                    const SuperTestFunction& rho,
                                    const std::vector<std::vector<double>>& grid,
                                    const quad::Options& opt) {
    SampledSuperFunction out;
    out.m = nu.m;
    out.n = nu.n;
    out.grid = grid;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto vals = convolve_eval(nu, rho, grid[i], opt);
        for (const auto& [mask, v] : vals) {
            auto& vec = out.sectors[mask];
            vec.resize(grid.size(), 0.0);
            vec[i] = v;
        }
    }
    for (auto& [mask, vec] : out.sectors) vec.resize(grid.size(), 0.0);
    return out;
}

ResidualReport convolve_residual(const FundamentalSolution& nu, const SuperTestFunction& rho,
                                 const std::vector<double>& grid_1d, double h, double tol,
                                 const quad::Options& opt) {
    if (nu.m != 1)
        throw UnsupportedDimensionError("convolve_residual: finite differences need m = 1");
    const int n = nu.n;
    ResidualReport report;
    report.h = h;
    report.tolerance = tol;

    // Source scale for the relative residual.
    double rho_scale = 0.0;
    for (double x : grid_1d)
        for (const auto& [mask, terms] : rho.sectors())
            rho_scale = std::max(rho_scale, std::abs(rho.eval_sector(mask, {x})));
    if (rho_scale == 0.0) rho_scale = 1.0;

    const std::uint32_t nmasks = (n == 0) ? 1u : (1u << (2 * n));
    double worst = 0.0;
    for (double x : grid_1d) {
        auto at = convolve_eval(nu, rho, {x}, opt);
        auto up = convolve_eval(nu, rho, {x + h}, opt);
        auto dn = convolve_eval(nu, rho, {x - h}, opt);
        for (std::uint32_t mask = 0; mask < nmasks; ++mask) {
            // bosonic part: minus the second difference
            double lap_b = -(up[mask] - 2.0 * at[mask] + dn[mask]) / (h * h);
            // fermionic part: each full pair above the sector folds down with -4
            double lap_f = 0.0;
            for (int j = 0; j < n; ++j) {
                std::uint32_t pair = 0x3u << (2 * j);
                if (mask & pair) continue;
                auto it = at.find(mask | pair);
                if (it != at.end()) lap_f += -4.0 * it->second;
            }
            double residual = lap_b + lap_f - rho.eval_sector(mask, {x});
            worst = std::max(worst, std::abs(residual) / rho_scale);
        }
    }
    report.max_rel_residual = worst;
    report.pass = worst <= tol;
    return report;
}

}  // namespace supersol
