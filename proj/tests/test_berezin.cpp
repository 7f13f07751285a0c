#include "doctest.h"

#include <cmath>
#include <random>

#include "supersol/berezin.hpp"
#include "supersol/json_io.hpp"

using namespace supersol;

namespace {

double std_normal_amplitude(int m) { return std::pow(2.0 * M_PI, -0.5 * m); }

SuperTestFunction gaussian_fn(int m, int n, std::uint32_t mask, double amp,
                              std::vector<double> center, double width) {
    SuperTestFunction f(m, n);
    f.add_gaussian(mask, amp, std::move(center), width);
    return f;
}

}  // namespace

TEST_CASE("top extraction weights") {
    // n = 1: xgv^2 against the empty monomial gives +1
    CHECK(wedge_top_coefficient(1, 2, 0b00) == Rational(1));
    CHECK(wedge_top_coefficient(1, 0, 0b11) == Rational(1));
    CHECK(wedge_top_coefficient(1, 2, 0b11) == Rational(0));
    CHECK(wedge_top_coefficient(1, 0, 0b01) == Rational(0));
    // n = 2
    CHECK(wedge_top_coefficient(2, 4, 0b0000) == Rational(2));   // xgv^4 = 2 * top
    CHECK(wedge_top_coefficient(2, 2, 0b0011) == Rational(1));
    CHECK(wedge_top_coefficient(2, 2, 0b1100) == Rational(1));
    CHECK(wedge_top_coefficient(2, 2, 0b0101) == Rational(0));   // not pair-aligned
    CHECK(wedge_top_coefficient(2, 0, 0b1111) == Rational(1));
}

TEST_CASE("Berezin integral picks the top sector") {
    for (auto [m, n] : {std::pair{1, 1}, {3, 1}, {1, 2}}) {
        std::uint32_t top = (1u << (2 * n)) - 1u;
        SuperTestFunction f =
            gaussian_fn(m, n, top, std_normal_amplitude(m), std::vector<double>(m, 0.0), 1.0);
        CHECK(berezin_integral(f) == doctest::Approx(1.0).epsilon(1e-8));
        // a function with no top sector integrates to zero exactly
        SuperTestFunction g =
            gaussian_fn(m, n, 0, 1.0, std::vector<double>(m, 0.0), 1.0);
        CHECK(berezin_integral(g) == 0.0);
    }
    SuperTestFunction f = gaussian_fn(1, 1, 0b11, 1.0, {0.0}, 1.0);
    CHECK_THROWS_AS(berezin_integral(f, -1), DivergenceError);
}

TEST_CASE("Berezin integral is linear") {
    SuperTestFunction f = gaussian_fn(1, 1, 0b11, 0.8, {0.2}, 0.9);
    SuperTestFunction g = gaussian_fn(1, 1, 0b11, -0.3, {-0.4}, 1.2);
    quad::Options tight;
    tight.tol = 1e-12;
    CHECK(berezin_integral(f + g, 0, tight) ==
          doctest::Approx(berezin_integral(f, 0, tight) + berezin_integral(g, 0, tight))
              .epsilon(1e-10));
    CHECK(berezin_integral(f.scaled(2.5), 0, tight) ==
          doctest::Approx(2.5 * berezin_integral(f, 0, tight)).epsilon(1e-10));
}

TEST_CASE("top power over factorial integrates like the full monomial") {
    // Expand xgv^{2n}/n! in coordinates and feed the resulting sectors in;
    // the integral must equal the plain top-sector integral.
    for (int n = 1; n <= 3; ++n) {
        int m = 1;
        SuperElement xgv = vector_variable(0, n);
        SuperElement expanded = pow(xgv, 2 * n);
        SuperTestFunction f(m, n);
        double norm = std_normal_amplitude(m) / factorial(n).to_double();
        for (const auto& [mono, c] : expanded.terms()) {
            REQUIRE(c.pi_half() == 0);
            f.add_gaussian(mono.g_mask, c.q().to_double() * norm, {0.0}, 1.0);
        }
        CHECK(berezin_integral(f) == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("delta pairing evaluates sectors at the point") {
    SuperTestFunction f(3, 1);
    f.add_gaussian(0, 2.0, {0.0, 0.0, 0.0}, 1.0);
    f.add_gaussian(0b11, 1.5, {0.5, 0.0, 0.0}, 0.8);
    auto vals = delta_pair(f, {0.25, -0.5, 1.0});
    CHECK(vals.at(0) == doctest::Approx(f.eval_sector(0, {0.25, -0.5, 1.0})));
    CHECK(vals.at(0b11) == doctest::Approx(f.eval_sector(0b11, {0.25, -0.5, 1.0})));

    SuperTestFunction scalar_only(3, 1);
    scalar_only.add_gaussian(0, 1.0, {0.0, 0.0, 0.0}, 1.0);
    auto svals = delta_pair(scalar_only, SuperDelta{{0.0, 0.0, 0.0}});
    CHECK(svals.size() == 1);
    CHECK(svals.at(0) == doctest::Approx(1.0));
}

TEST_CASE("Grassmann shift expansion reproduces the function exactly") {
    std::mt19937_64 rng(31);
    for (int n = 1; n <= 2; ++n) {
        std::map<std::uint32_t, Rational> values;
        for (std::uint32_t mask = 0; mask < (1u << (2 * n)); ++mask)
            values[mask] = Rational(static_cast<long>(rng() % 19) - 9,
                                    1 + static_cast<long>(rng() % 5));
        auto reproduced = delta_pair_symbolic(n, values);
        for (const auto& [mask, v] : values) {
            if (v.is_zero())
                CHECK(reproduced.count(mask) == 0);
            else
                CHECK(reproduced.at(mask) == v);
        }
    }
}

TEST_CASE("mollified delta converges at second order in the width") {
    SuperTestFunction f(1, 0);
    f.add_gaussian(0, 1.0, {0.3}, 0.7);  // curvature at the origin is nonzero
    double target = f.eval_sector(0, {0.0});
    double e1 = std::abs(delta_pair_mollified(f, {0.0}, 0.1) - target);
    double e2 = std::abs(delta_pair_mollified(f, {0.0}, 0.05) - target);
    double e3 = std::abs(delta_pair_mollified(f, {0.0}, 0.025) - target);
    CHECK(e2 / e1 == doctest::Approx(0.25).epsilon(0.25));
    CHECK(e3 / e2 == doctest::Approx(0.25).epsilon(0.25));
}

TEST_CASE("fermionic Laplacian is symmetric under the Berezin pairing") {
    std::mt19937_64 rng(47);
    for (int n = 1; n <= 2; ++n) {
        int m = 1;
        for (int trial = 0; trial < 3; ++trial) {
            SuperTestFunction u(m, n), v(m, n);
            for (std::uint32_t mask = 0; mask < (1u << (2 * n)); ++mask) {
                if (rng() & 1)
                    u.add_gaussian(mask, 0.2 + static_cast<double>(rng() % 7) / 4.0,
                                   {static_cast<double>(rng() % 3) / 4.0}, 0.9);
                if (rng() & 1)
                    v.add_gaussian(mask, 0.3 + static_cast<double>(rng() % 5) / 4.0,
                                   {-static_cast<double>(rng() % 3) / 5.0}, 1.1);
            }
            double lhs = berezin_pair(u.apply_laplace_f(), v);
            double rhs = berezin_pair(u, v.apply_laplace_f());
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
        }
    }
}

TEST_CASE("distributional identity for the first-order kernel on R^{3|2}") {
    FundamentalSolution nu = nu_super(3, 1, 2);
    SuperTestFunction phi(3, 1);
    phi.add_gaussian(0, 1.0, {0.0, 0.0, 0.0}, 1.0);
    phi.add_gaussian(0b11, 1.0, {0.0, 0.0, 0.0}, 1.0);
    auto report = distributional_check(nu, {phi}, 1e-4);
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries[0].target == doctest::Approx(1.0));
    CHECK(report.pass);

    // linearity sanity: doubling the kernel doubles the pairing and fails
    FundamentalSolution doubled = nu;
    doubled.expr = Coefficient(Rational(2)) * doubled.expr;
    auto bad = distributional_check(doubled, {phi}, 1e-4);
    CHECK(!bad.pass);
    CHECK(bad.entries[0].value == doctest::Approx(2.0 * report.entries[0].value));
}

TEST_CASE("distributional identity in the purely bosonic 1d case") {
    // kernel -|x|/2 paired against the (sign-reversed) second derivative
    FundamentalSolution nu = nu_super(1, 0, 2);
    SuperTestFunction phi(1, 0);
    phi.add_gaussian(0, 1.4, {0.35}, 0.8);
    auto report = distributional_check(nu, {phi}, 1e-6);
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries[0].target == doctest::Approx(phi.eval_sector(0, {0.0})));
    CHECK(report.pass);
}

TEST_CASE("distributional identity on R^{1|2}") {
    FundamentalSolution nu = nu_super(1, 1, 2);
    SuperTestFunction phi(1, 1);
    phi.add_gaussian(0, 1.3, {0.2}, 0.9);
    phi.add_gaussian(0b01, 0.7, {0.0}, 1.1);
    phi.add_gaussian(0b11, -0.4, {-0.3}, 0.8);
    auto report = distributional_check(nu, {phi}, 1e-4);
    CHECK(report.pass);
}

TEST_CASE("third-power pairing works through the polynomial Gaussians") {
    FundamentalSolution nu = nu_super(3, 1, 6);
    SuperTestFunction phi(3, 1);
    phi.add_gaussian(0, 1.0, {0.0, 0.0, 0.0}, 1.0);
    phi.add_gaussian(0b11, 0.5, {0.3, 0.0, 0.0}, 0.9);
    quad::Options opt;
    opt.tol = 1e-9;
    auto report = distributional_check(nu, {phi}, 1e-4, opt);
    CHECK(report.pass);
}

TEST_CASE("pairing rejects odd orders") {
    FundamentalSolution odd = nu_super(3, 1, 1);
    SuperTestFunction phi(3, 1);
    phi.add_gaussian(0, 1.0, {0.0, 0.0, 0.0}, 1.0);
    CHECK_THROWS_AS(distributional_check(odd, {phi}, 1e-4), Error);
}

TEST_CASE("convolution of the zero source is zero") {
    FundamentalSolution nu = nu_super(1, 1, 2);
    SuperTestFunction rho(1, 1);  // no sectors
    auto vals = convolve_eval(nu, rho, {0.4});
    for (const auto& [mask, v] : vals) CHECK(v == 0.0);
}

TEST_CASE("convolution against a narrow source approaches the kernel") {
    FundamentalSolution nu = nu_super(1, 1, 2);
    SuperTestFunction rho(1, 1);
    double sigma = 0.02;
    rho.add_gaussian(0b11, std_normal_amplitude(1) / sigma, {0.0}, sigma);
    double x = 1.2;
    auto vals = convolve_eval(nu, rho, {x});
    // scalar sector of the kernel: |x|^3/3; top sector: -|x|/2
    CHECK(vals.at(0) == doctest::Approx(x * x * x / 3.0).epsilon(2e-3));
    CHECK(vals.at(0b11) == doctest::Approx(-x / 2.0).epsilon(2e-3));
}

TEST_CASE("convolving the Laplacian of a test function recovers it") {
    FundamentalSolution nu = nu_super(1, 1, 2);
    SuperTestFunction phi(1, 1);
    phi.add_gaussian(0, 0.8, {0.1}, 0.6);
    phi.add_gaussian(0b11, -0.5, {0.0}, 0.7);
    SuperTestFunction rho = phi.apply_laplace(1);
    quad::Options opt;
    opt.tol = 1e-11;
    for (double x : {-0.7, 0.0, 0.5}) {
        auto vals = convolve_eval(nu, rho, {x}, opt);
        CHECK(vals.at(0) == doctest::Approx(phi.eval_sector(0, {x})).epsilon(1e-6));
        CHECK(vals.at(0b11) ==
              doctest::Approx(phi.eval_sector(0b11, {x})).epsilon(1e-6));
    }
}

TEST_CASE("convolution residual is small on a coarse grid") {
    FundamentalSolution nu = nu_super(1, 1, 2);
    SuperTestFunction rho(1, 1);
    rho.add_gaussian(0b11, 1.0, {0.0}, 0.5);
    quad::Options opt;
    opt.tol = 1e-12;
    auto report = convolve_residual(nu, rho, {-0.5, 0.0, 0.75}, 1e-3, 1e-3, opt);
    CHECK(report.pass);
}

TEST_CASE("battery files round-trip") {
    nlohmann::json j = {
        {"m", 1},
        {"n", 1},
        {"functions",
         {{{"type", "gaussian"}, {"amplitude", 1.0}, {"center", {0.0}}, {"width", 0.5},
           {"grassmann_mask", "11"}}}}};
    SuperTestFunction f = test_function_from_json(j);
    CHECK(f.m() == 1);
    CHECK(f.n() == 1);
    CHECK(f.has_sector(0b11));
    CHECK(f.eval_sector(0b11, {0.0}) == doctest::Approx(1.0));
}
