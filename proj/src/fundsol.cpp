#include "supersol/fundsol.hpp"

#include <cmath>

#include "supersol/errors.hpp"

namespace supersol {

namespace {

void require_odd_m(int m, const char* who) {
    if (m < 1 || m % 2 == 0)
        throw UnsupportedDimensionError(std::string(who) +
                                        ": closed forms require odd m >= 1, got m = " +
                                        std::to_string(m));
}

}  // namespace

Coefficient gamma_half_integer(int twice_z) {
    if (twice_z % 2 == 0) {
        // Integer argument: plain factorial, poles at z <= 0.
        int z = twice_z / 2;
        if (z <= 0) throw Error("gamma_half_integer: pole at non-positive integer");
        return Coefficient(factorial(z - 1));
    }
    // Half-odd argument: walk to Gamma(1/2) = sqrt(pi) in exact steps.
    Rational q(1);
    int t = twice_z;
    while (t > 1) {
        t -= 2;
        q *= Rational(t, 2);  // Gamma(z) = (z-1) Gamma(z-1)
    }
    while (t < 1) {
        q /= Rational(t, 2);  // Gamma(z) = Gamma(z+1) / z
        t += 2;
    }
    return Coefficient(q, 1);
}

Coefficient gamma_coeff(int m, int l) {
    require_odd_m(m, "gamma_coeff");
    if (l < 0) throw Error("gamma_coeff: negative index");
    Rational s = pow_rational(Rational(4), l) * factorial(l) * Rational(2 - m);
    if (l % 2 == 0) s = -s;  // (-1)^{l+1}
    // Gamma(l+2-m/2)/Gamma(2-m/2) telescopes to a rational product.
    Rational ratio(1);
    for (int i = 0; i < l; ++i) ratio *= Rational(4 - m + 2 * i, 2);
    // 2 pi^{m/2} / Gamma(m/2): for odd m the sqrt(pi) cancels into an
    // integer power of pi.
    Coefficient gm = gamma_half_integer(m);
    Coefficient tail = Coefficient(Rational(2), m) / gm;
    return Coefficient(s * ratio) * tail;
}

RadialExpr nu_classical(int m, int order) {
    require_odd_m(m, "nu_classical");
    if (order < 1) throw Error("nu_classical: order must be >= 1");
    if (order % 2 == 0) {
        int l = order / 2;
        Coefficient c = Coefficient(Rational(1)) / gamma_coeff(m, l - 1);
        return RadialExpr::term(m, 0, c, 2 * l - m, false, 0);
    }
    int l = (order - 1) / 2;
    return radial_partial_bosonic_vector(nu_classical(m, 2 * l + 2));
}

ClassicalFundSeq::ClassicalFundSeq(int m, int max_order) : m_(m) {
    require_odd_m(m, "ClassicalFundSeq");
    for (int order = 1; order <= max_order; ++order)
        entries_.emplace(order, nu_classical(m, order));
}

const RadialExpr& ClassicalFundSeq::at(int order) const {
    auto it = entries_.find(order);
    if (it == entries_.end())
        throw Error("ClassicalFundSeq: order " + std::to_string(order) + " not populated");
    return it->second;
}

Rational coeff_a(int n, int k) {
    if (k < 0 || k > n) throw Error("coeff_a: need 0 <= k <= n");
    return pow_rational(Rational(4), k) * factorial(k) / factorial(n - k);
}

Rational coeff_a_recurrence(int n, int k) {
    if (k < 0 || k > n) throw Error("coeff_a_recurrence: need 0 <= k <= n");
    Rational a = Rational(1) / factorial(n);
    for (int i = 1; i <= k; ++i) a *= Rational(4) * Rational(i) * Rational(n - i + 1);
    return a;
}

Rational coeff_a_general(int n, int k, int l) {
    if (k < 1) throw Error("coeff_a_general: need k >= 1");
    if (l < 0 || l > n) throw Error("coeff_a_general: need 0 <= l <= n");
    return pow_rational(Rational(4), l) * factorial(l + k - 1) /
           (factorial(n - l) * factorial(k - 1));
}

Rational coeff_b(int k, int l) {
    if (k < 1 || l < 0) throw Error("coeff_b: need k >= 1, l >= 0");
    return binomial(l + k - 1, l);
}

Rational coeff_b_bruteforce(int k, int l) {
    if (k < 1 || l < 0) throw Error("coeff_b_bruteforce: need k >= 1, l >= 0");
    std::vector<Rational> b(static_cast<std::size_t>(l) + 1);
    b[0] = Rational(1);
    for (int i = 1; i <= l; ++i) {
        // sum_{j=0}^{min(k,i)} b_{i-j} binom(k,j) (-1)^j = 0 solved for b_i.
        Rational s(0);
        for (int j = 1; j <= std::min(k, i); ++j) {
            Rational t = b[i - j] * binomial(k, j);
            s += (j & 1) ? -t : t;
        }
        b[i] = -s;
    }
    return b[l];
}

RadialExpr laplace_kernel_direct(int m, int n) {
    require_odd_m(m, "laplace_kernel_direct");
    RadialExpr out(m, n);
    for (int k = 0; k <= n; ++k) {
        Coefficient c = Coefficient(coeff_a(n, k)) / gamma_coeff(m, k);
        out.add_term(2 * k + 2 - m, false, 2 * n - 2 * k, c);
    }
    return out;
}

RadialExpr dirac_kernel_direct(int m, int n) {
    require_odd_m(m, "dirac_kernel_direct");
    RadialExpr out(m, n);
    for (int k = 0; k + 1 <= n; ++k) {
        Rational a = Rational(2) * pow_rational(Rational(4), k) * factorial(k) /
                     factorial(n - k - 1);
        Coefficient c = Coefficient(a) / gamma_coeff(m, k);
        out.add_term(2 * k + 2 - m, false, 2 * n - 2 * k - 1, c);
    }
    for (int k = 0; k <= n; ++k) {
        // The odd classical kernel of order 2k+1 is (2k+2-m) r^{2k-m} xv / gamma_k.
        Coefficient c = Coefficient(-coeff_a(n, k) * Rational(2 * k + 2 - m)) /
                        gamma_coeff(m, k);
        out.add_term(2 * k - m, true, 2 * n - 2 * k, c);
    }
    return out;
}

RadialExpr laplace_power_kernel(int m, int n, int k) {
    require_odd_m(m, "laplace_power_kernel");
    if (k < 1) throw Error("laplace_power_kernel: need k >= 1");
    RadialExpr out(m, n);
    for (int l = 0; l <= n; ++l) {
        Coefficient c = Coefficient(coeff_a_general(n, k, l)) / gamma_coeff(m, l + k - 1);
        out.add_term(2 * (l + k) - m, false, 2 * n - 2 * l, c);
    }
    return out;
}

RadialExpr dirac_power_kernel(int m, int n, int k) {
    require_odd_m(m, "dirac_power_kernel");
    if (k < 0) throw Error("dirac_power_kernel: need k >= 0");
    RadialExpr out(m, n);
    for (int l = 0; l + 1 <= n; ++l) {
        Rational a = Rational(2) * pow_rational(Rational(4), l) * factorial(l + k) /
                     (factorial(n - l - 1) * factorial(k));
        Coefficient c = Coefficient(a) / gamma_coeff(m, l + k);
        out.add_term(2 * (l + k) + 2 - m, false, 2 * n - 2 * l - 1, c);
    }
    for (int l = 0; l <= n; ++l) {
        Rational a = pow_rational(Rational(4), l) * factorial(l + k) /
                     (factorial(n - l) * factorial(k));
        Coefficient c = Coefficient(-a * Rational(2 * (l + k) + 2 - m)) /
                        gamma_coeff(m, l + k);
        out.add_term(2 * (l + k) - m, true, 2 * n - 2 * l, c);
    }
    return out;
}

FundamentalSolution nu_super(int m, int n, int order) {
    require_odd_m(m, "nu_super");
    if (n < 0) throw Error("nu_super: negative n");
    if (order < 1) throw Error("nu_super: order must be >= 1");
    FundamentalSolution fs;
    fs.m = m;
    fs.n = n;
    fs.order = order;
    if (order % 2 == 0) {
        int k = order / 2;
        if (k == 1) {
            fs.expr = laplace_kernel_direct(m, n);
            fs.provenance = "laplace-kernel";
        } else {
            fs.expr = laplace_power_kernel(m, n, k);
            fs.provenance = "iterated-laplace-kernel";
        }
        return fs;
    }
    int k = (order - 1) / 2;
    RadialExpr closed = (k == 0) ? dirac_kernel_direct(m, n) : dirac_power_kernel(m, n, k);
    // Construction self-check: the closed form must equal the Dirac
    // derivative of the next even-order kernel, term for term.
    FundamentalSolution next = nu_super(m, n, order + 1);
    if (radial_dirac(next.expr) != closed)
        throw Error("nu_super: closed form disagrees with Dirac descent at order " +
                    std::to_string(order));
    fs.expr = closed;
    fs.provenance = (k == 0) ? "dirac-kernel" : "iterated-dirac-kernel";
    return fs;
}

RadialAnsatzReport radial_ansatz_check(int m, int n) {
    require_odd_m(m, "radial_ansatz_check");
    RadialAnsatzReport rep;
    rep.m = m;
    rep.n = n;
    const int M = m - 2 * n;
    // Top argument 1 - M/2 of the generalized binomial, as an exact rational.
    const Rational top = Rational(2 - M, 2);
    bool ok = true;
    for (int k = 0; k <= n; ++k) {
        Coefficient kern = Coefficient(coeff_a(n, k)) / gamma_coeff(m, k);
        // (x^2)^{1-m/2+k} = (-1)^k r^{2k+2-m} up to one global phase; the
        // (-1)^k alternation is kept on the binomial side.
        Rational bin = binomial_general(top, n - k);
        if (k & 1) bin = -bin;
        rep.kernel_coeffs.push_back(kern);
        rep.binomial_coeffs.push_back(bin);
        if (bin.is_zero()) {
            ok = false;
            rep.ratios.emplace_back(Rational(0));
            continue;
        }
        rep.ratios.push_back(kern / Coefficient(bin));
        if (k > 0 && !(rep.ratios[k] == rep.ratios[0])) ok = false;
    }
    rep.pass = ok;
    return rep;
}

RadialExpr generalized_fundsol(const RadialKernelSeq& seq, int n, int k) {
    if (k < 1) throw Error("generalized_fundsol: need k >= 1");
    // Descent contract on every order this construction touches.
    for (int j = 2; j <= n + k; ++j) {
        if (!(seq.L(seq.mu(j)) == seq.mu(j - 1)))
            throw ContractViolationError(
                "kernel sequence violates L mu_" + std::to_string(2 * j) + " = mu_" +
                    std::to_string(2 * j - 2),
                2 * j);
    }
    if (!seq.L(seq.mu(1)).is_zero())
        throw ContractViolationError("kernel sequence: L mu_2 != 0 away from the origin", 2);

    RadialExpr base = seq.mu(k);
    RadialExpr out(base.m(), n);
    for (int l = 0; l <= n; ++l) {
        RadialExpr mu = seq.mu(l + k);
        RadialExpr lifted(base.m(), n);
        for (const auto& [key, c] : mu.terms())
            lifted.add_term(key.alpha, key.xvec, key.beta, c);
        RadialExpr factor =
            RadialExpr::term(base.m(), n, Coefficient(coeff_a_general(n, k, l)), 0, false,
                             2 * n - 2 * l);
        out = out + radial_multiply(lifted, factor);
    }
    return out;
}

double NumericSuperKernel::sector_profile(int beta, double r) const {
    double v = 0.0;
    for (const auto& comp : components)
        if (comp.beta == beta) v += comp.a.to_double() * seq.mu(comp.classical_order / 2, r);
    return v;
}

std::vector<int> NumericSuperKernel::sector_betas() const {
    std::vector<int> betas;
    for (const auto& comp : components) betas.push_back(comp.beta);
    return betas;
}

NumericSuperKernel generalized_fundsol_numeric(const NumericKernelSeq& seq, int n, int k,
                                               double check_tol) {
    if (k < 1) throw Error("generalized_fundsol_numeric: need k >= 1");
    // Pointwise descent check away from the origin.
    const double radii[] = {0.3, 0.7, 1.1, 1.7, 2.3};
    for (int j = 1; j <= n + k; ++j) {
        for (double r : radii) {
            double lhs = seq.L_mu(j, r);
            double rhs = (j == 1) ? 0.0 : seq.mu(j - 1, r);
            double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
            if (std::abs(lhs - rhs) > check_tol * scale)
                throw ContractViolationError(
                    "numeric kernel sequence fails descent at order " + std::to_string(2 * j) +
                        ", r = " + std::to_string(r),
                    2 * j);
        }
    }
    NumericSuperKernel out;
    out.m = seq.m;
    out.n = n;
    out.k = k;
    out.seq = seq;
    for (int l = 0; l <= n; ++l)
        out.components.push_back({coeff_a_general(n, k, l), 2 * (l + k), 2 * n - 2 * l});
    return out;
}

NumericKernelSeq helmholtz_seq_1d(double lambda) {
    if (lambda == 0.0) throw Error("helmholtz_seq_1d: lambda must be nonzero");
    NumericKernelSeq seq;
    seq.m = 1;
    seq.mu = [lambda](int k, double r) -> double {
        r = std::abs(r);
        if (k == 1) return -std::sin(lambda * r) / (2.0 * lambda);
        if (k == 2)
            return std::sin(lambda * r) / (4.0 * lambda * lambda * lambda) -
                   r * std::cos(lambda * r) / (4.0 * lambda * lambda);
        throw Error("helmholtz_seq_1d: kernel order " + std::to_string(2 * k) +
                    " not implemented");
    };
    // (minus d^2/dr^2 - lambda^2) applied to the profiles, away from r = 0;
    // second derivative by central differences so the check stays an
    // independent oracle of the closed forms above.
    seq.L_mu = [seq, lambda](int k, double r) -> double {
        const double h = 1e-5;
        double d2 = (seq.mu(k, r + h) - 2.0 * seq.mu(k, r) + seq.mu(k, r - h)) / (h * h);
        return -d2 - lambda * lambda * seq.mu(k, r);
    };
    return seq;
}

}  // namespace supersol
