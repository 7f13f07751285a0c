#include "supersol/radial.hpp"

#include <cmath>
#include <sstream>

#include "supersol/errors.hpp"

namespace supersol {

namespace {

void check_same_dims(const RadialExpr& a, const RadialExpr& b) {
    if (a.m() != b.m() || a.n() != b.n())
        throw DimensionMismatchError("radial expressions over different (m, n)");
}

// Coefficient of the fermionic vector derivative on xgv^beta, from the power
// rules at super-dimension -2n:  d(xgv^{2s}) = 2s xgv^{2s-1},
// d(xgv^{2s+1}) = (2s - 2n) xgv^{2s}.
long ferm_dirac_coeff(int beta, int n) {
    if (beta % 2 == 0) return beta;           // 2s
    return (beta - 1) - 2 * n;                // 2s - 2n
}

}  // namespace

void RadialExpr::add_term(int alpha, bool xvec, int beta, const Coefficient& c) {
    if (c.is_zero()) return;
    if (beta < 0) throw Error("RadialExpr: negative fermionic power");
    if (beta > 2 * n_) return;  // identically zero
    RadialKey key{alpha, xvec, beta};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::vector<RadialTerm> RadialExpr::term_list() const {
    std::vector<RadialTerm> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.push_back({c, k.alpha, k.xvec, k.beta});
    return out;
}

RadialExpr RadialExpr::operator-() const {
    RadialExpr r(m_, n_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

RadialExpr operator+(const RadialExpr& a, const RadialExpr& b) {
    check_same_dims(a, b);
    RadialExpr r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.alpha, k.xvec, k.beta, c);
    return r;
}

RadialExpr operator-(const RadialExpr& a, const RadialExpr& b) {
    check_same_dims(a, b);
    RadialExpr r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.alpha, k.xvec, k.beta, -c);
    return r;
}

RadialExpr operator*(const Coefficient& c, const RadialExpr& a) {
    RadialExpr r(a.m(), a.n());
    for (const auto& [k, tc] : a.terms_) r.add_term(k.alpha, k.xvec, k.beta, c * tc);
    return r;
}

RadialExpr RadialExpr::term(int m, int n, Coefficient c, int alpha, bool xvec, int beta) {
    RadialExpr r(m, n);
    r.add_term(alpha, xvec, beta, c);
    return r;
}

std::string RadialExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (k.alpha != 0) os << " r^" << k.alpha;
        if (k.xvec) os << " xv";
        if (k.beta != 0) os << " xgv^" << k.beta;
    }
    return os.str();
}

RadialExpr radial_multiply(const RadialExpr& a, const RadialExpr& b) {
    check_same_dims(a, b);
    RadialExpr out(a.m(), a.n());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            int beta = ka.beta + kb.beta;
            if (beta > 2 * a.n()) continue;
            Coefficient c = ca * cb;
            // a's fermionic power moves past b's bosonic vector factor.
            if (kb.xvec && (ka.beta & 1)) c = -c;
            int alpha = ka.alpha + kb.alpha;
            bool xvec = ka.xvec != kb.xvec;
            if (ka.xvec && kb.xvec) {  // xv^2 = -r^2
                alpha += 2;
                c = -c;
            }
            out.add_term(alpha, xvec, beta, c);
        }
    }
    return out;
}

// Termwise closed rules, derived from the coordinate formulas:
//   d_xv (r^a)       = a r^{a-2} xv          d_xv (r^a xv) = -(a+m) r^a
//   d_xgv(xgv^b)     = ferm_dirac_coeff(b)*xgv^{b-1}
//   d_xgv(xv * g)    = -xv * d_xgv(g)        (the symplectic coefficient
//                                             anticommutes past xv)
// and the super Dirac operator is d_xgv - d_xv.
RadialExpr radial_dirac(const RadialExpr& f) {
    const int m = f.m(), n = f.n();
    RadialExpr out(m, n);
    for (const auto& [k, c] : f.terms()) {
        long fc = ferm_dirac_coeff(k.beta, n);
        if (!k.xvec) {
            if (fc != 0 && k.beta >= 1)
                out.add_term(k.alpha, false, k.beta - 1, c * Coefficient(Rational(fc)));
            if (k.alpha != 0)
                out.add_term(k.alpha - 2, true, k.beta, c * Coefficient(Rational(-k.alpha)));
        } else {
            if (fc != 0 && k.beta >= 1)
                out.add_term(k.alpha, true, k.beta - 1, c * Coefficient(Rational(-fc)));
            out.add_term(k.alpha, false, k.beta, c * Coefficient(Rational(k.alpha + m)));
        }
    }
    return out;
}

RadialExpr radial_partial_bosonic_vector(const RadialExpr& f) {
    const int m = f.m(), n = f.n();
    RadialExpr out(m, n);
    for (const auto& [k, c] : f.terms()) {
        if (!k.xvec) {
            if (k.alpha != 0)
                out.add_term(k.alpha - 2, true, k.beta, c * Coefficient(Rational(k.alpha)));
        } else {
            out.add_term(k.alpha, false, k.beta, c * Coefficient(Rational(-(k.alpha + m))));
        }
    }
    return out;
}

RadialExpr radial_laplace_b(const RadialExpr& f) {
    const int m = f.m(), n = f.n();
    RadialExpr out(m, n);
    for (const auto& [k, c] : f.terms()) {
        // Sign convention used throughout: the bosonic
        // Laplace operator here is minus the Euclidean one.
        long a = k.alpha;
        long factor = k.xvec ? -a * (a + m) : -a * (a + m - 2);
        if (factor != 0)
            out.add_term(k.alpha - 2, k.xvec, k.beta, c * Coefficient(Rational(factor)));
    }
    return out;
}

RadialExpr radial_laplace_f(const RadialExpr& f) {
    const int n = f.n();
    RadialExpr out(f.m(), n);
    for (const auto& [k, c] : f.terms()) {
        if (k.beta < 2) continue;
        long factor = ferm_dirac_coeff(k.beta, n) * ferm_dirac_coeff(k.beta - 1, n);
        if (factor != 0)
            out.add_term(k.alpha, k.xvec, k.beta - 2, c * Coefficient(Rational(factor)));
    }
    return out;
}

RadialExpr radial_laplace(const RadialExpr& f) {
    return radial_laplace_b(f) + radial_laplace_f(f);
}

SuperElement to_coordinates(const RadialExpr& f) {
    const int m = f.m(), n = f.n();
    // r^2, the bosonic and fermionic vector variables, and the fermionic
    // vector squared (a pure Grassmann element).
    SuperElement r2 = SuperElement::zero(m, n);
    for (int i = 1; i <= m; ++i)
        r2 = r2 + SuperElement::coordinate(m, n, i) * SuperElement::coordinate(m, n, i);
    SuperElement xv = SuperElement::zero(m, n);
    for (int i = 1; i <= m; ++i)
        xv = xv + SuperElement::coordinate(m, n, i) * SuperElement::clifford(m, n, i);
    SuperElement xgv = SuperElement::zero(m, n);
    for (int j = 1; j <= 2 * n; ++j)
        xgv = xgv + SuperElement::grassmann(m, n, j) * SuperElement::symplectic(m, n, j);
    SuperElement xgv2 = SuperElement::zero(m, n);
    for (int j = 1; j <= n; ++j)
        xgv2 = xgv2 + SuperElement::grassmann(m, n, 2 * j - 1) *
                          SuperElement::grassmann(m, n, 2 * j);

    SuperElement out = SuperElement::zero(m, n);
    for (const auto& [k, c] : f.terms()) {
        if (k.alpha < 0 || (k.alpha & 1))
            throw NotPolynomialError("to_coordinates: r^" + std::to_string(k.alpha) +
                                     " is not polynomial");
        SuperElement t = pow(r2, k.alpha / 2);
        if (k.xvec) t = t * xv;
        t = t * pow(xgv2, k.beta / 2);
        if (k.beta & 1) t = t * xgv;
        out = out + c * t;
    }
    return out;
}

std::vector<SectorValue> eval_numeric(const RadialExpr& f, const std::vector<double>& point) {
    if (static_cast<int>(point.size()) != f.m())
        throw DimensionMismatchError("eval_numeric: point has wrong dimension");
    double r2 = 0.0;
    for (double x : point) r2 += x * x;
    double r = std::sqrt(r2);

    std::map<std::pair<bool, int>, double> acc;
    for (const auto& [k, c] : f.terms()) {
        if (k.alpha < 0 && r == 0.0)
            throw SingularityError("eval_numeric: r^" + std::to_string(k.alpha) +
                                   " at the origin");
        acc[{k.xvec, k.beta}] += c.value() * std::pow(r, k.alpha);
    }

    std::vector<SectorValue> out;
    for (const auto& [key, v] : acc) {
        SectorValue s;
        s.xvec = key.first;
        s.beta = key.second;
        s.value = v;
        if (s.xvec) {
            s.vector_part.resize(point.size());
            for (std::size_t i = 0; i < point.size(); ++i) s.vector_part[i] = v * point[i];
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace supersol
