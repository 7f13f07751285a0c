#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supersol/super_element.hpp"

namespace supersol {

// ---------------------------------------------------------------------------
// Exact calculus on the radial span: sums of  c * r^alpha * xv^eps * xgv^beta
// where r = sqrt(-xv^2) is the bosonic radius, xv is at most one factor of
// the bosonic vector variable and xgv^beta a power of the fermionic vector
// variable (beta <= 2n; higher powers vanish). Every fundamental solution
// constructed in this project lives in this span. The rewrite rules below are
// validated against the coordinate algebra on polynomial instances, never
// trusted on their own.
// ---------------------------------------------------------------------------

struct RadialKey {
    int alpha = 0;   // power of r
    bool xvec = false;  // one factor of the bosonic vector variable present?
    int beta = 0;    // power of the fermionic vector variable, 0..2n

    friend bool operator==(const RadialKey&, const RadialKey&) = default;
    friend bool operator<(const RadialKey& a, const RadialKey& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        if (a.xvec != b.xvec) return a.xvec < b.xvec;
        return a.beta < b.beta;
    }
};

struct RadialTerm {
    Coefficient c;
    int alpha = 0;
    bool xvec = false;
    int beta = 0;
};

class RadialExpr {
public:
    RadialExpr() : RadialExpr(0, 0) {}
    RadialExpr(int m, int n) : m_(m), n_(n) {}

    int m() const { return m_; }
    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<RadialKey, Coefficient>& terms() const { return terms_; }
    std::vector<RadialTerm> term_list() const;

    // Terms with beta > 2n are identically zero and silently dropped.
    void add_term(int alpha, bool xvec, int beta, const Coefficient& c);

    RadialExpr operator-() const;
    friend RadialExpr operator+(const RadialExpr& a, const RadialExpr& b);
    friend RadialExpr operator-(const RadialExpr& a, const RadialExpr& b);
    friend RadialExpr operator*(const Coefficient& c, const RadialExpr& a);

    friend bool operator==(const RadialExpr& a, const RadialExpr& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const RadialExpr& a, const RadialExpr& b) { return !(a == b); }

    std::string to_string() const;

    static RadialExpr zero(int m, int n) { return RadialExpr(m, n); }
    static RadialExpr term(int m, int n, Coefficient c, int alpha, bool xvec, int beta);

private:
    int m_, n_;
    std::map<RadialKey, Coefficient> terms_;
};

// Bilinear product with the graded sign rules: xv^2 = -r^2, xv and the
// fermionic vector anticommute, beta overflow truncates to zero.
RadialExpr radial_multiply(const RadialExpr& a, const RadialExpr& b);

// Super Dirac operator in closed form. For polynomial inputs this coincides
// with the coordinate dirac() after expansion (tested, not assumed).
RadialExpr radial_dirac(const RadialExpr& f);

// The bosonic vector derivative alone (the operator whose square is the
// bosonic Laplace operator). Used for the odd classical kernels.
RadialExpr radial_partial_bosonic_vector(const RadialExpr& f);

RadialExpr radial_laplace_b(const RadialExpr& f);
RadialExpr radial_laplace_f(const RadialExpr& f);
RadialExpr radial_laplace(const RadialExpr& f);

// Expansion into the coordinate algebra; requires every alpha even and >= 0.
SuperElement to_coordinates(const RadialExpr& f);

// Numeric evaluation at a bosonic point. Per (xvec, beta) sector: the scalar
// coefficient sum_alpha c * |p|^alpha, and for xvec sectors additionally the
// m-vector (coefficient times the components of p).
struct SectorValue {
    bool xvec = false;
    int beta = 0;
    double value = 0.0;
    std::vector<double> vector_part;  // empty unless xvec
};
std::vector<SectorValue> eval_numeric(const RadialExpr& f, const std::vector<double>& point);

}  // namespace supersol
