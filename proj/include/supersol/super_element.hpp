#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "supersol/coefficient.hpp"

namespace supersol {

// ---------------------------------------------------------------------------
// The algebra Alg(x_i, e_i; xg_j, eg_j) over R^{m|2n}:
//   * m commuting variables        x_1..x_m
//   * m orthogonal Clifford gens   e_1..e_m      (e_j e_k + e_k e_j = -2 d_jk)
//   * 2n anticommuting variables   xg_1..xg_2n   (xg_i xg_j = -xg_j xg_i)
//   * 2n symplectic Clifford gens  eg_1..eg_2n
//       (eg_{2j-1} eg_{2k} - eg_{2k} eg_{2j-1} = d_jk, same-parity pairs
//        commute, e_j eg_k + eg_k e_j = 0)
// All e/eg generators commute with all x/xg variables. Everything is kept in
// normal order: x-part, Grassmann part ascending, Clifford blade ascending,
// symplectic part ascending. Reordering the symplectic generators produces
// the lower-degree contraction terms; that is what multiply() implements.
// ---------------------------------------------------------------------------

// One normal-ordered basis monomial. Comparison is lexicographic over the
// four parts, which fixes the canonical term order used everywhere.
struct BasisMonomial {
    std::vector<int> x_exp;  // length m, exponents of x_i
    std::uint32_t g_mask = 0;  // 2n bits, Grassmann monomial in xg_j
    std::uint32_t e_mask = 0;  // m bits, Clifford blade in e_i
    std::vector<int> w_exp;  // length 2n, normal-ordered powers of eg_j

    int weyl_degree() const {
        int d = 0;
        for (int e : w_exp) d += e;
        return d;
    }
    int x_degree() const {
        int d = 0;
        for (int e : x_exp) d += e;
        return d;
    }

    friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
    friend bool operator<(const BasisMonomial& a, const BasisMonomial& b) {
        if (a.x_exp != b.x_exp) return a.x_exp < b.x_exp;
        if (a.g_mask != b.g_mask) return a.g_mask < b.g_mask;
        if (a.e_mask != b.e_mask) return a.e_mask < b.e_mask;
        return a.w_exp < b.w_exp;
    }
};

// Element of the algebra: a finite sum of monomials with exact coefficients.
// Zero coefficients are never stored, so equality is map equality. Values are
// immutable in spirit: every operation returns a fresh element.
class SuperElement {
public:
    SuperElement(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    const std::map<BasisMonomial, Coefficient>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Accumulate c * mono, dropping the term if the sum cancels.
    void add_term(const BasisMonomial& mono, const Coefficient& c);

    SuperElement operator-() const;
    friend SuperElement operator+(const SuperElement& a, const SuperElement& b);
    friend SuperElement operator-(const SuperElement& a, const SuperElement& b);
    friend SuperElement operator*(const Coefficient& c, const SuperElement& a);

    friend bool operator==(const SuperElement& a, const SuperElement& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SuperElement& a, const SuperElement& b) { return !(a == b); }

    std::string to_string() const;

    // --- constructors for the generators -----------------------------------
    static SuperElement zero(int m, int n);
    static SuperElement scalar(int m, int n, Coefficient c);
    static SuperElement one(int m, int n) { return scalar(m, n, Coefficient(1)); }
    static SuperElement coordinate(int m, int n, int i);       // x_i, 1-based
    static SuperElement grassmann(int m, int n, int j);        // xg_j
    static SuperElement clifford(int m, int n, int i);         // e_i
    static SuperElement symplectic(int m, int n, int j);       // eg_j

private:
    int m_, n_;
    std::map<BasisMonomial, Coefficient> terms_;
};

// Guard on the (infinite-dimensional) symplectic part: operations refuse
// inputs whose Weyl-part total degree exceeds this bound.
int weyl_degree_limit();
void set_weyl_degree_limit(int limit);

// Normal-ordered product. Throws DimensionMismatchError on mixed (m, n) and
// DegreeLimitError when an input monomial exceeds the Weyl degree guard.
SuperElement multiply(const SuperElement& a, const SuperElement& b);
SuperElement operator*(const SuperElement& a, const SuperElement& b);
SuperElement pow(const SuperElement& a, int k);

// The vector variable x = sum x_i e_i + sum xg_j eg_j. Throws on m = n = 0.
SuperElement vector_variable(int m, int n);

// d/dx_i, 1-based index.
SuperElement partial_bosonic(const SuperElement& f, int i);

// Left Grassmann derivative d/dxg_j, 1-based index: anticommute xg_j to the
// front (sign = (-1)^{# preceding Grassmann factors}), then delete it.
SuperElement partial_fermionic(const SuperElement& f, int j);

// Super Dirac operator: 2 sum_j (eg_{2j} d_{xg_{2j-1}} - eg_{2j-1} d_{xg_{2j}})
// - sum_i e_i d_{x_i}, with the generator coefficients multiplied in through
// multiply() so everything stays normal-ordered.
SuperElement dirac(const SuperElement& f);

// Super Laplace operator from its coordinate formula
// 4 sum_j d_{xg_{2j-1}} d_{xg_{2j}} - sum_i d_{x_i}^2 (= dirac(dirac(f))).
SuperElement laplace(const SuperElement& f);
SuperElement laplace_bosonic(const SuperElement& f);
SuperElement laplace_fermionic(const SuperElement& f);

}  // namespace supersol
