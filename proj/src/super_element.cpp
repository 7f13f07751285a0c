#include "supersol/super_element.hpp"

#include <atomic>
#include <bit>
#include <sstream>

#include "supersol/errors.hpp"

namespace supersol {

namespace {

std::atomic<int> g_weyl_limit{16};

void check_index(int idx, int hi, const char* what) {
    if (idx < 1 || idx > hi)
        throw IndexError(std::string(what) + " index " + std::to_string(idx) +
                         " outside [1, " + std::to_string(hi) + "]");
}

void check_same_dims(const SuperElement& a, const SuperElement& b) {
    if (a.m() != b.m() || a.n() != b.n())
        throw DimensionMismatchError(
            "elements over R^{" + std::to_string(a.m()) + "|" + std::to_string(2 * a.n()) +
            "} and R^{" + std::to_string(b.m()) + "|" + std::to_string(2 * b.n()) + "}");
}

// Number of inversions between two ascending index sets: pairs (i in a,
// j in b) with i > j. Odd count means one transposition sign.
int interleave_sign(std::uint32_t a, std::uint32_t b) {
    int inv = 0;
    while (a) {
        std::uint32_t low = a & (~a + 1);          // lowest set bit of a
        inv += std::popcount(b & (low - 1));       // bits of b strictly below it
        a ^= low;
    }
    return (inv & 1) ? -1 : 1;
}

// Sign of the Clifford blade product e_A e_B -> e_{A xor B}: interleaving
// transpositions plus e_j^2 = -1 on every shared index.
int clifford_sign(std::uint32_t a, std::uint32_t b) {
    int s = interleave_sign(a, b);
    if (std::popcount(a & b) & 1) s = -s;
    return s;
}

// Weyl reordering inside one symplectic pair (a = odd gen, b = even gen,
// ab - ba = 1): b^q a^r = sum_t (-1)^t t! C(q,t) C(r,t) a^{r-t} b^{q-t}.
// Recursively expands all n pairs, emitting (w_exp, integer coefficient).
void expand_weyl(const std::vector<int>& wa, const std::vector<int>& wb, int pair,
                 std::vector<int>& acc, const Rational& coef,
                 std::vector<std::pair<std::vector<int>, Rational>>& out) {
    int n = static_cast<int>(wa.size()) / 2;
    if (pair == n) {
        out.emplace_back(acc, coef);
        return;
    }
    int p = wa[2 * pair], q = wa[2 * pair + 1];
    int r = wb[2 * pair], s = wb[2 * pair + 1];
    int tmax = std::min(q, r);
    for (int t = 0; t <= tmax; ++t) {
        Rational c = factorial(t) * binomial(q, t) * binomial(r, t);
        if (t & 1) c = -c;
        acc[2 * pair] = p + r - t;
        acc[2 * pair + 1] = q + s - t;
        expand_weyl(wa, wb, pair + 1, acc, coef * c, out);
    }
    acc[2 * pair] = 0;
    acc[2 * pair + 1] = 0;
}

}  // namespace

int weyl_degree_limit() { return g_weyl_limit.load(); }
void set_weyl_degree_limit(int limit) { g_weyl_limit.store(limit); }

SuperElement::SuperElement(int m, int n) : m_(m), n_(n) {
    if (m < 0 || n < 0 || m > 30 || n > 15)
        throw UnsupportedDimensionError("SuperElement: dimensions out of range");
}

void SuperElement::add_term(const BasisMonomial& mono, const Coefficient& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SuperElement SuperElement::operator-() const {
    SuperElement r(m_, n_);
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

SuperElement operator+(const SuperElement& a, const SuperElement& b) {
    check_same_dims(a, b);
    SuperElement r = a;
    for (const auto& [mono, c] : b.terms_) r.add_term(mono, c);
    return r;
}

SuperElement operator-(const SuperElement& a, const SuperElement& b) {
    check_same_dims(a, b);
    SuperElement r = a;
    for (const auto& [mono, c] : b.terms_) r.add_term(mono, -c);
    return r;
}

SuperElement operator*(const Coefficient& c, const SuperElement& a) {
    SuperElement r(a.m(), a.n());
    for (const auto& [mono, tc] : a.terms_) r.add_term(mono, c * tc);
    return r;
}

SuperElement SuperElement::zero(int m, int n) { return SuperElement(m, n); }

SuperElement SuperElement::scalar(int m, int n, Coefficient c) {
    SuperElement r(m, n);
    BasisMonomial mono{std::vector<int>(m, 0), 0, 0, std::vector<int>(2 * n, 0)};
    r.add_term(mono, c);
    return r;
}

SuperElement SuperElement::coordinate(int m, int n, int i) {
    check_index(i, m, "coordinate");
    SuperElement r(m, n);
    BasisMonomial mono{std::vector<int>(m, 0), 0, 0, std::vector<int>(2 * n, 0)};
    mono.x_exp[i - 1] = 1;
    r.add_term(mono, Coefficient(1));
    return r;
}

SuperElement SuperElement::grassmann(int m, int n, int j) {
    check_index(j, 2 * n, "Grassmann");
    SuperElement r(m, n);
    BasisMonomial mono{std::vector<int>(m, 0), 1u << (j - 1), 0, std::vector<int>(2 * n, 0)};
    r.add_term(mono, Coefficient(1));
    return r;
}

SuperElement SuperElement::clifford(int m, int n, int i) {
    check_index(i, m, "Clifford");
    SuperElement r(m, n);
    BasisMonomial mono{std::vector<int>(m, 0), 0, 1u << (i - 1), std::vector<int>(2 * n, 0)};
    r.add_term(mono, Coefficient(1));
    return r;
}

SuperElement SuperElement::symplectic(int m, int n, int j) {
    check_index(j, 2 * n, "symplectic");
    SuperElement r(m, n);
    BasisMonomial mono{std::vector<int>(m, 0), 0, 0, std::vector<int>(2 * n, 0)};
    mono.w_exp[j - 1] = 1;
    r.add_term(mono, Coefficient(1));
    return r;
}

std::string SuperElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (int i = 0; i < m_; ++i)
            if (mono.x_exp[i] > 0) {
                os << " x" << i + 1;
                if (mono.x_exp[i] > 1) os << "^" << mono.x_exp[i];
            }
        for (int j = 0; j < 2 * n_; ++j)
            if (mono.g_mask >> j & 1) os << " xg" << j + 1;
        for (int i = 0; i < m_; ++i)
            if (mono.e_mask >> i & 1) os << " e" << i + 1;
        for (int j = 0; j < 2 * n_; ++j)
            if (mono.w_exp[j] > 0) {
                os << " eg" << j + 1;
                if (mono.w_exp[j] > 1) os << "^" << mono.w_exp[j];
            }
    }
    return os.str();
}

SuperElement multiply(const SuperElement& a, const SuperElement& b) {
    check_same_dims(a, b);
    const int m = a.m(), n = a.n();
    const int limit = weyl_degree_limit();

    SuperElement out(m, n);
    std::vector<std::pair<std::vector<int>, Rational>> weyl_terms;
    std::vector<int> acc(2 * n, 0);

    for (const auto& [ma, ca] : a.terms()) {
        if (ma.weyl_degree() > limit)
            throw DegreeLimitError("multiply: Weyl degree " + std::to_string(ma.weyl_degree()) +
                                   " exceeds limit " + std::to_string(limit));
        for (const auto& [mb, cb] : b.terms()) {
            if (mb.weyl_degree() > limit)
                throw DegreeLimitError("multiply: Weyl degree " +
                                       std::to_string(mb.weyl_degree()) + " exceeds limit " +
                                       std::to_string(limit));
            // Grassmann parts: zero on overlap, else interleaving sign.
            if (ma.g_mask & mb.g_mask) continue;
            int sign = interleave_sign(ma.g_mask, mb.g_mask);
            // b's Clifford blade moves through a's symplectic word.
            if ((ma.weyl_degree() & 1) && (std::popcount(mb.e_mask) & 1)) sign = -sign;
            sign *= clifford_sign(ma.e_mask, mb.e_mask);

            BasisMonomial mono;
            mono.x_exp.resize(m);
            for (int i = 0; i < m; ++i) mono.x_exp[i] = ma.x_exp[i] + mb.x_exp[i];
            mono.g_mask = ma.g_mask | mb.g_mask;
            mono.e_mask = ma.e_mask ^ mb.e_mask;

            Coefficient c = ca * cb;
            if (sign < 0) c = -c;

            // Symplectic words merge pairwise with Weyl contractions.
            weyl_terms.clear();
            expand_weyl(ma.w_exp, mb.w_exp, 0, acc, Rational(1), weyl_terms);
            for (auto& [w, q] : weyl_terms) {
                mono.w_exp = std::move(w);
                out.add_term(mono, c * Coefficient(q));
            }
        }
    }
    return out;
}

SuperElement operator*(const SuperElement& a, const SuperElement& b) { return multiply(a, b); }

SuperElement pow(const SuperElement& a, int k) {
    if (k < 0) throw Error("pow: negative exponent");
    SuperElement r = SuperElement::one(a.m(), a.n());
    for (int i = 0; i < k; ++i) r = multiply(r, a);
    return r;
}

SuperElement vector_variable(int m, int n) {
    if (m == 0 && n == 0)
        throw UnsupportedDimensionError("vector_variable: empty algebra (m = n = 0)");
    SuperElement r(m, n);
    for (int i = 1; i <= m; ++i)
        r = r + SuperElement::coordinate(m, n, i) * SuperElement::clifford(m, n, i);
    for (int j = 1; j <= 2 * n; ++j)
        r = r + SuperElement::grassmann(m, n, j) * SuperElement::symplectic(m, n, j);
    return r;
}

SuperElement partial_bosonic(const SuperElement& f, int i) {
    check_index(i, f.m(), "partial_bosonic");
    SuperElement r(f.m(), f.n());
    for (const auto& [mono, c] : f.terms()) {
        int e = mono.x_exp[i - 1];
        if (e == 0) continue;
        BasisMonomial d = mono;
        d.x_exp[i - 1] = e - 1;
        r.add_term(d, c * Coefficient(Rational(e)));
    }
    return r;
}

SuperElement partial_fermionic(const SuperElement& f, int j) {
    check_index(j, 2 * f.n(), "partial_fermionic");
    const std::uint32_t bit = 1u << (j - 1);
    SuperElement r(f.m(), f.n());
    for (const auto& [mono, c] : f.terms()) {
        if (!(mono.g_mask & bit)) continue;
        int below = std::popcount(mono.g_mask & (bit - 1));
        BasisMonomial d = mono;
        d.g_mask &= ~bit;
        r.add_term(d, (below & 1) ? -c : c);
    }
    return r;
}

SuperElement dirac(const SuperElement& f) {
    const int m = f.m(), n = f.n();
    SuperElement out = SuperElement::zero(m, n);
    Coefficient two(Rational(2));
    for (int j = 1; j <= n; ++j) {
        out = out + two * (SuperElement::symplectic(m, n, 2 * j) *
                           partial_fermionic(f, 2 * j - 1));
        out = out - two * (SuperElement::symplectic(m, n, 2 * j - 1) *
                           partial_fermionic(f, 2 * j));
    }
    for (int i = 1; i <= m; ++i)
        out = out - SuperElement::clifford(m, n, i) * partial_bosonic(f, i);
    return out;
}

SuperElement laplace_bosonic(const SuperElement& f) {
    SuperElement out = SuperElement::zero(f.m(), f.n());
    for (int i = 1; i <= f.m(); ++i)
        out = out - partial_bosonic(partial_bosonic(f, i), i);
    return out;
}

SuperElement laplace_fermionic(const SuperElement& f) {
    SuperElement out = SuperElement::zero(f.m(), f.n());
    Coefficient four(Rational(4));
    for (int j = 1; j <= f.n(); ++j)
        out = out + four * partial_fermionic(partial_fermionic(f, 2 * j), 2 * j - 1);
    return out;
}

SuperElement laplace(const SuperElement& f) {
    return laplace_bosonic(f) + laplace_fermionic(f);
}

}  // namespace supersol
