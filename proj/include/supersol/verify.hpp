#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supersol/fundsol.hpp"

namespace supersol {

struct CheckReport {
    std::string id;
    int m = 0, n = 0, k = 0;
    bool pass = false;
    std::string witness;  // first failing term or sector; empty on pass
    std::string detail;   // extra facts (ranks, counts) for passing checks too
    long term_count = 0;
    double elapsed_ms = 0.0;
};

// Exact annihilation: the k-th Laplace power kills the order-2k kernel and
// the (2k+1)-fold Dirac power kills the order-(2k+1) kernel, term for term.
std::vector<CheckReport> annihilation_suite(const std::vector<int>& ms,
                                            const std::vector<int>& ns,
                                            const std::vector<int>& ks);

// Exact linear algebra over the full Grassmann polynomial basis (dimension
// 4^n): the purely fermionic equation "fermionic Laplacian of g equals the
// top monomial" is certified infeasible by comparing ranks of the operator
// matrix and its augmented version. SAT instances return an explicit g.
struct FermionicSolveResult {
    bool sat = false;
    int rank = 0;
    int rank_augmented = 0;
    std::vector<Rational> solution;  // coefficients per basis mask when SAT
};
FermionicSolveResult fermionic_solve(int n, const std::vector<Rational>& target);
CheckReport fermionic_no_solution(int n);

// Closed form of the auxiliary sequence vs. its defining recurrence, exact.
CheckReport lemma_bruteforce(int k_max, int l_max);

// Randomized exact comparison of the radial rewrite rules against the
// coordinate algebra on polynomial instances; deterministic per seed.
std::vector<CheckReport> oracle_equivalence_suite(int m_max, int n_max, int degree_max,
                                                  int trials, std::uint64_t seed);

// The linear system behind the higher-order coefficients: the constructed
// a_l annihilate the expansion sum for 1 <= l <= n.
CheckReport coefficient_system_check(int n_max, int k_max);

bool all_pass(const std::vector<CheckReport>& reports);

}  // namespace supersol
