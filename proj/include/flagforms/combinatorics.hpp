#pragma once

#include <vector>

#include "flagforms/common.hpp"
#include "flagforms/exact_linalg.hpp"

namespace flagforms {

// Labeled trees on m vertices: m^(m-2), with the m = 1, 2 cases equal to 1.
Integer tree_count(int m);

// Unrooted labeled forests (acyclic simple graphs) on n vertices, by
// conditioning on the tree containing vertex n:
// f(n) = sum_m C(n-1, m-1) * m^(m-2) * f(n-m), f(0) = 1.
Integer forest_count(int n);

// Oracle for the recurrence: scans all edge subsets of K_n with a
// union-find acyclicity check. Capped at n = 6 (2^15 subsets).
Integer forest_count_bruteforce(int n);

// Loop-free digraphs (at most one arc per ordered pair) with indegree equal
// to outdegree everywhere, the empty digraph included. Capped at n = 5
// (2^20 arc subsets). Must match the invariant-forms total Z(n).
Integer eulerian_bruteforce(int n);

struct ConjectureTotalEntry {
    int n = 0;
    Integer total_dim;
    HilbertSeries series;
    Integer forests;
    bool match = false;
};

struct ConjectureTotalReport {
    std::vector<ConjectureTotalEntry> entries;
    bool all_match = true;
};

// Total dimension of A_n against the forest count, n = 1..n_max.
ConjectureTotalReport verify_conjecture_total(int n_max, const RankConfig& cfg = {});

struct ConjecturePolynomialReport {
    int k = 0;
    std::vector<int> n_values;
    std::vector<Integer> totals;
    // difference_table[0] = totals, each next row the finite differences
    std::vector<std::vector<Integer>> difference_table;
    bool is_monic_degree_k = false;
};

// Finite-difference test of "dim A_{k,n} is a monic degree-k polynomial
// in n": the k-th difference must be the constant k!.
ConjecturePolynomialReport verify_conjecture_polynomial(int k, int n_from, int n_to,
                                                        const RankConfig& cfg = {});

}  // namespace flagforms
