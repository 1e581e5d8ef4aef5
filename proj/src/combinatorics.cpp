#include "flagforms/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace flagforms {

Integer tree_count(int m) {
    if (m < 1) throw std::invalid_argument("tree count needs m >= 1");
    if (m <= 2) return 1;
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(m - 2));
    return r;
}

Integer forest_count(int n) {
    if (n < 0) throw std::invalid_argument("forest count needs n >= 0");
    std::vector<Integer> f(static_cast<std::size_t>(n) + 1);
    f[0] = 1;
    for (int i = 1; i <= n; ++i) {
        Integer total = 0;
        for (int m = 1; m <= i; ++m)
            total += binomial(static_cast<unsigned long>(i - 1), static_cast<unsigned long>(m - 1)) *
                     tree_count(m) * f[static_cast<std::size_t>(i - m)];
        f[static_cast<std::size_t>(i)] = total;
    }
    return f[static_cast<std::size_t>(n)];
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // false when x and y were already connected (a cycle would close)
    bool unite(int x, int y) {
        int a = find(x), b = find(y);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

Integer forest_count_bruteforce(int n) {
    if (n < 0) throw std::invalid_argument("forest count needs n >= 0");
    if (n > 6) throw resource_error("forest brute force capped at n = 6");
    if (n <= 1) return 1;
    int E = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    Integer count = 0;
    for (std::uint32_t mask = 0; mask < (1u << E); ++mask) {
        UnionFind uf(n);
        bool acyclic = true;
        for (int b = 0; b < E && acyclic; ++b)
            if (mask & (1u << b)) acyclic = uf.unite(edges[b].first, edges[b].second);
        if (acyclic) ++count;
    }
    return count;
}

Integer eulerian_bruteforce(int n) {
    if (n < 1) throw std::invalid_argument("eulerian count needs n >= 1");
    if (n > 5) throw resource_error("eulerian brute force capped at n = 5");
    std::vector<std::pair<int, int>> arcs;  // all ordered pairs
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) arcs.emplace_back(i, j);
    int A = static_cast<int>(arcs.size());
    Integer count = 0;
    std::vector<int> imbalance(static_cast<std::size_t>(n));
    for (std::uint32_t mask = 0; mask < (1u << A); ++mask) {
        std::fill(imbalance.begin(), imbalance.end(), 0);
        for (int b = 0; b < A; ++b)
            if (mask & (1u << b)) {
                ++imbalance[static_cast<std::size_t>(arcs[b].first)];
                --imbalance[static_cast<std::size_t>(arcs[b].second)];
            }
        bool balanced = true;
        for (int x : imbalance)
            if (x != 0) {
                balanced = false;
                break;
            }
        if (balanced) ++count;
    }
    return count;
}

ConjectureTotalReport verify_conjecture_total(int n_max, const RankConfig& cfg) {
    if (n_max < 1) throw std::invalid_argument("need n_max >= 1");
    ConjectureTotalReport report;
    for (int n = 1; n <= n_max; ++n) {
        ConjectureTotalEntry entry;
        entry.n = n;
        entry.series = hilbert_series_rank(n, n, {}, cfg);
        entry.total_dim = entry.series.total();
        entry.forests = forest_count(n);
        entry.match = entry.total_dim == entry.forests;
        report.all_match = report.all_match && entry.match;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

ConjecturePolynomialReport verify_conjecture_polynomial(int k, int n_from, int n_to,
                                                        const RankConfig& cfg) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    if (n_from < k) throw std::invalid_argument("range must start at n >= k");
    if (n_to - n_from + 1 < k + 2)
        throw std::invalid_argument("need at least k + 2 consecutive n values");
    ConjecturePolynomialReport report;
    report.k = k;
    for (int n = n_from; n <= n_to; ++n) {
        report.n_values.push_back(n);
        report.totals.push_back(hilbert_series_rank(k, n, {}, cfg).total());
    }
    report.difference_table.push_back(report.totals);
    for (int level = 1; level <= k; ++level) {
        const auto& prev = report.difference_table.back();
        std::vector<Integer> next;
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
        report.difference_table.push_back(std::move(next));
    }
    Integer factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(k));
    const auto& kth = report.difference_table.back();
    report.is_monic_degree_k = !kth.empty();
    for (const auto& v : kth)
        if (v != factorial) report.is_monic_degree_k = false;
    return report;
}

}  // namespace flagforms
