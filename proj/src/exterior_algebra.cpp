#include "flagforms/exterior_algebra.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace flagforms {

int generator_index(OneFormGenerator g, int n) {
    return 2 * edge_index(g.edge, n) + (g.kind == FormKind::conjugate ? 1 : 0);
}

OneFormGenerator generator_from_index(int index, int n) {
    if (index < 0 || index >= 2 * edge_count(n))
        throw std::invalid_argument("generator index out of range");
    return OneFormGenerator{edge_from_index(index / 2, n),
                            (index % 2) ? FormKind::conjugate : FormKind::plain};
}

std::vector<int> alpha_coordinates(const Multiweight& w) {
    int sum = 0;
    for (int x : w) sum += x;
    if (sum != 0) throw std::invalid_argument("multiweight entries must sum to zero");
    std::vector<int> alpha(w.size() - 1);
    int prefix = 0;
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
        prefix += w[t];
        alpha[t] = prefix;
    }
    return alpha;
}

int ExteriorMonomial::degree() const { return std::popcount(gens); }

ExteriorMonomial exterior_one(int n) {
    check_ambient(n);
    return ExteriorMonomial{n, 0, 1};
}

ExteriorMonomial exterior_generator(OneFormGenerator g, int n) {
    check_ambient(n);
    return ExteriorMonomial{n, GeneratorMask{1} << generator_index(g, n), 1};
}

std::optional<ExteriorMonomial> wedge(const ExteriorMonomial& m1, const ExteriorMonomial& m2) {
    if (m1.n != m2.n) throw std::invalid_argument("ambient size mismatch");
    if (m1.gens & m2.gens) return std::nullopt;
    // inversions between the two sorted factor lists: for each generator of
    // m2, count the generators of m1 above it
    int inversions = 0;
    GeneratorMask rest = m2.gens;
    while (rest) {
        int b = std::countr_zero(rest);
        rest &= rest - 1;
        inversions += std::popcount(m1.gens >> (b + 1));
    }
    int sign = m1.sign * m2.sign * ((inversions % 2) ? -1 : 1);
    return ExteriorMonomial{m1.n, m1.gens | m2.gens, sign};
}

ExteriorMonomial gamma_embed(Edge e, int n) {
    check_edge(e, n);
    auto a = exterior_generator({e, FormKind::plain}, n);
    auto abar = exterior_generator({e, FormKind::conjugate}, n);
    return *wedge(a, abar);
}

Multiweight multiweight_of_mask(GeneratorMask gens, int n) {
    Multiweight w(n, 0);
    while (gens) {
        int b = std::countr_zero(gens);
        gens &= gens - 1;
        OneFormGenerator g = generator_from_index(b, n);
        int s = (g.kind == FormKind::plain) ? 1 : -1;
        w[g.edge.i - 1] += s;
        w[g.edge.j - 1] -= s;
    }
    return w;
}

Multiweight multiweight_of(const ExteriorMonomial& m) { return multiweight_of_mask(m.gens, m.n); }

bool Digraph::eulerian() const {
    std::vector<int> imbalance(n, 0);
    for (auto [tail, head] : arcs) {
        ++imbalance[tail - 1];
        --imbalance[head - 1];
    }
    for (int x : imbalance)
        if (x != 0) return false;
    return true;
}

Digraph monomial_to_digraph(const ExteriorMonomial& m) {
    Digraph d{m.n, {}};
    GeneratorMask rest = m.gens;
    while (rest) {
        int b = std::countr_zero(rest);
        rest &= rest - 1;
        OneFormGenerator g = generator_from_index(b, m.n);
        if (g.kind == FormKind::plain)
            d.arcs.emplace_back(g.edge.i, g.edge.j);
        else
            d.arcs.emplace_back(g.edge.j, g.edge.i);
    }
    std::sort(d.arcs.begin(), d.arcs.end());
    return d;
}

namespace {

// Depth-first walk over edges; each edge contributes neither, a, abar, or
// both generators. Prunes when the remaining edges cannot cancel the
// accumulated imbalance (one generator moves total |imbalance| by at most 2).
struct InvariantCounter {
    int n;
    int edges;
    std::vector<Edge> edge_list;
    std::vector<std::int64_t> counts;
    std::vector<int> imbalance;
    int abs_sum = 0;

    explicit InvariantCounter(int n_) : n(n_), edges(edge_count(n_)) {
        for (int idx = 0; idx < edges; ++idx) edge_list.push_back(edge_from_index(idx, n));
        counts.assign(2 * edges + 1, 0);
        imbalance.assign(n, 0);
    }

    void apply(int vi, int vj, int s) {
        abs_sum -= std::abs(imbalance[vi]) + std::abs(imbalance[vj]);
        imbalance[vi] += s;
        imbalance[vj] -= s;
        abs_sum += std::abs(imbalance[vi]) + std::abs(imbalance[vj]);
    }

    void walk(int e, int degree) {
        // a single edge can lower the total imbalance by at most 2
        if (abs_sum > 2 * (edges - e)) return;
        if (e == edges) {
            if (abs_sum == 0) ++counts[degree];
            return;
        }
        int vi = edge_list[e].i - 1, vj = edge_list[e].j - 1;
        walk(e + 1, degree);  // neither
        apply(vi, vj, 1);     // a only
        walk(e + 1, degree + 1);
        apply(vi, vj, -1);    // both: weight cancels
        walk(e + 1, degree + 2);
        apply(vi, vj, -1);    // abar only
        walk(e + 1, degree + 1);
        apply(vi, vj, 1);     // restore
    }
};

}  // namespace

HilbertSeries invariant_forms_hilbert(int n, bool allow_large) {
    check_ambient(n);
    if (n < 2) throw std::invalid_argument("invariant forms need n >= 2");
    int cap = allow_large ? 6 : 5;
    if (n > cap)
        throw resource_error("invariant-forms enumeration capped at n = " + std::to_string(cap) +
                             (allow_large ? "" : " (use the long-run flag for n = 6)"));
    InvariantCounter counter(n);
    counter.walk(0, 0);
    return HilbertSeries{std::move(counter.counts)};
}

EulerianIdentityReport eulerian_identity_check(int n, bool allow_large) {
    HilbertSeries series = invariant_forms_hilbert(n, allow_large);
    EulerianIdentityReport report;
    report.n = n;
    report.zero_weight_total = series.total();
    report.symmetric_count = Integer(1) << edge_count(n);
    Integer diff = report.zero_weight_total - report.symmetric_count;
    if (diff < 0 || diff % 2 != 0)
        throw std::logic_error("reversal-pairing identity violated: Z - 2^C(n,2) = " +
                               diff.get_str());
    report.implied_eulerian = diff / 2;
    return report;
}

}  // namespace flagforms
