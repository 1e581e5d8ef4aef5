#include "flagforms/presentations.hpp"

#include <chrono>
#include <random>

#include "flagforms/edge_algebra.hpp"
#include "flagforms/groebner.hpp"

namespace flagforms {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string series_note(const RankReport& report) {
    std::string s = "primes";
    for (const auto& d : report.degrees) {
        s += " d" + std::to_string(d.degree) + ":" + std::to_string(d.prime1) + "," +
             std::to_string(d.prime2);
        if (d.exact_used) s += "(exact)";
    }
    return s;
}

void enumerate_subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
}

}  // namespace

VerificationResult verify_presentation(int k, int n, const RankConfig& cfg) {
    auto start = Clock::now();
    VerificationResult r;
    r.name = "presentation";
    r.k = k;
    r.n = n;
    r.seed = cfg.seed;
    RankReport report;
    r.left = hilbert_series_rank(k, n, {}, cfg, &report);
    r.right = hilbert_series_quotient(vanishing_ideal_basis(k, n));
    r.pass = r.left == r.right;
    r.notes.push_back(series_note(report));
    if (report.any_exact_fallback()) r.notes.push_back("exact fallback triggered");
    r.elapsed_ms = ms_since(start);
    return r;
}

VerificationResult verify_subset_independence(int k, int n, const RankConfig& cfg) {
    auto start = Clock::now();
    VerificationResult r;
    r.name = "subset_independence";
    r.k = k;
    r.n = n;
    r.seed = cfg.seed;
    std::vector<std::vector<int>> subsets;
    enumerate_subsets(n, k, subsets);
    r.pass = true;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        HilbertSeries s = hilbert_series_rank(k, n, subsets[i], cfg);
        if (i == 0) r.left = s;
        r.right = s;
        if (!(s == r.left)) r.pass = false;
    }
    r.notes.push_back(std::to_string(subsets.size()) + " subsets checked");
    r.elapsed_ms = ms_since(start);
    return r;
}

VerificationResult compare_with_cohomology(int n, const RankConfig& cfg) {
    auto start = Clock::now();
    VerificationResult r;
    r.name = "cohomology_comparison";
    r.k = n;
    r.n = n;
    r.seed = cfg.seed;
    r.left = hilbert_series_rank(n, n, {}, cfg);
    r.right = cohomology_poincare(n);
    std::size_t len = std::max(r.left.size(), r.right.size());
    r.pass = true;
    for (std::size_t d = 0; d < len; ++d) {
        std::int64_t diff = r.left[d] - r.right[d];
        r.difference.push_back(diff);
        if (diff < 0) r.pass = false;
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

namespace {

RationalPolynomial random_small_polynomial(std::mt19937_64& rng, int k, int max_degree,
                                           int terms) {
    std::uniform_int_distribution<int> coeff_dist(-3, 3);
    std::uniform_int_distribution<int> degree_dist(0, max_degree);
    std::vector<PolyTerm> out;
    for (int t = 0; t < terms; ++t) {
        int c = coeff_dist(rng);
        int d = degree_dist(rng);
        Exponents mono(k, 0);
        for (int rep = 0; rep < d; ++rep) {
            std::uniform_int_distribution<int> var_dist(0, k - 1);
            ++mono[var_dist(rng)];
        }
        if (c != 0) out.push_back({std::move(mono), Rational(c)});
    }
    return RationalPolynomial::from_terms(std::move(out), k);
}

}  // namespace

VerificationResult verify_derivative_criterion(int k, int n, int samples, std::uint64_t seed) {
    auto start = Clock::now();
    VerificationResult r;
    r.name = "derivative_criterion";
    r.k = k;
    r.n = n;
    r.seed = seed;
    if (samples < 2) throw std::invalid_argument("need at least 2 samples");

    std::uint64_t mix = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(k) << 32 |
                                                     static_cast<std::uint64_t>(n)));
    std::mt19937_64 rng(mix);
    IdealSpec ideal = build_ideal_generators(k, n);
    const GroebnerBasis& basis = vanishing_ideal_basis(k, n);
    std::vector<int> subset = default_subset(k);

    int members = samples / 2, non_members = samples - samples / 2;
    int disagreements = 0, member_failures = 0;

    auto check_triple = [&](const RationalPolynomial& p, bool expect_member) {
        bool by_eval = evaluate_polynomial(p, subset, n).is_zero();
        bool by_nf = normal_form(p, basis).is_zero();
        bool by_deriv = membership_via_derivatives(p, k, n);
        if (by_eval != by_nf || by_nf != by_deriv) ++disagreements;
        if (by_eval != expect_member) ++member_failures;
    };

    for (int s = 0; s < members; ++s) {
        RationalPolynomial p(k);
        for (const auto& g : ideal.generators) p += random_small_polynomial(rng, k, 2, 2) * g;
        check_triple(p, true);
    }
    for (int s = 0; s < non_members; ++s) {
        RationalPolynomial p(k);
        // resample until the evaluation oracle confirms a non-member
        do {
            p = random_small_polynomial(rng, k, 3, 4);
        } while (evaluate_polynomial(p, subset, n).is_zero());
        check_triple(p, false);
    }

    r.pass = disagreements == 0 && member_failures == 0;
    r.notes.push_back("members=" + std::to_string(members) +
                      " non_members=" + std::to_string(non_members) +
                      " disagreements=" + std::to_string(disagreements));
    r.elapsed_ms = ms_since(start);
    return r;
}

}  // namespace flagforms
