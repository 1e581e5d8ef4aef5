#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "flagforms/edge_algebra.hpp"

using namespace flagforms;

namespace {

// Independent oracle: polynomials as flat (coeff, edge-index list) term
// lists, multiplied pairwise with an explicit duplicate-edge check. Shares
// no code with GammaPolynomial beyond the edge indexing convention.
using FlatTerm = std::pair<long, std::vector<int>>;
using FlatPoly = std::vector<FlatTerm>;

FlatPoly flat_multiply(const FlatPoly& a, const FlatPoly& b) {
    std::map<std::vector<int>, long> acc;
    for (const auto& [ca, ea] : a)
        for (const auto& [cb, eb] : b) {
            std::vector<int> merged = ea;
            bool dup = false;
            for (int e : eb) {
                if (std::find(merged.begin(), merged.end(), e) != merged.end()) {
                    dup = true;
                    break;
                }
                merged.push_back(e);
            }
            if (dup) continue;
            std::sort(merged.begin(), merged.end());
            acc[merged] += ca * cb;
        }
    FlatPoly out;
    for (auto& [edges, c] : acc)
        if (c != 0) out.push_back({c, edges});
    return out;
}

FlatPoly flat_curvature(int i, int n) {
    FlatPoly w;
    for (int j = i + 1; j <= n; ++j) w.push_back({1, {edge_index(Edge{i, j}, n)}});
    for (int j = 1; j < i; ++j) w.push_back({-1, {edge_index(Edge{j, i}, n)}});
    return w;
}

GammaPolynomial from_flat(const FlatPoly& p, int n) {
    GammaPolynomial out(n);
    for (const auto& [c, edges] : p) {
        EdgeMask mask = 0;
        for (int e : edges) mask |= EdgeMask{1} << e;
        out += GammaPolynomial::monomial(mask, Integer(c), n);
    }
    return out;
}

GammaPolynomial gamma(int i, int j, int n) { return GammaPolynomial::gamma(Edge{i, j}, n); }

GammaPolynomial random_gamma_poly(std::mt19937_64& rng, int n, int terms) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    GammaPolynomial p(n);
    std::uniform_int_distribution<EdgeMask> mask(0, (EdgeMask{1} << edge_count(n)) - 1);
    for (int t = 0; t < terms; ++t) {
        int c = coeff(rng);
        if (c != 0) p += GammaPolynomial::monomial(mask(rng), Integer(c), n);
    }
    return p;
}

}  // namespace

TEST_CASE("edge indexing is lexicographic and round-trips") {
    CHECK(edge_index(Edge{1, 2}, 4) == 0);
    CHECK(edge_index(Edge{1, 3}, 4) == 1);
    CHECK(edge_index(Edge{1, 4}, 4) == 2);
    CHECK(edge_index(Edge{2, 3}, 4) == 3);
    CHECK(edge_index(Edge{3, 4}, 4) == 5);
    for (int n = 2; n <= 8; ++n)
        for (int idx = 0; idx < edge_count(n); ++idx)
            CHECK(edge_index(edge_from_index(idx, n), n) == idx);
    CHECK_THROWS_AS(edge_index(Edge{2, 2}, 4), std::invalid_argument);
    CHECK_THROWS_AS(edge_index(Edge{1, 5}, 4), std::invalid_argument);
    CHECK_THROWS_AS(edge_index(Edge{0, 1}, 4), std::invalid_argument);
}

TEST_CASE("curvature forms are signed row sums") {
    CHECK(curvature_form(1, 3) == gamma(1, 2, 3) + gamma(1, 3, 3));
    CHECK(curvature_form(2, 3) == gamma(2, 3, 3) - gamma(1, 2, 3));
    CHECK(curvature_form(3, 3) == GammaPolynomial(3) - gamma(1, 3, 3) - gamma(2, 3, 3));
    for (int n = 2; n <= 7; ++n)
        CHECK(curvature_form(1, n).term_count() == static_cast<std::size_t>(n - 1));
    CHECK_THROWS_AS(curvature_form(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(curvature_form(0, 3), std::invalid_argument);
}

TEST_CASE("curvature forms sum to zero for n <= 7") {
    for (int n = 2; n <= 7; ++n) {
        GammaPolynomial sum(n);
        for (int i = 1; i <= n; ++i) sum += curvature_form(i, n);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("squarefree products") {
    auto g12 = gamma(1, 2, 3), g13 = gamma(1, 3, 3), g23 = gamma(2, 3, 3);
    CHECK(multiply(g12, g12).is_zero());
    CHECK(multiply(g12 + g13, g12 + g13) == multiply(g12, g13) * Integer(2));
    CHECK(multiply(g12 + g13, g23 - g12) ==
          multiply(g12, g23) - multiply(g12, g13) + multiply(g13, g23));
    CHECK_THROWS_AS(multiply(GammaPolynomial(3), GammaPolynomial(4)), std::invalid_argument);
}

TEST_CASE("multiply agrees with the flat-term oracle") {
    std::mt19937_64 rng(kDefaultSeed);
    for (int round = 0; round < 40; ++round) {
        int n = 3 + static_cast<int>(rng() % 3);
        auto a = random_gamma_poly(rng, n, 4);
        auto b = random_gamma_poly(rng, n, 4);
        FlatPoly fa, fb;
        for (const auto& [mask, c] : a.terms()) {
            std::vector<int> edges;
            for (Edge e : mask_edges(mask, n)) edges.push_back(edge_index(e, n));
            fa.push_back({static_cast<long>(c.get_si()), edges});
        }
        for (const auto& [mask, c] : b.terms()) {
            std::vector<int> edges;
            for (Edge e : mask_edges(mask, n)) edges.push_back(edge_index(e, n));
            fb.push_back({static_cast<long>(c.get_si()), edges});
        }
        CHECK(multiply(a, b) == from_flat(flat_multiply(fa, fb), n));
    }
}

TEST_CASE("multiply is commutative and associative") {
    std::mt19937_64 rng(kDefaultSeed + 1);
    for (int round = 0; round < 30; ++round) {
        int n = 3 + static_cast<int>(rng() % 3);
        auto a = random_gamma_poly(rng, n, 3);
        auto b = random_gamma_poly(rng, n, 3);
        auto c = random_gamma_poly(rng, n, 3);
        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("multiply_by_curvature matches generic multiply") {
    std::mt19937_64 rng(kDefaultSeed + 2);
    for (int round = 0; round < 30; ++round) {
        int n = 3 + static_cast<int>(rng() % 4);
        int i = 1 + static_cast<int>(rng() % n);
        auto p = random_gamma_poly(rng, n, 4);
        CHECK(multiply_by_curvature(p, i) == multiply(p, curvature_form(i, n)));
    }
}

TEST_CASE("evaluate_exponent spot values") {
    // w1^3 = 0 in the n = 3 algebra (only two edges at vertex 1)
    CHECK(evaluate_exponent({3}, {1}, 3).is_zero());

    // w1^2 w2: oracle expansion
    FlatPoly w1 = flat_curvature(1, 3), w2 = flat_curvature(2, 3);
    FlatPoly expect = flat_multiply(flat_multiply(w1, w1), w2);
    auto got = evaluate_exponent({2, 1}, {1, 2}, 3);
    CHECK(got == from_flat(expect, 3));
    CHECK(got == multiply(gamma(1, 2, 3), multiply(gamma(1, 3, 3), gamma(2, 3, 3))) * Integer(2));

    CHECK(evaluate_exponent({1, 1, 1}, {1, 2, 3}, 3).is_zero());
    CHECK(evaluate_exponent({0}, {1}, 3) == GammaPolynomial::unit(3));
    CHECK_THROWS_AS(evaluate_exponent({1, 1}, {2, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_exponent({1}, {4}, 3), std::invalid_argument);
}

TEST_CASE("evaluate_exponent output is homogeneous") {
    std::mt19937_64 rng(kDefaultSeed + 3);
    for (int round = 0; round < 40; ++round) {
        int n = 2 + static_cast<int>(rng() % 4);
        int k = 1 + static_cast<int>(rng() % n);
        std::vector<int> subset;
        for (int v = 1; v <= n; ++v) subset.push_back(v);
        std::shuffle(subset.begin(), subset.end(), rng);
        subset.resize(k);
        Exponents alpha(k);
        int d = 0;
        for (int& a : alpha) {
            a = static_cast<int>(rng() % 3);
            d += a;
        }
        auto value = evaluate_exponent(alpha, subset, n);
        CHECK(value.homogeneous_of_degree(d));
    }
}

TEST_CASE("evaluate_polynomial examples") {
    auto x = [](int i, int k) { return RationalPolynomial::variable(i, k); };

    auto linear = x(1, 3) + x(2, 3) + x(3, 3);
    CHECK(evaluate_polynomial(linear, {1, 2, 3}, 3).is_zero());

    auto g = (x(1, 2) + x(2, 2)).pow(3);  // exponent 2*(3-2)+1 = 3
    CHECK(evaluate_polynomial(g, {1, 2}, 3).is_zero());

    auto one = RationalPolynomial::constant(Rational(1), 1);
    auto unit = evaluate_polynomial(one, {1}, 3);
    CHECK_FALSE(unit.is_zero());
    CHECK(unit.num == GammaPolynomial::unit(3));
    CHECK(unit.den == 1);

    // rational coefficients: w1/2 keeps the denominator
    auto half = x(1, 1) * make_rational(1, 2);
    auto value = evaluate_polynomial(half, {1}, 3);
    CHECK(value.num == curvature_form(1, 3));
    CHECK(value.den == 2);
}

TEST_CASE("ideal generators vanish at their curvature subsets for n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> subset;
            for (int v = 1; v <= n; ++v)
                if (mask & (1u << (v - 1))) subset.push_back(v);
            int j = static_cast<int>(subset.size());
            RationalPolynomial sum(j);
            for (int t = 1; t <= j; ++t) sum += RationalPolynomial::variable(t, j);
            auto power = sum.pow(j * (n - j) + 1);
            CHECK(evaluate_polynomial(power, subset, n).is_zero());
        }
    }
}

TEST_CASE("transpositions act as the S_n relabeling") {
    auto w = [](int i, int n) { return curvature_form(i, n); };
    CHECK(apply_transposition(1, w(1, 3)) == w(2, 3));

    for (int n = 2; n <= 5; ++n)
        for (int t = 1; t < n; ++t)
            for (int i = 1; i <= n; ++i) {
                int image = i == t ? t + 1 : (i == t + 1 ? t : i);
                CHECK(apply_transposition(t, w(i, n)) == w(image, n));
            }
    CHECK_THROWS_AS(apply_transposition(3, w(1, 3)), std::invalid_argument);
}

TEST_CASE("transpositions are involutive automorphisms satisfying braid relations") {
    std::mt19937_64 rng(kDefaultSeed + 4);
    for (int round = 0; round < 25; ++round) {
        int n = 3 + static_cast<int>(rng() % 3);
        auto p = random_gamma_poly(rng, n, 4);
        auto q = random_gamma_poly(rng, n, 4);
        for (int t = 1; t < n; ++t) {
            CHECK(apply_transposition(t, apply_transposition(t, p)) == p);
            // automorphism: tau(pq) = tau(p)tau(q)
            CHECK(apply_transposition(t, multiply(p, q)) ==
                  multiply(apply_transposition(t, p), apply_transposition(t, q)));
        }
        for (int t = 1; t + 1 < n; ++t) {
            auto lhs = apply_transposition(t, apply_transposition(t + 1, apply_transposition(t, p)));
            auto rhs = apply_transposition(t + 1, apply_transposition(t, apply_transposition(t + 1, p)));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("textual dump is mask-sorted with explicit signs") {
    auto p = multiply(gamma(1, 2, 3), gamma(1, 3, 3)) * Integer(2) - gamma(2, 3, 3);
    CHECK(p.to_text() == "+2 * g(1,2) g(1,3)\n-1 * g(2,3)\n");
    CHECK(GammaPolynomial::unit(3).to_text() == "+1\n");
    CHECK(GammaPolynomial(3).to_text().empty());
}
