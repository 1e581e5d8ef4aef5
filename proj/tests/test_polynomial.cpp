#include <doctest.h>

#include <random>

#include "flagforms/polynomial.hpp"

using namespace flagforms;

namespace {

RationalPolynomial var(int i, int k) { return RationalPolynomial::variable(i, k); }

RationalPolynomial random_poly(std::mt19937_64& rng, int k, int max_deg, int terms) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<PolyTerm> ts;
    for (int t = 0; t < terms; ++t) {
        Exponents m(k, 0);
        int d = deg(rng);
        for (int r = 0; r < d; ++r) {
            std::uniform_int_distribution<int> v(0, k - 1);
            ++m[v(rng)];
        }
        ts.push_back({std::move(m), make_rational(coeff(rng), den(rng))});
    }
    return RationalPolynomial::from_terms(std::move(ts), k);
}

}  // namespace

TEST_CASE("degrevlex order on degree-2 monomials in three variables") {
    // descending: x1^2 > x1x2 > x2^2 > x1x3 > x2x3 > x3^2
    std::vector<Exponents> expected = {{2, 0, 0}, {1, 1, 0}, {0, 2, 0},
                                       {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
    for (std::size_t i = 0; i < expected.size(); ++i)
        for (std::size_t j = 0; j < expected.size(); ++j) {
            CHECK(degrevlex_less(expected[i], expected[j]) == (i > j));
        }
}

TEST_CASE("degrevlex grades by total degree first") {
    CHECK(degrevlex_less({3, 0}, {2, 2}));
    CHECK_FALSE(degrevlex_less({2, 2}, {3, 0}));
}

TEST_CASE("degree_monomials enumerates in descending lex order") {
    auto monos = degree_monomials(3, 2);
    REQUIRE(monos.size() == 6);
    CHECK(monos.front() == Exponents{2, 0, 0});
    CHECK(monos[1] == Exponents{1, 1, 0});
    CHECK(monos.back() == Exponents{0, 0, 2});
    for (std::size_t i = 0; i + 1 < monos.size(); ++i) CHECK(monos[i] > monos[i + 1]);  // lex

    CHECK(degree_monomials(1, 5).size() == 1);
    CHECK(degree_monomials(4, 0).size() == 1);
    CHECK(degree_monomials(5, 3).size() == 35);  // C(7,3)
}

TEST_CASE("basic arithmetic") {
    auto x1 = var(1, 2), x2 = var(2, 2);
    auto sq = (x1 + x2) * (x1 + x2);
    auto expected = x1 * x1 + (x1 * x2) * Rational(2) + x2 * x2;
    CHECK(sq == expected);
    CHECK((sq - expected).is_zero());
    CHECK((x1 + x2).pow(2) == sq);
    CHECK((x1 - x1).is_zero());
    CHECK(RationalPolynomial(2).is_zero());
}

TEST_CASE("leading term follows degrevlex") {
    auto x1 = var(1, 3), x2 = var(2, 3), x3 = var(3, 3);
    auto p = x2 * x2 + x1 * x3;  // x2^2 > x1x3 in degrevlex
    CHECK(p.leading_monomial() == Exponents{0, 2, 0});
    CHECK((x1 + x2 + x3).leading_monomial() == Exponents{1, 0, 0});
}

TEST_CASE("derivatives") {
    auto x1 = var(1, 2), x2 = var(2, 2);
    auto p = x1.pow(3) * x2;
    CHECK(p.derivative(1) == x1.pow(2) * x2 * Rational(3));
    CHECK(p.derivative(2) == x1.pow(3));
    CHECK(p.mixed_partial(0b11) == x1.pow(2) * Rational(3));
    CHECK(p.mixed_partial(0) == p);
    CHECK(x2.derivative(1).is_zero());
}

TEST_CASE("make_primitive and make_monic") {
    auto x1 = var(1, 1);
    auto p = x1 * make_rational(2, 3) + RationalPolynomial::constant(make_rational(4, 5), 1);
    p.make_primitive();
    CHECK(p == x1 * Rational(5) + RationalPolynomial::constant(Rational(6), 1));

    auto q = x1 * Rational(-3) + RationalPolynomial::constant(Rational(6), 1);
    q.make_primitive();  // leading coefficient turns positive
    CHECK(q == x1 * Rational(1) + RationalPolynomial::constant(Rational(-2), 1));

    auto m = x1 * Rational(4) + RationalPolynomial::constant(Rational(2), 1);
    m.make_monic();
    CHECK(m == x1 + RationalPolynomial::constant(make_rational(1, 2), 1));
}

TEST_CASE("printing is degrevlex-sorted and parse round-trips") {
    auto x1 = var(1, 3), x2 = var(2, 3), x3 = var(3, 3);
    auto p = x1.pow(2) * x2 * Rational(2) - x2.pow(3) * make_rational(1, 3) +
             RationalPolynomial::constant(Rational(5), 3) + x3;
    CHECK(p.to_string() == "2*x1^2*x2 - 1/3*x2^3 + x3 + 5");
    CHECK(RationalPolynomial::parse(p.to_string(), 3) == p);
    CHECK(RationalPolynomial(3).to_string() == "0");
    CHECK(RationalPolynomial::parse("0", 3).is_zero());

    std::mt19937_64 rng(kDefaultSeed);
    for (int round = 0; round < 50; ++round) {
        auto q = random_poly(rng, 3, 4, 5);
        CHECK(RationalPolynomial::parse(q.to_string(), 3) == q);
    }
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(RationalPolynomial::parse("x0", 2), std::invalid_argument);
    CHECK_THROWS_AS(RationalPolynomial::parse("x3", 2), std::invalid_argument);
    CHECK_THROWS_AS(RationalPolynomial::parse("2*", 2), std::invalid_argument);
    CHECK_THROWS_AS(RationalPolynomial::parse("x1 x2", 2), std::invalid_argument);
    CHECK_THROWS_AS(RationalPolynomial::parse("", 2), std::invalid_argument);
}

TEST_CASE("arity mismatches are rejected") {
    CHECK_THROWS_AS(var(1, 2) + var(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(RationalPolynomial::variable(4, 3), std::invalid_argument);
}
