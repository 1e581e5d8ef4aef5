#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flagforms/common.hpp"

namespace flagforms {

// Exponent vector of a monomial in x1..xk. Index 0 holds the exponent of x1.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);
bool exponents_divide(const Exponents& a, const Exponents& b);  // a | b
Exponents exponents_add(const Exponents& a, const Exponents& b);
Exponents exponents_sub(const Exponents& a, const Exponents& b);  // requires b | a
Exponents exponents_lcm(const Exponents& a, const Exponents& b);

// Graded reverse-lexicographic order with x1 > x2 > ... > xk.
// a > b when deg a > deg b, or degrees tie and the last nonzero entry of
// a - b is negative.
bool degrevlex_less(const Exponents& a, const Exponents& b);

// All degree-d exponent vectors over k variables, descending lex.
std::vector<Exponents> degree_monomials(int k, int d);

struct PolyTerm {
    Exponents mono;
    Rational coeff;
};

// Sparse multivariate polynomial over Q, terms kept in strictly descending
// degrevlex order with no zero coefficients.
class RationalPolynomial {
  public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(int nvars) : nvars_(nvars) {}

    static RationalPolynomial constant(const Rational& c, int nvars);
    static RationalPolynomial variable(int index, int nvars);  // index 1-based
    static RationalPolynomial from_terms(std::vector<PolyTerm> terms, int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : total_degree(terms_.front().mono); }
    const std::vector<PolyTerm>& terms() const { return terms_; }

    const PolyTerm& leading_term() const;
    const Exponents& leading_monomial() const { return leading_term().mono; }

    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    RationalPolynomial operator+(const RationalPolynomial& o) const;
    RationalPolynomial operator-(const RationalPolynomial& o) const;
    RationalPolynomial operator-() const;
    RationalPolynomial operator*(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const Rational& c) const;

    // this -= c * x^mono * g; the workhorse of polynomial division.
    void sub_scaled(const Rational& c, const Exponents& mono, const RationalPolynomial& g);

    RationalPolynomial pow(int e) const;
    RationalPolynomial derivative(int var) const;  // var 1-based
    // Mixed partial over a set of variables, each differentiated once.
    // Bit t of var_mask selects x_{t+1}.
    RationalPolynomial mixed_partial(unsigned var_mask) const;

    void make_monic();
    // Scales to integer coefficients with content 1 and positive leading
    // coefficient; keeps the ideal generated unchanged.
    void make_primitive();

    bool operator==(const RationalPolynomial& o) const;

    std::string to_string() const;
    // Parses the printed grammar: terms "c*x1^a1*x2^a2" joined by +/-.
    static RationalPolynomial parse(std::string_view text, int nvars);

  private:
    void normalize();

    int nvars_ = 0;
    std::vector<PolyTerm> terms_;
};

}  // namespace flagforms
