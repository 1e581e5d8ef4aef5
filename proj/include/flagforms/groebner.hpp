#pragma once

#include <vector>

#include "flagforms/common.hpp"
#include "flagforms/polynomial.hpp"
#include "flagforms/series.hpp"

namespace flagforms {

// The 2^k - 1 generators of the vanishing ideal: for each nonempty subset
// {i_1..i_j} of {1..k}, the power (x_{i_1}+...+x_{i_j})^{j(n-j)+1}.
struct IdealSpec {
    int k = 0, n = 0;
    std::vector<std::vector<int>> subsets;          // 1-based, matching generators
    std::vector<RationalPolynomial> generators;
};

IdealSpec build_ideal_generators(int k, int n);

// Reduced Groebner basis for degrevlex with x1 > ... > xk: monic elements,
// pairwise non-divisible leading monomials, tails fully reduced, sorted by
// ascending leading monomial. Reduced bases are unique, so the output does
// not depend on how the pair queue was walked.
struct GroebnerBasis {
    int nvars = 0;
    std::vector<RationalPolynomial> polys;
};

GroebnerBasis buchberger(std::vector<RationalPolynomial> gens);

// Canonical remainder: no term of the result is divisible by any leading
// monomial of G; zero exactly on ideal members.
RationalPolynomial normal_form(const RationalPolynomial& p, const GroebnerBasis& G);

// Counts standard monomials degree by degree; requires an Artinian quotient
// (every variable must carry a pure-power leading monomial).
HilbertSeries hilbert_series_quotient(const GroebnerBasis& G);

// Memoized reduced basis of I_{k,n}.
const GroebnerBasis& vanishing_ideal_basis(int k, int n);

// Ideal membership via the squarefree-derivative recursion: p lies in
// I_{k,n} exactly when all 2^k mixed partials (p included) lie in
// I_{k,n-1}; the base case n = k is decided by normal form.
bool membership_via_derivatives(const RationalPolynomial& p, int k, int n);

// Hilbert series of C[x1..xn]/(s1..sn) via the q-factorial product
// prod_{m=1..n} (1 + q + ... + q^{m-1}).
HilbertSeries cohomology_poincare(int n);

// Elementary symmetric polynomial e_m in nvars variables (cross-check data
// for the cohomology series).
RationalPolynomial elementary_symmetric(int m, int nvars);

}  // namespace flagforms
