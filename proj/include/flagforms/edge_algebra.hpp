#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagforms/common.hpp"
#include "flagforms/polynomial.hpp"

namespace flagforms {

// Index pair of the 2-form g(i,j), 1-based with i < j.
struct Edge {
    int i = 0;
    int j = 0;
    bool operator==(const Edge&) const = default;
};

inline int edge_count(int n) { return n * (n - 1) / 2; }

void check_ambient(int n);
void check_edge(Edge e, int n);

// Lexicographic position of (i,j) among the edges of K_n: (1,2) -> 0,
// (1,3) -> 1, ..., (2,3) -> n-1, ...
int edge_index(Edge e, int n);
Edge edge_from_index(int index, int n);

// Squarefree edge-set monomial: bit edge_index(e, n) marks e.
using EdgeMask = std::uint64_t;

EdgeMask edge_bit(Edge e, int n);
std::vector<Edge> mask_edges(EdgeMask mask, int n);

// Element of the commutative squarefree algebra generated by the edge
// 2-forms: a sparse integer combination of EdgeMask monomials. Terms are
// kept sorted by mask with no zero coefficients; values are immutable in
// spirit — every operation returns a fresh polynomial.
class GammaPolynomial {
  public:
    GammaPolynomial() = default;
    explicit GammaPolynomial(int n) : n_(n) { check_ambient(n); }

    static GammaPolynomial unit(int n);
    static GammaPolynomial gamma(Edge e, int n);
    static GammaPolynomial monomial(EdgeMask mask, Integer coeff, int n);

    int ambient() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<std::pair<EdgeMask, Integer>>& terms() const { return terms_; }

    Integer coefficient(EdgeMask mask) const;
    // True when every surviving monomial has the same edge-set cardinality d.
    bool homogeneous_of_degree(int d) const;

    GammaPolynomial& operator+=(const GammaPolynomial& o);
    GammaPolynomial& operator-=(const GammaPolynomial& o);
    GammaPolynomial operator+(const GammaPolynomial& o) const;
    GammaPolynomial operator-(const GammaPolynomial& o) const;
    GammaPolynomial operator*(const Integer& c) const;
    bool operator==(const GammaPolynomial& o) const;

    // One line per term, "+c * g(i,j) g(i,j) ...", sorted by mask.
    std::string to_text() const;

  private:
    friend GammaPolynomial curvature_form(int, int);
    friend GammaPolynomial multiply(const GammaPolynomial&, const GammaPolynomial&);
    friend GammaPolynomial multiply_by_curvature(const GammaPolynomial&, int);
    friend GammaPolynomial apply_transposition(int, const GammaPolynomial&);
    void add_term(EdgeMask mask, Integer coeff);  // unsorted append
    void normalize();

    int n_ = 2;
    std::vector<std::pair<EdgeMask, Integer>> terms_;
};

// Row sum of the curvature matrix: sum_{j>i} g(i,j) - sum_{j<i} g(j,i).
GammaPolynomial curvature_form(int i, int n);

// Product in the squarefree algebra; terms with intersecting edge sets drop.
GammaPolynomial multiply(const GammaPolynomial& p, const GammaPolynomial& q);

// p * w_i, the hot kernel of matrix building.
GammaPolynomial multiply_by_curvature(const GammaPolynomial& p, int i);

// Evaluates the monomial x^alpha at the curvature forms w_{subset[t]}.
GammaPolynomial evaluate_exponent(const Exponents& alpha, const std::vector<int>& subset, int n);

// Exact value of a rational-coefficient polynomial at curvature forms,
// kept as integer-combination numerator over a positive denominator.
struct GammaRational {
    GammaPolynomial num;
    Integer den = 1;
    bool is_zero() const { return num.is_zero(); }
};

GammaRational evaluate_polynomial(const RationalPolynomial& p, const std::vector<int>& subset,
                                  int n);

// Algebra automorphism induced by the adjacent transposition t <-> t+1:
// relabels vertices and flips the sign of g(t,t+1).
GammaPolynomial apply_transposition(int t, const GammaPolynomial& p);

}  // namespace flagforms
