#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "flagforms/common.hpp"
#include "flagforms/edge_algebra.hpp"
#include "flagforms/series.hpp"

namespace flagforms {

// Anticommuting 1-form generators: each edge (i,j) carries a plain form
// a(i,j) and its conjugate abar(i,j).
enum class FormKind { plain, conjugate };

struct OneFormGenerator {
    Edge edge;
    FormKind kind = FormKind::plain;
    bool operator==(const OneFormGenerator&) const = default;
};

// Canonical slot of a generator: 2*edge_index + (conjugate ? 1 : 0).
int generator_index(OneFormGenerator g, int n);
OneFormGenerator generator_from_index(int index, int n);

using GeneratorMask = std::uint64_t;

// Torus weight in the lambda basis, length n; entries sum to 0 for any
// monomial built from the generators.
using Multiweight = std::vector<int>;

// Coordinates over the principal weights alpha_t = lambda_t - lambda_{t+1}
// (length n-1): prefix sums of the lambda vector.
std::vector<int> alpha_coordinates(const Multiweight& w);

// Signed duplicate-free product of generators. gens holds the canonical
// sorted set; sign is the parity of the permutation taking the written
// order to canonical order.
struct ExteriorMonomial {
    int n = 2;
    GeneratorMask gens = 0;
    int sign = 1;

    int degree() const;
    bool operator==(const ExteriorMonomial&) const = default;
};

ExteriorMonomial exterior_one(int n);
ExteriorMonomial exterior_generator(OneFormGenerator g, int n);

// Zero when the factors collide, otherwise the signed merged monomial.
std::optional<ExteriorMonomial> wedge(const ExteriorMonomial& m1, const ExteriorMonomial& m2);

// a(i,j) ^ abar(i,j): the image of the edge 2-form, multiweight zero.
ExteriorMonomial gamma_embed(Edge e, int n);

Multiweight multiweight_of_mask(GeneratorMask gens, int n);
Multiweight multiweight_of(const ExteriorMonomial& m);

// Loop-free digraph with at most one arc per ordered pair; a(i,j) maps to
// the arc i->j and abar(i,j) to j->i.
struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // (tail, head), sorted

    bool eulerian() const;
    bool operator==(const Digraph&) const = default;
};

Digraph monomial_to_digraph(const ExteriorMonomial& m);

// Dimension count of the invariant-forms algebra by degree: number of
// d-element generator subsets with vanishing multiweight. Enumerates all
// 2^(2*C(n,2)) subsets edge by edge, pruning branches whose imbalance the
// remaining generators cannot cancel. Capped at n = 5 unless allow_large.
HilbertSeries invariant_forms_hilbert(int n, bool allow_large = false);

struct EulerianIdentityReport {
    int n = 0;
    Integer zero_weight_total;    // Z(n), total of the invariant series
    Integer symmetric_count;      // 2^C(n,2)
    Integer implied_eulerian;     // (Z - 2^C(n,2)) / 2
};

// Asserts Z - 2^C(n,2) is even and nonnegative; a violation means the
// enumeration itself is broken.
EulerianIdentityReport eulerian_identity_check(int n, bool allow_large = false);

}  // namespace flagforms
