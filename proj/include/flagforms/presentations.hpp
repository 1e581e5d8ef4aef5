#pragma once

#include <string>
#include <vector>

#include "flagforms/common.hpp"
#include "flagforms/exact_linalg.hpp"
#include "flagforms/series.hpp"

namespace flagforms {

struct VerificationResult {
    std::string name;
    int k = 0, n = 0;
    std::uint64_t seed = 0;
    HilbertSeries left, right;
    std::vector<std::int64_t> difference;  // cohomology comparison only
    bool pass = false;
    double elapsed_ms = 0.0;
    std::vector<std::string> notes;  // primes, fallbacks, subsets, samples
};

// Rank series against the Groebner quotient series: the computational
// content of the presentation theorem. Pass = coefficientwise equality.
VerificationResult verify_presentation(int k, int n, const RankConfig& cfg = {});

// All C(n,k) generator subsets must give the identical rank series.
VerificationResult verify_subset_independence(int k, int n, const RankConfig& cfg = {});

// Series of A_n minus the cohomology series must be nonnegative in every
// degree (the algebra surjects onto cohomology).
VerificationResult compare_with_cohomology(int n, const RankConfig& cfg = {});

// Triple-oracle agreement on seeded members and non-members of I_{k,n}:
// direct evaluation at curvature forms, Groebner normal form, and the
// derivative recursion must never split.
VerificationResult verify_derivative_criterion(int k, int n, int samples, std::uint64_t seed);

}  // namespace flagforms
