#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <vector>

#include "flagforms/common.hpp"
#include "flagforms/edge_algebra.hpp"
#include "flagforms/series.hpp"

namespace flagforms {

struct MatrixEntry {
    std::uint32_t col = 0;
    Integer value;
};

// Degree-d slice of the evaluation map x^alpha -> product of curvature
// forms. Rows follow the degree-d exponent vectors in descending lex order;
// columns follow the cardinality-d edge masks in ascending bitmask order.
struct SparseExactMatrix {
    int k = 0, n = 0, d = 0;
    std::vector<int> subset;
    std::vector<EdgeMask> col_masks;
    std::vector<std::vector<MatrixEntry>> rows;  // each sorted by col

    std::size_t row_count() const { return rows.size(); }
    std::size_t col_count() const { return col_masks.size(); }
    std::size_t nonzeros() const;
};

struct RankConfig {
    std::uint64_t seed = kDefaultSeed;
    bool force_exact = false;
    // row*column bound before a build refuses to materialize
    std::uint64_t cell_cap = 64'000'000;
    unsigned threads = 0;  // 0 = hardware concurrency
    std::filesystem::path cache_dir;
    // after the series hits 0, compute one more degree and insist it is 0 too
    bool verify_tail = true;
};

// Deterministic Miller-Rabin, valid for any 64-bit input.
bool is_prime_u64(std::uint64_t p);
// Uniform prime in [2^30, 2^31).
std::uint64_t random_prime_in_range(std::mt19937_64& rng);

// All cardinality-d edge masks over C(n,2) bits, ascending.
std::vector<EdgeMask> cardinality_masks(int bits, int d);

SparseExactMatrix build_matrix(int k, int n, int d, const std::vector<int>& subset,
                               const RankConfig& cfg = {});

std::int64_t rank_mod_p(const SparseExactMatrix& M, std::uint64_t p);
std::int64_t rank_exact(const SparseExactMatrix& M);

struct DegreeRankInfo {
    int degree = 0;
    std::uint64_t prime1 = 0, prime2 = 0;
    bool exact_used = false;
    std::int64_t rank = 0;
};

struct RankReport {
    std::vector<DegreeRankInfo> degrees;
    bool any_exact_fallback() const;
};

// Two independent random primes; escalate to exact elimination when they
// disagree (or when cfg.force_exact). Modular rank never overshoots, so
// agreement of two primes is accepted as the rank.
std::int64_t rank_with_protocol(const SparseExactMatrix& M, const RankConfig& cfg,
                                DegreeRankInfo& info);

// h_d = rank of the degree-d evaluation matrix; stops at the first zero.
HilbertSeries hilbert_series_rank(int k, int n, std::vector<int> subset,
                                  const RankConfig& cfg = {}, RankReport* report = nullptr);

std::vector<int> default_subset(int k);

// On-disk matrix cache: one file per (k,n,d,subset), header "k n d subset"
// then triples "row column_bitmask coefficient" in decimal.
std::filesystem::path cache_file_path(const std::filesystem::path& dir, int k, int n, int d,
                                      const std::vector<int>& subset);
void write_matrix_cache(const SparseExactMatrix& M, const std::filesystem::path& file);
bool load_matrix_cache(SparseExactMatrix& M, const std::filesystem::path& file);

}  // namespace flagforms
