#include "flagforms/exact_linalg.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>
#include <sstream>

namespace flagforms {

std::size_t SparseExactMatrix::nonzeros() const {
    std::size_t t = 0;
    for (const auto& r : rows) t += r.size();
    return t;
}

bool RankReport::any_exact_fallback() const {
    for (const auto& d : degrees)
        if (d.exact_used) return true;
    return false;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                            31ULL, 37ULL}) {
        if (p == q) return true;
        if (p % q == 0) return false;
    }
    std::uint64_t d = p - 1;
    int s = std::countr_zero(d);
    d >>= s;
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                            31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, p);
        if (x == 1 || x == p - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, p);
            if (x == p - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t random_prime_in_range(std::mt19937_64& rng) {
    const std::uint64_t lo = 1ULL << 30, hi = 1ULL << 31;
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi - 1);
    for (;;) {
        std::uint64_t c = dist(rng) | 1;
        if (c < hi && is_prime_u64(c)) return c;
    }
}

std::vector<EdgeMask> cardinality_masks(int bits, int d) {
    std::vector<EdgeMask> out;
    if (d < 0 || d > bits) return out;
    if (d == 0) {
        out.push_back(0);
        return out;
    }
    EdgeMask m = (EdgeMask{1} << d) - 1;
    EdgeMask limit = (bits >= 64) ? ~EdgeMask{0} : (EdgeMask{1} << bits);
    while (m < limit) {
        out.push_back(m);
        // Gosper's hack: next mask with the same popcount
        EdgeMask c = m & -m;
        EdgeMask r = m + c;
        if (r == 0) break;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return out;
}

namespace {

void check_subset(int k, int n, const std::vector<int>& subset) {
    if (static_cast<int>(subset.size()) != k)
        throw std::invalid_argument("subset size must equal k");
    std::set<int> seen;
    for (int v : subset) {
        if (v < 1 || v > n) throw std::invalid_argument("subset index out of range");
        if (!seen.insert(v).second) throw std::invalid_argument("repeated index in subset");
    }
}

// Number of degree-d monomials in k variables.
std::int64_t monomial_count(int k, int d) { return binomial_i64(k - 1 + d, d); }

// Fills rows [base, ...) for all exponent vectors extending the prefix at
// `var` with `rest` total degree left, sharing the partial curvature product
// across the whole subtree. Dead partial products skip entire subtrees.
void fill_block(const std::vector<int>& subset, int var, int rest, const GammaPolynomial& partial,
                std::size_t base, std::vector<GammaPolynomial>& rows) {
    int k = static_cast<int>(subset.size());
    if (partial.is_zero()) return;  // rows stay empty
    if (var == k - 1) {
        GammaPolynomial value = partial;
        for (int rep = 0; rep < rest && !value.is_zero(); ++rep)
            value = multiply_by_curvature(value, subset[var]);
        if (!value.is_zero()) rows[base] = value;
        return;
    }
    // powers partial * w^e for e = 0..rest, then emit in descending-e order
    std::vector<GammaPolynomial> powers;
    powers.push_back(partial);
    for (int e = 1; e <= rest; ++e) {
        if (powers.back().is_zero()) break;
        powers.push_back(multiply_by_curvature(powers.back(), subset[var]));
    }
    std::size_t offset = base;
    for (int e = rest; e >= 0; --e) {
        if (e < static_cast<int>(powers.size()) && !powers[e].is_zero())
            fill_block(subset, var + 1, rest - e, powers[e], offset, rows);
        offset += monomial_count(k - 1 - var, rest - e);
    }
}

}  // namespace

SparseExactMatrix build_matrix(int k, int n, int d, const std::vector<int>& subset,
                               const RankConfig& cfg) {
    check_ambient(n);
    check_subset(k, n, subset);
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");

    SparseExactMatrix M;
    M.k = k;
    M.n = n;
    M.d = d;
    M.subset = subset;
    M.col_masks = cardinality_masks(edge_count(n), d);

    std::int64_t nrows = monomial_count(k, d);
    Integer cells = Integer(nrows) * Integer(static_cast<long>(M.col_masks.size()));
    if (cells > Integer(cfg.cell_cap))
        throw resource_error("evaluation matrix for k=" + std::to_string(k) +
                             " n=" + std::to_string(n) + " d=" + std::to_string(d) + " has " +
                             cells.get_str() + " cells, over the configured cap");
    M.rows.assign(static_cast<std::size_t>(nrows), {});

    if (!cfg.cache_dir.empty()) {
        auto file = cache_file_path(cfg.cache_dir, k, n, d, subset);
        if (load_matrix_cache(M, file)) return M;
    }

    std::vector<GammaPolynomial> gamma_rows(static_cast<std::size_t>(nrows), GammaPolynomial(n));
    if (k == 1) {
        fill_block(subset, 0, d, GammaPolynomial::unit(n), 0, gamma_rows);
    } else {
        // split the top-level exponent choices across the worker pool
        std::vector<std::size_t> offsets(static_cast<std::size_t>(d) + 1);
        std::size_t off = 0;
        for (int e = d; e >= 0; --e) {
            offsets[static_cast<std::size_t>(d - e)] = off;
            off += static_cast<std::size_t>(monomial_count(k - 1, d - e));
        }
        GammaPolynomial one = GammaPolynomial::unit(n);
        parallel_for_index(static_cast<std::size_t>(d) + 1, cfg.threads, [&](std::size_t idx) {
            int e = d - static_cast<int>(idx);
            GammaPolynomial partial = one;
            for (int rep = 0; rep < e && !partial.is_zero(); ++rep)
                partial = multiply_by_curvature(partial, subset[0]);
            if (!partial.is_zero())
                fill_block(subset, 1, d - e, partial, offsets[idx], gamma_rows);
        });
    }

    for (std::size_t r = 0; r < gamma_rows.size(); ++r) {
        auto& row = M.rows[r];
        row.reserve(gamma_rows[r].term_count());
        for (const auto& [mask, coeff] : gamma_rows[r].terms()) {
            auto it = std::lower_bound(M.col_masks.begin(), M.col_masks.end(), mask);
            if (it == M.col_masks.end() || *it != mask)
                throw std::logic_error("evaluation produced a non-homogeneous monomial");
            row.push_back({static_cast<std::uint32_t>(it - M.col_masks.begin()), coeff});
        }
    }

    if (!cfg.cache_dir.empty())
        write_matrix_cache(M, cache_file_path(cfg.cache_dir, k, n, d, subset));
    return M;
}

namespace {

using ModRow = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

// row_a - f*row_b mod p over sorted column lists; col_nnz kept exact.
ModRow subtract_scaled_mod(const ModRow& a, std::uint64_t f, const ModRow& b, std::uint64_t p,
                           std::vector<std::uint32_t>& col_nnz) {
    ModRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            std::uint64_t v = (a[i].second + p - mulmod_u64(f, b[j].second, p)) % p;
            if (v)
                out.push_back({a[i].first, v});
            else
                --col_nnz[a[i].first];
            ++i, ++j;
        } else if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else {
            std::uint64_t v = (p - mulmod_u64(f, b[j].second, p)) % p;
            if (v) {
                out.push_back({b[j].first, v});
                ++col_nnz[b[j].first];
            }
            ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) {
        std::uint64_t v = (p - mulmod_u64(f, b[j].second, p)) % p;
        if (v) {
            out.push_back({b[j].first, v});
            ++col_nnz[b[j].first];
        }
        ++j;
    }
    return out;
}

const std::pair<std::uint32_t, std::uint64_t>* find_col(const ModRow& row, std::uint32_t c) {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::uint32_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? &*it : nullptr;
}

}  // namespace

std::int64_t rank_mod_p(const SparseExactMatrix& M, std::uint64_t p) {
    if (p >= (1ULL << 31) || !is_prime_u64(p))
        throw std::invalid_argument("modulus must be a prime below 2^31");

    std::vector<ModRow> rows;
    rows.reserve(M.rows.size());
    std::vector<std::uint32_t> col_nnz(M.col_count(), 0);
    for (const auto& src : M.rows) {
        ModRow row;
        row.reserve(src.size());
        for (const auto& e : src) {
            std::uint64_t v = mpz_fdiv_ui(e.value.get_mpz_t(), static_cast<unsigned long>(p));
            if (v) {
                row.push_back({e.col, v});
                ++col_nnz[e.col];
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }

    std::vector<std::size_t> alive(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) alive[i] = i;

    std::int64_t rank = 0;
    while (!alive.empty()) {
        // Markowitz-style pivot: sparsest row, then its least-filled column
        std::size_t best = 0;
        for (std::size_t i = 1; i < alive.size(); ++i)
            if (rows[alive[i]].size() < rows[alive[best]].size()) best = i;
        std::size_t pr = alive[best];
        alive[best] = alive.back();
        alive.pop_back();

        std::uint32_t pc = rows[pr].front().first;
        for (const auto& e : rows[pr])
            if (col_nnz[e.first] < col_nnz[pc]) pc = e.first;

        ++rank;
        std::uint64_t inv = powmod_u64(find_col(rows[pr], pc)->second, p - 2, p);
        for (auto& e : rows[pr]) e.second = mulmod_u64(e.second, inv, p);

        for (std::size_t idx = 0; idx < alive.size();) {
            std::size_t r = alive[idx];
            const auto* hit = find_col(rows[r], pc);
            if (hit) {
                rows[r] = subtract_scaled_mod(rows[r], hit->second, rows[pr], p, col_nnz);
                if (rows[r].empty()) {
                    alive[idx] = alive.back();
                    alive.pop_back();
                    continue;
                }
            }
            ++idx;
        }
        for (const auto& e : rows[pr]) --col_nnz[e.first];
        rows[pr].clear();
    }
    return rank;
}

namespace {

using ExactRow = std::vector<std::pair<std::uint32_t, Integer>>;

void make_row_primitive(ExactRow& row) {
    Integer content = 0;
    for (const auto& e : row) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.second.get_mpz_t());
        if (content == 1) return;
    }
    if (content > 1)
        for (auto& e : row) e.second /= content;
}

}  // namespace

std::int64_t rank_exact(const SparseExactMatrix& M) {
    std::vector<ExactRow> rows;
    rows.reserve(M.rows.size());
    std::vector<std::uint32_t> col_nnz(M.col_count(), 0);
    for (const auto& src : M.rows) {
        if (src.empty()) continue;
        ExactRow row;
        row.reserve(src.size());
        for (const auto& e : src) {
            row.push_back({e.col, e.value});
            ++col_nnz[e.col];
        }
        make_row_primitive(row);
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> alive(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) alive[i] = i;

    std::int64_t rank = 0;
    while (!alive.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < alive.size(); ++i)
            if (rows[alive[i]].size() < rows[alive[best]].size()) best = i;
        std::size_t pr = alive[best];
        alive[best] = alive.back();
        alive.pop_back();

        std::uint32_t pc = rows[pr].front().first;
        for (const auto& e : rows[pr])
            if (col_nnz[e.first] < col_nnz[pc]) pc = e.first;
        ++rank;

        auto pivot_at = [&](const ExactRow& row) -> const Integer* {
            auto it = std::lower_bound(
                row.begin(), row.end(), pc,
                [](const auto& e, std::uint32_t col) { return e.first < col; });
            return (it != row.end() && it->first == pc) ? &it->second : nullptr;
        };
        const Integer pv = *pivot_at(rows[pr]);

        for (std::size_t idx = 0; idx < alive.size();) {
            std::size_t r = alive[idx];
            const Integer* f = pivot_at(rows[r]);
            if (f) {
                // pv*row - f*pivot_row, integers throughout
                ExactRow out;
                out.reserve(rows[r].size() + rows[pr].size());
                std::size_t i = 0, j = 0;
                const ExactRow& a = rows[r];
                const ExactRow& b = rows[pr];
                const Integer fv = *f;
                while (i < a.size() && j < b.size()) {
                    if (a[i].first == b[j].first) {
                        Integer v = pv * a[i].second - fv * b[j].second;
                        if (v != 0)
                            out.push_back({a[i].first, std::move(v)});
                        else
                            --col_nnz[a[i].first];
                        ++i, ++j;
                    } else if (a[i].first < b[j].first) {
                        out.push_back({a[i].first, pv * a[i].second});
                        ++i;
                    } else {
                        out.push_back({b[j].first, -fv * b[j].second});
                        ++col_nnz[b[j].first];
                        ++j;
                    }
                }
                while (i < a.size()) {
                    out.push_back({a[i].first, pv * a[i].second});
                    ++i;
                }
                while (j < b.size()) {
                    out.push_back({b[j].first, -fv * b[j].second});
                    ++col_nnz[b[j].first];
                    ++j;
                }
                make_row_primitive(out);
                rows[r] = std::move(out);
                if (rows[r].empty()) {
                    alive[idx] = alive.back();
                    alive.pop_back();
                    continue;
                }
            }
            ++idx;
        }
        for (const auto& e : rows[pr]) --col_nnz[e.first];
        rows[pr].clear();
    }
    return rank;
}

std::int64_t rank_with_protocol(const SparseExactMatrix& M, const RankConfig& cfg,
                                DegreeRankInfo& info) {
    info.degree = M.d;
    if (cfg.force_exact) {
        info.exact_used = true;
        info.rank = rank_exact(M);
        return info.rank;
    }
    std::uint64_t mix = cfg.seed;
    mix = splitmix64(mix ^ static_cast<std::uint64_t>(M.k));
    mix = splitmix64(mix ^ static_cast<std::uint64_t>(M.n));
    mix = splitmix64(mix ^ static_cast<std::uint64_t>(M.d));
    for (int v : M.subset) mix = splitmix64(mix ^ static_cast<std::uint64_t>(v));
    std::mt19937_64 rng(mix);
    info.prime1 = random_prime_in_range(rng);
    do {
        info.prime2 = random_prime_in_range(rng);
    } while (info.prime2 == info.prime1);
    std::int64_t r1 = rank_mod_p(M, info.prime1);
    std::int64_t r2 = rank_mod_p(M, info.prime2);
    if (r1 == r2) {
        info.rank = r1;
        return r1;
    }
    info.exact_used = true;
    info.rank = rank_exact(M);
    return info.rank;
}

std::vector<int> default_subset(int k) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i + 1;
    return s;
}

HilbertSeries hilbert_series_rank(int k, int n, std::vector<int> subset, const RankConfig& cfg,
                                  RankReport* report) {
    check_ambient(n);
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    if (subset.empty()) subset = default_subset(k);
    check_subset(k, n, subset);

    HilbertSeries series;
    int max_d = edge_count(n);  // squarefree algebra dies above C(n,2)
    for (int d = 0; d <= max_d; ++d) {
        SparseExactMatrix M = build_matrix(k, n, d, subset, cfg);
        DegreeRankInfo info;
        std::int64_t r = rank_with_protocol(M, cfg, info);
        if (report) report->degrees.push_back(info);
        if (r == 0) {
            if (cfg.verify_tail && d + 1 <= max_d) {
                SparseExactMatrix M2 = build_matrix(k, n, d + 1, subset, cfg);
                DegreeRankInfo info2;
                if (rank_with_protocol(M2, cfg, info2) != 0)
                    throw std::logic_error("rank series resumed after a zero degree");
                if (report) report->degrees.push_back(info2);
            }
            break;
        }
        series.coeffs.push_back(r);
    }
    return series;
}

std::filesystem::path cache_file_path(const std::filesystem::path& dir, int k, int n, int d,
                                      const std::vector<int>& subset) {
    std::string name = "k" + std::to_string(k) + "_n" + std::to_string(n) + "_d" +
                       std::to_string(d) + "_s";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) name += "-";
        name += std::to_string(subset[i]);
    }
    return dir / (name + ".mat");
}

void write_matrix_cache(const SparseExactMatrix& M, const std::filesystem::path& file) {
    std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write cache file " + file.string());
    out << M.k << " " << M.n << " " << M.d << " ";
    for (std::size_t i = 0; i < M.subset.size(); ++i) {
        if (i) out << ",";
        out << M.subset[i];
    }
    out << "\n";
    for (std::size_t r = 0; r < M.rows.size(); ++r)
        for (const auto& e : M.rows[r])
            out << r << " " << M.col_masks[e.col] << " " << e.value.get_str() << "\n";
}

bool load_matrix_cache(SparseExactMatrix& M, const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) return false;
    std::string header_line;
    if (!std::getline(in, header_line)) return false;
    std::istringstream header(header_line);
    int k = 0, n = 0, d = 0;
    std::string subset_text;
    header >> k >> n >> d >> subset_text;
    std::string expected;
    for (std::size_t i = 0; i < M.subset.size(); ++i) {
        if (i) expected += ",";
        expected += std::to_string(M.subset[i]);
    }
    if (k != M.k || n != M.n || d != M.d || subset_text != expected)
        throw std::runtime_error("cache file " + file.string() + " does not match its key");
    for (auto& row : M.rows) row.clear();
    std::size_t r = 0;
    EdgeMask mask = 0;
    std::string coeff;
    while (in >> r >> mask >> coeff) {
        if (r >= M.rows.size()) throw std::runtime_error("cache row index out of range");
        auto it = std::lower_bound(M.col_masks.begin(), M.col_masks.end(), mask);
        if (it == M.col_masks.end() || *it != mask)
            throw std::runtime_error("cache column mask out of range");
        M.rows[r].push_back(
            {static_cast<std::uint32_t>(it - M.col_masks.begin()), Integer(coeff)});
    }
    for (auto& row : M.rows)
        std::sort(row.begin(), row.end(),
                  [](const MatrixEntry& a, const MatrixEntry& b) { return a.col < b.col; });
    return true;
}

}  // namespace flagforms
