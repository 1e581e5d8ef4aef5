#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace flagforms {

// Exact arithmetic. All algebra in this project is over Z or Q; no
// floating point anywhere near a coefficient.
using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class does not canonicalize on construction.
inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Thrown when a computation exceeds its configured desk-scale cap.
// The CLI maps this to its own exit code, distinct from argument errors.
class resource_error : public std::runtime_error {
  public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// binomial() result when it is known to fit; caps in this project keep
// every row/column count far below 2^63.
inline std::int64_t binomial_i64(unsigned long n, unsigned long k) {
    Integer b = binomial(n, k);
    if (!b.fits_slong_p()) throw resource_error("binomial overflows 64-bit count");
    return static_cast<std::int64_t>(b.get_si());
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Default seed for every randomized protocol (prime picking, sample
// generation). Documented in the README; override with --seed.
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEEULL;

// Ambient size cap imposed by the 64-bit edge bitmask (C(11,2) = 55).
inline constexpr int kMaxAmbient = 11;

// Runs fn(i) for i in [0, count). threads = 0 means hardware concurrency,
// 1 forces serial execution. Results must not depend on the partitioning;
// callers write to disjoint slots.
template <class Fn>
void parallel_for_index(std::size_t count, unsigned threads, Fn&& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    if (threads == 0) threads = hw ? hw : 1;
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (threads > count) threads = static_cast<unsigned>(count);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += threads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace flagforms
