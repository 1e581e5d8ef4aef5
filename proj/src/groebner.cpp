#include "flagforms/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace flagforms {

IdealSpec build_ideal_generators(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    IdealSpec spec;
    spec.k = k;
    spec.n = n;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> subset;
        RationalPolynomial sum(k);
        for (int v = 1; v <= k; ++v)
            if (mask & (1u << (v - 1))) {
                subset.push_back(v);
                sum += RationalPolynomial::variable(v, k);
            }
        int j = static_cast<int>(subset.size());
        spec.subsets.push_back(std::move(subset));
        spec.generators.push_back(sum.pow(j * (n - j) + 1));
    }
    return spec;
}

namespace {

// Full multivariate division: reduces every term, not just the lead.
RationalPolynomial divide_fully(const RationalPolynomial& p,
                                const std::vector<RationalPolynomial>& divisors) {
    RationalPolynomial work = p;
    RationalPolynomial remainder(p.nvars());
    while (!work.is_zero()) {
        const PolyTerm& lead = work.leading_term();
        bool reduced = false;
        for (const auto& g : divisors) {
            if (g.is_zero()) continue;
            if (exponents_divide(g.leading_monomial(), lead.mono)) {
                Exponents shift = exponents_sub(lead.mono, g.leading_monomial());
                work.sub_scaled(lead.coeff / g.leading_term().coeff, shift, g);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder += RationalPolynomial::from_terms({lead}, p.nvars());
            work -= RationalPolynomial::from_terms({lead}, p.nvars());
        }
    }
    return remainder;
}

RationalPolynomial s_polynomial(const RationalPolynomial& f, const RationalPolynomial& g) {
    Exponents l = exponents_lcm(f.leading_monomial(), g.leading_monomial());
    RationalPolynomial s(f.nvars());
    s.sub_scaled(-Rational(1) / f.leading_term().coeff,
                 exponents_sub(l, f.leading_monomial()), f);
    s.sub_scaled(Rational(1) / g.leading_term().coeff, exponents_sub(l, g.leading_monomial()),
                 g);
    return s;
}

struct Pair {
    std::size_t i, j;
    Exponents lcm;
    int degree;
};

bool coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t] > 0 && b[t] > 0) return false;
    return true;
}

}  // namespace

GroebnerBasis buchberger(std::vector<RationalPolynomial> gens) {
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const RationalPolynomial& p) { return p.is_zero(); }),
               gens.end());
    if (gens.empty()) throw std::invalid_argument("no nonzero generators");
    int nvars = gens.front().nvars();
    for (const auto& g : gens)
        if (g.nvars() != nvars) throw std::invalid_argument("generator arity mismatch");

    std::vector<RationalPolynomial> basis;
    for (auto& g : gens) {
        g.make_primitive();
        basis.push_back(std::move(g));
    }

    auto make_pair = [&](std::size_t i, std::size_t j) {
        Exponents l = exponents_lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
        int deg = total_degree(l);
        return Pair{i, j, std::move(l), deg};
    };

    std::vector<Pair> queue;
    std::set<std::pair<std::size_t, std::size_t>> treated;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) queue.push_back(make_pair(i, j));

    auto chain_skippable = [&](const Pair& pr) {
        // Buchberger's second criterion: some l with LM(l) | lcm(i,j) and
        // both flanking pairs already handled.
        for (std::size_t l = 0; l < basis.size(); ++l) {
            if (l == pr.i || l == pr.j) continue;
            if (!exponents_divide(basis[l].leading_monomial(), pr.lcm)) continue;
            auto a = std::minmax(pr.i, l);
            auto b = std::minmax(pr.j, l);
            if (treated.count({a.first, a.second}) && treated.count({b.first, b.second}))
                return true;
        }
        return false;
    };

    while (!queue.empty()) {
        // normal strategy: smallest lcm degree first, degrevlex tie-break
        std::size_t pick = 0;
        for (std::size_t q = 1; q < queue.size(); ++q) {
            if (queue[q].degree < queue[pick].degree ||
                (queue[q].degree == queue[pick].degree &&
                 degrevlex_less(queue[q].lcm, queue[pick].lcm)))
                pick = q;
        }
        Pair pr = std::move(queue[pick]);
        queue[pick] = std::move(queue.back());
        queue.pop_back();
        treated.insert({pr.i, pr.j});

        if (coprime(basis[pr.i].leading_monomial(), basis[pr.j].leading_monomial())) continue;
        if (chain_skippable(pr)) continue;

        RationalPolynomial h = divide_fully(s_polynomial(basis[pr.i], basis[pr.j]), basis);
        if (h.is_zero()) continue;
        h.make_primitive();
        std::size_t t = basis.size();
        basis.push_back(std::move(h));
        for (std::size_t i = 0; i < t; ++i) queue.push_back(make_pair(i, t));
    }

    // inter-reduce to the unique reduced basis
    std::vector<RationalPolynomial> reduced;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (!exponents_divide(basis[j].leading_monomial(), basis[i].leading_monomial()))
                continue;
            // equal leading monomials: keep the earlier one
            if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i) continue;
            redundant = true;
            break;
        }
        if (!redundant) reduced.push_back(basis[i]);
    }
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<RationalPolynomial> others;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = divide_fully(reduced[i], others);
        reduced[i].make_monic();
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const RationalPolynomial& a, const RationalPolynomial& b) {
                  return degrevlex_less(a.leading_monomial(), b.leading_monomial());
              });
    return GroebnerBasis{nvars, std::move(reduced)};
}

RationalPolynomial normal_form(const RationalPolynomial& p, const GroebnerBasis& G) {
    if (p.nvars() != G.nvars) throw std::invalid_argument("arity mismatch with basis");
    return divide_fully(p, G.polys);
}

HilbertSeries hilbert_series_quotient(const GroebnerBasis& G) {
    std::vector<Exponents> leads;
    for (const auto& g : G.polys) leads.push_back(g.leading_monomial());
    for (const auto& m : leads)
        if (total_degree(m) == 0) return HilbertSeries{};  // unit ideal, zero algebra

    // Artinian precisely when every variable carries a pure-power lead.
    for (int v = 0; v < G.nvars; ++v) {
        bool pure = false;
        for (const auto& m : leads) {
            bool only_v = m[v] > 0;
            for (int u = 0; only_v && u < G.nvars; ++u)
                if (u != v && m[u] > 0) only_v = false;
            if (only_v) {
                pure = true;
                break;
            }
        }
        if (!pure) throw std::invalid_argument("quotient not finite-dimensional");
    }

    HilbertSeries series;
    for (int d = 0;; ++d) {
        std::int64_t count = 0;
        for (const auto& mono : degree_monomials(G.nvars, d)) {
            bool standard = true;
            for (const auto& m : leads)
                if (exponents_divide(m, mono)) {
                    standard = false;
                    break;
                }
            if (standard) ++count;
        }
        // once a whole degree is divisible, every higher degree is too
        if (count == 0) break;
        series.coeffs.push_back(count);
    }
    return series;
}

const GroebnerBasis& vanishing_ideal_basis(int k, int n) {
    static std::map<std::pair<int, int>, GroebnerBasis> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({k, n});
    if (it == cache.end())
        it = cache.emplace(std::pair{k, n}, buchberger(build_ideal_generators(k, n).generators))
                 .first;
    return it->second;
}

bool membership_via_derivatives(const RationalPolynomial& p, int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    if (p.nvars() != k) throw std::invalid_argument("polynomial arity must equal k");
    if (p.is_zero()) return true;
    if (n == k) return normal_form(p, vanishing_ideal_basis(k, k)).is_zero();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        RationalPolynomial q = p.mixed_partial(mask);
        if (q.is_zero()) continue;
        if (!membership_via_derivatives(q, k, n - 1)) return false;
    }
    return true;
}

HilbertSeries cohomology_poincare(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    std::vector<std::int64_t> coeffs{1};
    for (int m = 2; m <= n; ++m) {
        std::vector<std::int64_t> next(coeffs.size() + m - 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            for (int q = 0; q < m; ++q) next[i + q] += coeffs[i];
        coeffs = std::move(next);
    }
    return HilbertSeries{std::move(coeffs)};
}

RationalPolynomial elementary_symmetric(int m, int nvars) {
    if (m < 0 || m > nvars) throw std::invalid_argument("symmetric degree out of range");
    // coefficient extraction from prod (1 + x_i t): entry [j] = e_j so far
    std::vector<RationalPolynomial> e(m + 1, RationalPolynomial(nvars));
    e[0] = RationalPolynomial::constant(Rational(1), nvars);
    for (int v = 1; v <= nvars; ++v) {
        RationalPolynomial xv = RationalPolynomial::variable(v, nvars);
        for (int j = std::min(m, v); j >= 1; --j) e[j] += e[j - 1] * xv;
    }
    return e[m];
}

}  // namespace flagforms
