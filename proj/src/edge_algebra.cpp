#include "flagforms/edge_algebra.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace flagforms {

void check_ambient(int n) {
    if (n < 1 || n > kMaxAmbient)
        throw std::invalid_argument("ambient size must be in [1, " +
                                    std::to_string(kMaxAmbient) + "]");
}

void check_edge(Edge e, int n) {
    if (!(1 <= e.i && e.i < e.j && e.j <= n))
        throw std::invalid_argument("edge indices must satisfy 1 <= i < j <= n");
}

int edge_index(Edge e, int n) {
    check_edge(e, n);
    // rows of length n-1, n-2, ... before row i
    int before = (e.i - 1) * n - (e.i - 1) * e.i / 2;
    return before + (e.j - e.i - 1);
}

Edge edge_from_index(int index, int n) {
    if (index < 0 || index >= edge_count(n)) throw std::invalid_argument("edge index out of range");
    int i = 1;
    int row = n - 1;
    while (index >= row) {
        index -= row;
        --row;
        ++i;
    }
    return Edge{i, i + 1 + index};
}

EdgeMask edge_bit(Edge e, int n) { return EdgeMask{1} << edge_index(e, n); }

std::vector<Edge> mask_edges(EdgeMask mask, int n) {
    std::vector<Edge> edges;
    while (mask) {
        int b = std::countr_zero(mask);
        edges.push_back(edge_from_index(b, n));
        mask &= mask - 1;
    }
    return edges;
}

GammaPolynomial GammaPolynomial::unit(int n) {
    GammaPolynomial p(n);
    p.terms_.push_back({EdgeMask{0}, Integer(1)});
    return p;
}

GammaPolynomial GammaPolynomial::gamma(Edge e, int n) {
    GammaPolynomial p(n);
    p.terms_.push_back({edge_bit(e, n), Integer(1)});
    return p;
}

GammaPolynomial GammaPolynomial::monomial(EdgeMask mask, Integer coeff, int n) {
    GammaPolynomial p(n);
    if (mask >> edge_count(n)) throw std::invalid_argument("edge mask exceeds ambient size");
    if (coeff != 0) p.terms_.push_back({mask, std::move(coeff)});
    return p;
}

Integer GammaPolynomial::coefficient(EdgeMask mask) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                               [](const auto& t, EdgeMask m) { return t.first < m; });
    if (it != terms_.end() && it->first == mask) return it->second;
    return 0;
}

bool GammaPolynomial::homogeneous_of_degree(int d) const {
    for (const auto& [mask, c] : terms_)
        if (std::popcount(mask) != d) return false;
    return true;
}

void GammaPolynomial::add_term(EdgeMask mask, Integer coeff) {
    terms_.push_back({mask, std::move(coeff)});
}

void GammaPolynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
        EdgeMask mask = terms_[i].first;
        Integer c = std::move(terms_[i].second);
        for (++i; i < terms_.size() && terms_[i].first == mask; ++i) c += terms_[i].second;
        if (c != 0) terms_[out++] = {mask, std::move(c)};
    }
    terms_.resize(out);
}

GammaPolynomial& GammaPolynomial::operator+=(const GammaPolynomial& o) {
    if (n_ != o.n_) throw std::invalid_argument("ambient size mismatch");
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

GammaPolynomial& GammaPolynomial::operator-=(const GammaPolynomial& o) {
    if (n_ != o.n_) throw std::invalid_argument("ambient size mismatch");
    for (const auto& [mask, c] : o.terms_) terms_.push_back({mask, -c});
    normalize();
    return *this;
}

GammaPolynomial GammaPolynomial::operator+(const GammaPolynomial& o) const {
    GammaPolynomial r = *this;
    r += o;
    return r;
}

GammaPolynomial GammaPolynomial::operator-(const GammaPolynomial& o) const {
    GammaPolynomial r = *this;
    r -= o;
    return r;
}

GammaPolynomial GammaPolynomial::operator*(const Integer& c) const {
    GammaPolynomial r(n_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

bool GammaPolynomial::operator==(const GammaPolynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
}

std::string GammaPolynomial::to_text() const {
    std::string s;
    for (const auto& [mask, c] : terms_) {
        s += (c < 0) ? "-" : "+";
        Integer a = abs(c);
        s += a.get_str();
        for (Edge e : mask_edges(mask, n_))
            s += (s.back() == ')' ? " g(" : " * g(") + std::to_string(e.i) + "," +
                 std::to_string(e.j) + ")";
        s += "\n";
    }
    return s;
}

GammaPolynomial curvature_form(int i, int n) {
    check_ambient(n);
    if (i < 1 || i > n) throw std::invalid_argument("curvature index out of range");
    GammaPolynomial w(n);
    for (int j = i + 1; j <= n; ++j) w.add_term(edge_bit(Edge{i, j}, n), 1);
    for (int j = 1; j < i; ++j) w.add_term(edge_bit(Edge{j, i}, n), -1);
    w.normalize();
    return w;
}

GammaPolynomial multiply(const GammaPolynomial& p, const GammaPolynomial& q) {
    if (p.ambient() != q.ambient()) throw std::invalid_argument("ambient size mismatch");
    GammaPolynomial r(p.ambient());
    r.terms_.reserve(p.terms_.size());
    for (const auto& [ma, ca] : p.terms_)
        for (const auto& [mb, cb] : q.terms_) {
            if (ma & mb) continue;  // gamma^2 = 0
            r.add_term(ma | mb, ca * cb);
        }
    r.normalize();
    return r;
}

GammaPolynomial multiply_by_curvature(const GammaPolynomial& p, int i) {
    int n = p.ambient();
    if (i < 1 || i > n) throw std::invalid_argument("curvature index out of range");
    GammaPolynomial r(n);
    r.terms_.reserve(p.terms_.size() * (n - 1));
    for (const auto& [mask, c] : p.terms_) {
        for (int j = i + 1; j <= n; ++j) {
            EdgeMask bit = edge_bit(Edge{i, j}, n);
            if (!(mask & bit)) r.add_term(mask | bit, c);
        }
        for (int j = 1; j < i; ++j) {
            EdgeMask bit = edge_bit(Edge{j, i}, n);
            if (!(mask & bit)) r.add_term(mask | bit, -c);
        }
    }
    r.normalize();
    return r;
}

GammaPolynomial evaluate_exponent(const Exponents& alpha, const std::vector<int>& subset, int n) {
    check_ambient(n);
    if (alpha.size() != subset.size())
        throw std::invalid_argument("exponent/subset length mismatch");
    std::set<int> seen;
    for (int v : subset) {
        if (v < 1 || v > n) throw std::invalid_argument("subset index out of range");
        if (!seen.insert(v).second) throw std::invalid_argument("repeated index in subset");
    }
    GammaPolynomial acc = GammaPolynomial::unit(n);
    for (std::size_t t = 0; t < alpha.size(); ++t) {
        if (alpha[t] < 0) throw std::invalid_argument("negative exponent");
        for (int rep = 0; rep < alpha[t] && !acc.is_zero(); ++rep)
            acc = multiply_by_curvature(acc, subset[t]);
    }
    return acc;
}

GammaRational evaluate_polynomial(const RationalPolynomial& p, const std::vector<int>& subset,
                                  int n) {
    if (p.nvars() > static_cast<int>(subset.size()))
        throw std::invalid_argument("polynomial has more variables than subset entries");
    // clear denominators so every exponent evaluation stays in Z
    Integer den = 1;
    for (const auto& t : p.terms())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    GammaRational result;
    result.num = GammaPolynomial(n);
    result.den = den;
    for (const auto& t : p.terms()) {
        Integer scaled = t.coeff.get_num() * (den / t.coeff.get_den());
        Exponents alpha(t.mono.begin(), t.mono.begin() + p.nvars());
        std::vector<int> sub(subset.begin(), subset.begin() + p.nvars());
        result.num += evaluate_exponent(alpha, sub, n) * scaled;
    }
    if (result.num.is_zero()) {
        result.den = 1;
        return result;
    }
    Integer content = result.den;
    for (const auto& [mask, c] : result.num.terms())
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1) {
        GammaPolynomial reduced(n);
        for (const auto& [mask, c] : result.num.terms())
            reduced += GammaPolynomial::monomial(mask, c / content, n);
        result.num = reduced;
        result.den /= content;
    }
    return result;
}

GammaPolynomial apply_transposition(int t, const GammaPolynomial& p) {
    int n = p.ambient();
    if (t < 1 || t >= n) throw std::invalid_argument("transposition index out of range");
    auto relabel = [&](int v) { return v == t ? t + 1 : (v == t + 1 ? t : v); };
    EdgeMask swap_bit = edge_bit(Edge{t, t + 1}, n);
    GammaPolynomial r(n);
    r.terms_.reserve(p.terms_.size());
    for (const auto& [mask, c] : p.terms_) {
        EdgeMask out = 0;
        for (Edge e : mask_edges(mask, n)) {
            int a = relabel(e.i), b = relabel(e.j);
            if (a > b) std::swap(a, b);
            out |= edge_bit(Edge{a, b}, n);
        }
        r.add_term(out, (mask & swap_bit) ? -c : c);
    }
    r.normalize();
    return r;
}

}  // namespace flagforms
