#include "flagforms/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace flagforms {

int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool exponents_divide(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exponents_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponents exponents_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exponents exponents_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool degrevlex_less(const Exponents& a, const Exponents& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
        int d = a[i] - b[i];
        if (d != 0) return d > 0;
    }
    return false;
}

std::vector<Exponents> degree_monomials(int k, int d) {
    if (k < 1) throw std::invalid_argument("need at least one variable");
    std::vector<Exponents> out;
    Exponents cur(k, 0);
    // descending lex: the leftmost variable takes the largest share first
    auto rec = [&](auto&& self, int var, int rest) -> void {
        if (var == k - 1) {
            cur[var] = rest;
            out.push_back(cur);
            return;
        }
        for (int e = rest; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, rest - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, d);
    return out;
}

RationalPolynomial RationalPolynomial::constant(const Rational& c, int nvars) {
    RationalPolynomial p(nvars);
    if (c != 0) p.terms_.push_back({Exponents(nvars, 0), c});
    return p;
}

RationalPolynomial RationalPolynomial::variable(int index, int nvars) {
    if (index < 1 || index > nvars) throw std::invalid_argument("variable index out of range");
    RationalPolynomial p(nvars);
    Exponents mono(nvars, 0);
    mono[index - 1] = 1;
    p.terms_.push_back({std::move(mono), Rational(1)});
    return p;
}

RationalPolynomial RationalPolynomial::from_terms(std::vector<PolyTerm> terms, int nvars) {
    RationalPolynomial p(nvars);
    for (auto& t : terms)
        if (static_cast<int>(t.mono.size()) != nvars)
            throw std::invalid_argument("term arity mismatch");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

const PolyTerm& RationalPolynomial::leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("leading term of zero polynomial");
    return terms_.front();
}

void RationalPolynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const PolyTerm& a, const PolyTerm& b) { return degrevlex_less(b.mono, a.mono); });
    std::vector<PolyTerm> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const PolyTerm& t) { return t.coeff == 0; }),
              out.end());
    terms_ = std::move(out);
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    // merge of two descending-sorted term lists
    std::vector<PolyTerm> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            Rational c = terms_[i].coeff + o.terms_[j].coeff;
            if (c != 0) out.push_back({terms_[i].mono, std::move(c)});
            ++i, ++j;
        } else if (degrevlex_less(o.terms_[j].mono, terms_[i].mono)) {
            out.push_back(terms_[i++]);
        } else {
            out.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) out.push_back(terms_[i++]);
    while (j < o.terms_.size()) out.push_back(o.terms_[j++]);
    terms_ = std::move(out);
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
    return *this += -o;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
    RationalPolynomial r = *this;
    r += o;
    return r;
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
    RationalPolynomial r = *this;
    r -= o;
    return r;
}

RationalPolynomial RationalPolynomial::operator-() const {
    RationalPolynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    std::map<Exponents, Rational, bool (*)(const Exponents&, const Exponents&)> acc(degrevlex_less);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Exponents m = exponents_add(a.mono, b.mono);
            acc[std::move(m)] += a.coeff * b.coeff;
        }
    RationalPolynomial r(nvars_);
    r.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) r.terms_.push_back({it->first, it->second});
    return r;
}

RationalPolynomial RationalPolynomial::operator*(const Rational& c) const {
    RationalPolynomial r(nvars_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

void RationalPolynomial::sub_scaled(const Rational& c, const Exponents& mono,
                                    const RationalPolynomial& g) {
    RationalPolynomial shifted(nvars_);
    shifted.terms_.reserve(g.terms_.size());
    for (const auto& t : g.terms_)
        shifted.terms_.push_back({exponents_add(t.mono, mono), -c * t.coeff});
    // shifting by a fixed monomial preserves degrevlex order
    *this += shifted;
}

RationalPolynomial RationalPolynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    RationalPolynomial r = constant(Rational(1), nvars_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

RationalPolynomial RationalPolynomial::derivative(int var) const {
    if (var < 1 || var > nvars_) throw std::invalid_argument("variable index out of range");
    RationalPolynomial r(nvars_);
    for (const auto& t : terms_) {
        int e = t.mono[var - 1];
        if (e == 0) continue;
        Exponents m = t.mono;
        m[var - 1] = e - 1;
        r.terms_.push_back({std::move(m), t.coeff * e});
    }
    r.normalize();
    return r;
}

RationalPolynomial RationalPolynomial::mixed_partial(unsigned var_mask) const {
    RationalPolynomial r = *this;
    for (int v = 1; v <= nvars_; ++v)
        if (var_mask & (1u << (v - 1))) r = r.derivative(v);
    return r;
}

void RationalPolynomial::make_monic() {
    if (terms_.empty()) return;
    Rational lc = terms_.front().coeff;
    for (auto& t : terms_) t.coeff /= lc;
}

void RationalPolynomial::make_primitive() {
    if (terms_.empty()) return;
    Integer den_lcm = 1;
    for (const auto& t : terms_)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    Integer content = 0;
    for (const auto& t : terms_) {
        Integer num = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    Rational scale = make_rational(den_lcm, content);
    if (terms_.front().coeff < 0) scale = -scale;
    for (auto& t : terms_) t.coeff *= scale;
}

bool RationalPolynomial::operator==(const RationalPolynomial& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

std::string RationalPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        Rational c = t.coeff;
        if (i == 0) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += (c < 0) ? " - " : " + ";
            if (c < 0) c = -c;
        }
        bool constant_term = total_degree(t.mono) == 0;
        if (c != 1 || constant_term) {
            s += c.get_str();
            if (!constant_term) s += "*";
        }
        bool first_var = true;
        for (int v = 0; v < nvars_; ++v) {
            if (t.mono[v] == 0) continue;
            if (!first_var) s += "*";
            first_var = false;
            s += "x" + std::to_string(v + 1);
            if (t.mono[v] > 1) s += "^" + std::to_string(t.mono[v]);
        }
    }
    return s;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Integer parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected integer in polynomial text");
        return Integer(std::string(text.substr(start, pos - start)));
    }
};

}  // namespace

RationalPolynomial RationalPolynomial::parse(std::string_view text, int nvars) {
    Parser in{text};
    std::vector<PolyTerm> terms;
    if (in.eof()) throw std::invalid_argument("empty polynomial text");
    if (in.peek() == '0') {
        ++in.pos;
        if (in.eof()) return RationalPolynomial(nvars);
        in.pos = 0;
    }
    bool first = true;
    while (!in.eof()) {
        int sign = 1;
        if (in.consume('+')) {
            sign = 1;
        } else if (in.consume('-')) {
            sign = -1;
        } else if (!first) {
            throw std::invalid_argument("expected +/- between terms");
        }
        first = false;
        Rational coeff(1);
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
            Integer num = in.parse_integer();
            Integer den = 1;
            if (in.consume('/')) den = in.parse_integer();
            coeff = make_rational(num, den);
            saw_coeff = true;
        }
        Exponents mono(nvars, 0);
        bool saw_var = false;
        auto parse_var = [&]() {
            ++in.pos;  // 'x'
            Integer idx = in.parse_integer();
            long v = idx.get_si();
            if (v < 1 || v > nvars) throw std::invalid_argument("variable index out of range");
            long e = 1;
            if (in.consume('^')) e = in.parse_integer().get_si();
            if (e < 0) throw std::invalid_argument("negative exponent");
            mono[v - 1] += static_cast<int>(e);
            saw_var = true;
        };
        if (saw_coeff) {
            while (in.consume('*')) {
                if (in.peek() != 'x') throw std::invalid_argument("expected variable after *");
                parse_var();
            }
        } else {
            if (in.peek() != 'x') throw std::invalid_argument("expected coefficient or variable");
            parse_var();
            while (in.consume('*')) {
                if (in.peek() != 'x') throw std::invalid_argument("expected variable after *");
                parse_var();
            }
        }
        if (!saw_coeff && !saw_var) throw std::invalid_argument("empty term");
        if (sign < 0) coeff = -coeff;
        terms.push_back({std::move(mono), std::move(coeff)});
    }
    return from_terms(std::move(terms), nvars);
}

}  // namespace flagforms
