#ifndef SINGVECT_PARAMPOLY_HPP
#define SINGVECT_PARAMPOLY_HPP

#include "singvect/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <vector>

namespace singvect {

// Exponent vector over the weight parameters l1..ln.
using Mono = std::vector<unsigned>;

inline unsigned mono_degree(const Mono& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

// Graded lexicographic term order (total degree first, then lex).
struct MonoGradedLex {
    bool operator()(const Mono& x, const Mono& y) const {
        unsigned dx = mono_degree(x), dy = mono_degree(y);
        if (dx != dy) return dx < dy;
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }
};

// Sparse polynomial in Q[l1..ln]. Canonical: no zero coefficients stored,
// terms ordered graded-lex. All arithmetic requires matching parameter count.
class ParamPoly {
public:
    ParamPoly() : np_(0) {}
    explicit ParamPoly(int nparams) : np_(nparams) {}

    static ParamPoly constant(int nparams, const Rational& c) {
        ParamPoly p(nparams);
        if (c != 0) p.terms_[Mono(nparams, 0)] = c;
        return p;
    }
    static ParamPoly variable(int nparams, int idx, const Rational& coeff = 1) {
        ParamPoly p(nparams);
        if (coeff != 0) {
            Mono m(nparams, 0);
            m[idx] = 1;
            p.terms_[m] = coeff;
        }
        return p;
    }

    int nparams() const { return np_; }
    const std::map<Mono, Rational, MonoGradedLex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
    }
    Rational constant_value() const {
        if (terms_.empty()) return 0;
        return terms_.begin()->second;
    }

    int degree() const {
        if (terms_.empty()) return -1;
        return static_cast<int>(mono_degree(terms_.rbegin()->first));
    }
    int degree_in(int var) const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
        return d;
    }
    bool uses(int var) const { return degree_in(var) > 0; }

    // Leading term w.r.t. graded lex.
    std::pair<Mono, Rational> leading() const { return *terms_.rbegin(); }

    ParamPoly operator-() const {
        ParamPoly r(np_);
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    ParamPoly& operator+=(const ParamPoly& o) {
        check(o);
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& o) {
        check(o);
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }

    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        a.check(b);
        ParamPoly r(a.np_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) {
                Mono m(a.np_);
                for (int i = 0; i < a.np_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    ParamPoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
    friend ParamPoly operator*(const Rational& c, ParamPoly a) { return a *= c; }

    bool operator==(const ParamPoly& o) const { return np_ == o.np_ && terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    // Deterministic total order for sorting polynomial lists.
    static int compare(const ParamPoly& a, const ParamPoly& b) {
        if (a.np_ != b.np_) return a.np_ < b.np_ ? -1 : 1;
        auto ia = a.terms_.rbegin(), ib = b.terms_.rbegin();
        MonoGradedLex less;
        for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
            if (less(ia->first, ib->first)) return -1;
            if (less(ib->first, ia->first)) return 1;
            if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        }
        if (ia != a.terms_.rend()) return 1;
        if (ib != b.terms_.rend()) return -1;
        return 0;
    }
    bool operator<(const ParamPoly& o) const { return compare(*this, o) < 0; }

    Rational eval(std::span<const Rational> point) const {
        Rational total = 0;
        for (auto& [m, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < np_; ++i)
                for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
            total += t;
        }
        return total;
    }

    // Replace parameter `var` by `repl` (any polynomial over the same list).
    ParamPoly substitute(int var, const ParamPoly& repl) const {
        check(repl);
        ParamPoly r(np_);
        for (auto& [m, c] : terms_) {
            Mono rest = m;
            unsigned e = rest[var];
            rest[var] = 0;
            ParamPoly t(np_);
            t.terms_[rest] = c;
            for (unsigned i = 0; i < e; ++i) t *= repl;
            r += t;
        }
        return r;
    }

    ParamPoly derivative(int var) const {
        ParamPoly r(np_);
        for (auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Mono d = m;
            d[var] -= 1;
            r.add_term(d, c * Rational(m[var]));
        }
        return r;
    }

    // gcd of coefficients, signed so that content * primitive_part == *this
    // with a positive leading coefficient on the primitive part.
    Rational content() const {
        if (terms_.empty()) return 0;
        Rational g = 0;
        for (auto& [m, c] : terms_) g = rational_gcd(g, c);
        if (terms_.rbegin()->second < 0) g = -g;
        return g;
    }
    ParamPoly primitive_part() const {
        if (terms_.empty()) return *this;
        Rational c = content();
        ParamPoly r = *this;
        for (auto& [m, v] : r.terms_) v /= c;
        return r;
    }

    // Exact division; nullopt if the divisor does not divide exactly.
    std::optional<ParamPoly> divide_exact(const ParamPoly& d) const {
        check(d);
        if (d.is_zero()) return std::nullopt;
        ParamPoly rem = *this, quot(np_);
        const auto& [dm, dc] = *d.terms_.rbegin();
        while (!rem.is_zero()) {
            const auto& [rm, rc] = *rem.terms_.rbegin();
            Mono q(np_);
            for (int i = 0; i < np_; ++i) {
                if (rm[i] < dm[i]) return std::nullopt;
                q[i] = rm[i] - dm[i];
            }
            Rational qc = rc / dc;
            ParamPoly t(np_);
            t.terms_[q] = qc;
            quot += t;
            rem -= t * d;
        }
        return quot;
    }

    std::string to_string() const {
        std::vector<std::string> names;
        for (int i = 0; i < np_; ++i) names.push_back("l" + std::to_string(i + 1));
        return to_string(names);
    }
    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        // Highest terms first reads like handwritten polynomials.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Rational c = it->second;
            bool neg = c < 0;
            if (first) {
                if (neg) out << "-";
            } else {
                out << (neg ? " - " : " + ");
            }
            if (neg) c = -c;
            std::string vars;
            for (int i = 0; i < np_; ++i)
                for (unsigned e = 0; e < it->first[i]; ++e) {
                    if (!vars.empty()) vars += "*";
                    vars += names[i];
                }
            if (vars.empty())
                out << singvect::to_string(c);
            else if (c == 1)
                out << vars;
            else
                out << singvect::to_string(c) << "*" << vars;
            first = false;
        }
        return out.str();
    }

private:
    void check(const ParamPoly& o) const {
        if (np_ != o.np_) throw std::invalid_argument("parameter-list mismatch");
    }
    void add_term(const Mono& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int np_;
    std::map<Mono, Rational, MonoGradedLex> terms_;
};

enum class PolyOp { Add, Mul, Neg };

inline ParamPoly poly_arith(PolyOp op, const ParamPoly& p, const ParamPoly& q) {
    switch (op) {
        case PolyOp::Add: return p + q;
        case PolyOp::Mul: return p * q;
        case PolyOp::Neg: return -p;
    }
    throw std::invalid_argument("unknown poly op");
}

}  // namespace singvect

#endif
