#ifndef SINGVECT_INDUCED_HPP
#define SINGVECT_INDUCED_HPP

#include "singvect/hw_module.hpp"

#include <compare>

namespace singvect {

// Monomial in the d_i: even multi-index plus ordered odd subset
// (d_xi^2 = 0, signs absorbed into coefficients).
struct DMonomial {
    std::vector<unsigned> xexp;  // size a
    uint32_t ximask = 0;

    int degree() const {
        int d = std::popcount(ximask);
        for (unsigned e : xexp) d += static_cast<int>(e);
        return d;
    }
    std::vector<int> weight(int n) const {
        std::vector<int> w(n, 0);
        for (size_t i = 0; i < xexp.size(); ++i) w[i] -= static_cast<int>(xexp[i]);
        int a = static_cast<int>(xexp.size());
        for (int j = 0; a + j < n; ++j)
            if (ximask & (1u << j)) w[a + j] -= 1;
        return w;
    }
    // Index tuple 1..n with multiplicity, ascending.
    std::vector<int> index_tuple() const {
        std::vector<int> t;
        for (size_t i = 0; i < xexp.size(); ++i)
            for (unsigned e = 0; e < xexp[i]; ++e) t.push_back(static_cast<int>(i));
        int a = static_cast<int>(xexp.size());
        for (int j = 0; j < 30; ++j)
            if (ximask & (1u << j)) t.push_back(a + j);
        return t;
    }
    auto operator<=>(const DMonomial&) const = default;

    std::string to_string() const {
        std::string s;
        for (int i : index_tuple()) {
            if (!s.empty()) s += "*";
            s += "d" + std::to_string(i + 1);
        }
        return s.empty() ? "1" : s;
    }
};

// Storage order: even multi-index graded-lex, then odd subset.
struct DMonStorageLess {
    bool operator()(const DMonomial& x, const DMonomial& y) const {
        MonoGradedLex less;
        if (x.xexp != y.xexp) return less(x.xexp, y.xexp);
        return x.ximask < y.ximask;
    }
};

// Case enumeration order: highest d-monomial weight first, i.e. descending
// lexicographic on the ascending index tuple. The leading nonzero coefficient
// of a singular vector sits at the earliest monomial in this order.
inline bool case_order_before(const DMonomial& x, const DMonomial& y) {
    return x.index_tuple() > y.index_tuple();
}

inline std::vector<DMonomial> dmonomials_of_degree(SuperDims dims, int k) {
    std::vector<DMonomial> out;
    std::vector<unsigned> xexp(dims.a, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == dims.a) {
            for (uint32_t mask = 0; mask < (1u << dims.b); ++mask)
                if (std::popcount(mask) == left) out.push_back(DMonomial{xexp, mask});
            return;
        }
        for (int e = left; e >= 0; --e) {
            xexp[pos] = static_cast<unsigned>(e);
            self(self, pos + 1, left - e);
        }
        xexp[pos] = 0;
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end(), case_order_before);
    return out;
}

// Element of the degree component I(V)_{-k}.
struct InducedElement {
    int degree = 0;
    std::map<DMonomial, ModuleElement, DMonStorageLess> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const DMonomial& d, const Word& w, const ParamPoly& c) {
        if (c.is_zero()) return;
        auto& m = terms[d];
        m.add(w, c);
        if (m.is_zero()) terms.erase(d);
    }
    void add_scaled(const DMonomial& d, const ModuleElement& m, const ParamPoly& c) {
        if (m.is_zero() || c.is_zero()) return;
        auto& dst = terms[d];
        dst.add_scaled(m, c);
        if (dst.is_zero()) terms.erase(d);
    }
};

namespace induced_detail {

// d_h * D, canonical; nullopt when an odd factor repeats.
inline std::optional<std::pair<int, DMonomial>> dmul(SuperDims dims, int h, DMonomial d) {
    if (h < dims.a) {
        d.xexp[h] += 1;
        return std::pair{1, d};
    }
    int j = h - dims.a;
    if (d.ximask & (1u << j)) return std::nullopt;
    int below = std::popcount(d.ximask & ((1u << j) - 1));
    d.ximask |= 1u << j;
    return std::pair{(below % 2) ? -1 : 1, d};
}

// Leftmost factor; stripping the leftmost never produces a sign.
inline std::pair<int, DMonomial> strip_first(SuperDims dims, DMonomial d) {
    for (int i = 0; i < dims.a; ++i)
        if (d.xexp[i]) {
            d.xexp[i] -= 1;
            return {i, d};
        }
    int j = std::countr_zero(d.ximask);
    d.ximask &= ~(1u << j);
    return {dims.a + j, d};
}

inline InducedElement act_single(const GlContext& ctx, const SuperField& term, const DMonomial& d,
                                 const ModuleElement& m);

inline void act_and_accumulate(const GlContext& ctx, const SuperField& x, const DMonomial& d,
                               const ModuleElement& m, InducedElement& out, const Rational& scale) {
    for (auto& [k, c] : x.terms()) {
        SuperField one = SuperField::term(x.dims(), 1, k.xexp, k.ximask, k.target);
        InducedElement part = act_single(ctx, one, d, m);
        for (auto& [d2, m2] : part.terms)
            out.add_scaled(d2, m2, ParamPoly::constant(ctx.nparams(), c * scale));
    }
}

inline InducedElement act_single(const GlContext& ctx, const SuperField& term, const DMonomial& d,
                                 const ModuleElement& m) {
    SuperDims dims = term.dims();
    InducedElement out;
    if (d.degree() == 0) {
        int deg = term.degree();
        if (deg == -1) {
            const auto& key = term.terms().begin()->first;
            DMonomial single;
            single.xexp.assign(dims.a, 0);
            auto prod = dmul(dims, key.target, single);
            out.add_scaled(prod->second, m, ParamPoly::constant(ctx.nparams(), prod->first));
        } else if (deg == 0) {
            ModuleElement acted = act_g0(ctx, term, m);
            DMonomial unit;
            unit.xexp.assign(dims.a, 0);
            out.add_scaled(unit, acted, ParamPoly::constant(ctx.nparams(), 1));
        }
        // deg >= 1 annihilates 1 (x) v0-side: g_> V = 0
        return out;
    }

    auto [h, rest] = strip_first(dims, d);
    int sign = (term.parity() && dims.odd_coord(h)) ? -1 : 1;

    InducedElement inner = act_single(ctx, term, rest, m);
    for (auto& [d2, m2] : inner.terms) {
        auto prod = dmul(dims, h, d2);
        if (!prod) continue;
        out.add_scaled(prod->second, m2, ParamPoly::constant(ctx.nparams(), sign * prod->first));
    }

    SuperField bracket = supercommutator(term, SuperField::partial(dims, h));
    if (!bracket.is_zero()) act_and_accumulate(ctx, bracket, rest, m, out, 1);
    return out;
}

}  // namespace induced_detail

// U(g)-action of a homogeneous vector field on I(V) = C[d] (x) V:
// X walks left through the d-factors by supercommutators, g_{-1} parts
// multiply, g0 acts on the module part, g_> kills v0.
inline InducedElement act(const GlContext& ctx, const SuperField& x, const InducedElement& f) {
    InducedElement out;
    out.degree = x.is_zero() ? f.degree : f.degree - x.degree();
    for (auto& [d, m] : f.terms) induced_detail::act_and_accumulate(ctx, x, d, m, out, 1);
    return out;
}

// Weight of a weight-homogeneous element, as Lambda + integer offset.
inline std::vector<ParamPoly> weight_of(const GlContext& ctx, const InducedElement& f) {
    std::optional<std::vector<int>> offset;
    for (auto& [d, m] : f.terms) {
        auto dw = d.weight(ctx.n());
        for (auto& [w, c] : m.terms) {
            auto ww = ctx.word_weight(w);
            std::vector<int> total(ctx.n());
            for (int i = 0; i < ctx.n(); ++i) total[i] = dw[i] + ww[i];
            if (!offset)
                offset = total;
            else if (*offset != total)
                throw std::invalid_argument("element is not weight-homogeneous");
        }
    }
    if (!offset) offset = std::vector<int>(ctx.n(), 0);
    return symbolic_weight(ctx, *offset);
}

}  // namespace singvect

#endif
