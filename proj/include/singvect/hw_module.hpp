#ifndef SINGVECT_HW_MODULE_HPP
#define SINGVECT_HW_MODULE_HPP

#include "singvect/parametric_solve.hpp"
#include "singvect/superfield.hpp"

#include <mutex>
#include <tuple>

namespace singvect {

// Normal-ordered lowering word: indices into GlContext::neg_roots, ascending.
using Word = std::vector<int>;

// Element of the highest-weight gl(a|b)-module with symbolic weight
// Lambda = (l1..ln): finite combination of lowering words applied to v0.
struct ModuleElement {
    std::map<Word, ParamPoly> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const Word& w, const ParamPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    void add_scaled(const ModuleElement& o, const ParamPoly& c) {
        for (auto& [w, v] : o.terms) add(w, v * c);
    }
    ModuleElement operator-() const {
        ModuleElement r;
        for (auto& [w, c] : terms) r.terms[w] = -c;
        return r;
    }
    bool operator==(const ModuleElement& o) const { return terms == o.terms; }
    int depth() const {
        size_t d = 0;
        for (auto& [w, c] : terms) d = std::max(d, w.size());
        return static_cast<int>(d);
    }
};

// Root data and straightening engine for gl(a|b) in the coordinate order
// x1..xa, xi1..xib. Negative roots E_{ji} (j > i) are ordered by height
// j - i, ties by i; canonical words are ascending in that order with odd
// roots appearing at most once.
class GlContext {
public:
    GlContext(int a, int b, int depth_bound) : a_(a), b_(b), n_(a + b), depth_(depth_bound) {
        for (int h = 1; h < n_; ++h)
            for (int i = 0; i + h < n_; ++i) roots_.push_back({i + h, i});
    }

    int a() const { return a_; }
    int b() const { return b_; }
    int n() const { return n_; }
    int nparams() const { return n_; }
    int depth_bound() const { return depth_; }
    int num_roots() const { return static_cast<int>(roots_.size()); }
    std::pair<int, int> root(int r) const { return roots_[r]; }
    int root_index(int j, int i) const {
        for (int r = 0; r < num_roots(); ++r)
            if (roots_[r] == std::pair{j, i}) return r;
        throw std::invalid_argument("not a negative root");
    }
    bool coord_odd(int i) const { return i >= a_; }
    bool root_odd(int r) const { return coord_odd(roots_[r].first) != coord_odd(roots_[r].second); }
    int pair_parity(int s, int t) const { return coord_odd(s) != coord_odd(t) ? 1 : 0; }

    std::vector<int> word_weight(const Word& w) const {
        std::vector<int> wt(n_, 0);
        for (int r : w) {
            wt[roots_[r].first] += 1;
            wt[roots_[r].second] -= 1;
        }
        return wt;
    }
    int word_parity(const Word& w) const {
        int p = 0;
        for (int r : w) p ^= root_odd(r) ? 1 : 0;
        return p;
    }

    ParamPoly lambda(int i) const { return ParamPoly::variable(n_, i); }

    mutable std::map<std::tuple<int, int, Word>, ModuleElement> memo;
    mutable std::mutex memo_mu;

private:
    int a_, b_, n_, depth_;
    std::vector<std::pair<int, int>> roots_;
};

namespace hw {

// [E_{ij}, E_{kl}] = d_{jk} E_{il} - (-1)^{p p'} d_{li} E_{kj}
inline std::vector<std::pair<Rational, std::pair<int, int>>> gl_bracket(const GlContext& ctx, int i,
                                                                        int j, int k, int l) {
    std::vector<std::pair<Rational, std::pair<int, int>>> out;
    if (j == k) out.push_back({1, {i, l}});
    if (l == i) {
        int sign = (ctx.pair_parity(i, j) * ctx.pair_parity(k, l)) % 2 ? -1 : 1;
        out.push_back({Rational(-sign), {k, j}});
    }
    return out;
}

// Canonical form of F_q * (w . v0).
inline ModuleElement prepend_root(const GlContext& ctx, int q, const Word& w) {
    ModuleElement out;
    if (w.empty() || q <= w[0]) {
        if (!w.empty() && q == w[0] && ctx.root_odd(q)) return out;  // F^2 = 0
        Word nw;
        nw.reserve(w.size() + 1);
        nw.push_back(q);
        nw.insert(nw.end(), w.begin(), w.end());
        if (static_cast<int>(nw.size()) > ctx.depth_bound())
            throw DepthOverflowError("lowering word exceeds depth bound " +
                                     std::to_string(ctx.depth_bound()));
        out.add(nw, ParamPoly::constant(ctx.nparams(), 1));
        return out;
    }
    int head = w[0];
    Word tail(w.begin() + 1, w.end());
    int sign = (ctx.root_odd(q) && ctx.root_odd(head)) ? -1 : 1;

    ModuleElement shifted = prepend_root(ctx, q, tail);
    for (auto& [w2, c2] : shifted.terms) {
        ModuleElement re = prepend_root(ctx, head, w2);
        out.add_scaled(re, c2 * Rational(sign));
    }
    auto [jq, iq] = ctx.root(q);
    auto [jh, ih] = ctx.root(head);
    for (auto& [coef, pair] : gl_bracket(ctx, jq, iq, jh, ih)) {
        // bracket of two negative roots is again a negative root (or zero)
        if (pair.first == pair.second) continue;  // cannot happen for j>i, l>k
        int r = ctx.root_index(pair.first, pair.second);
        ModuleElement re = prepend_root(ctx, r, tail);
        out.add_scaled(re, ParamPoly::constant(ctx.nparams(), coef));
    }
    return out;
}

// E_{st} acting on a single canonical word.
inline ModuleElement act_pair_word(const GlContext& ctx, int s, int t, const Word& w) {
    if (s == t) {
        // Cartan: eigenvalue l_s + (weight of the word)_s
        ModuleElement out;
        ParamPoly eig = ctx.lambda(s) +
                        ParamPoly::constant(ctx.nparams(), Rational(ctx.word_weight(w)[s]));
        out.add(w, eig);
        return out;
    }
    if (s > t) return prepend_root(ctx, ctx.root_index(s, t), w);

    // raising
    if (w.empty()) return {};
    {
        std::lock_guard<std::mutex> lock(ctx.memo_mu);
        auto it = ctx.memo.find({s, t, w});
        if (it != ctx.memo.end()) return it->second;
    }
    int head = w[0];
    Word tail(w.begin() + 1, w.end());
    int sign = (ctx.pair_parity(s, t) && ctx.root_odd(head)) ? -1 : 1;

    ModuleElement out;
    ModuleElement inner = act_pair_word(ctx, s, t, tail);
    for (auto& [w2, c2] : inner.terms) {
        ModuleElement re = prepend_root(ctx, head, w2);
        out.add_scaled(re, c2 * Rational(sign));
    }
    auto [jh, ih] = ctx.root(head);
    for (auto& [coef, pair] : gl_bracket(ctx, s, t, jh, ih)) {
        ModuleElement re = act_pair_word(ctx, pair.first, pair.second, tail);
        out.add_scaled(re, ParamPoly::constant(ctx.nparams(), coef));
    }
    {
        std::lock_guard<std::mutex> lock(ctx.memo_mu);
        ctx.memo.emplace(std::tuple{s, t, w}, out);
    }
    return out;
}

inline ModuleElement act_pair(const GlContext& ctx, int s, int t, const ModuleElement& m) {
    ModuleElement out;
    for (auto& [w, c] : m.terms) {
        ModuleElement part = act_pair_word(ctx, s, t, w);
        out.add_scaled(part, c);
    }
    return out;
}

}  // namespace hw

// Action of a degree-zero vector field (element of g0 = gl(a|b)) on a module
// element, through the identification u_s d_t = E_{st}.
inline ModuleElement act_g0(const GlContext& ctx, const SuperField& x, const ModuleElement& m) {
    if (!x.is_zero() && x.degree() != 0)
        throw std::invalid_argument("act_g0 needs a degree-0 field");
    ModuleElement out;
    for (auto& [k, c] : x.terms()) {
        int s = -1;
        for (int i = 0; i < x.dims().a; ++i)
            if (k.xexp[i]) s = i;
        for (int j = 0; j < x.dims().b; ++j)
            if (k.ximask & (1u << j)) s = x.dims().a + j;
        ModuleElement part = hw::act_pair(ctx, s, k.target, m);
        out.add_scaled(part, ParamPoly::constant(ctx.nparams(), c));
    }
    return out;
}

// Symbolic weight of an element: Lambda + integer offset, entrywise.
inline std::vector<ParamPoly> symbolic_weight(const GlContext& ctx, const std::vector<int>& offset) {
    std::vector<ParamPoly> w;
    for (int i = 0; i < ctx.n(); ++i)
        w.push_back(ctx.lambda(i) + ParamPoly::constant(ctx.nparams(), Rational(offset[i])));
    return w;
}

// Height of a weight offset as a sum of simple roots; nullopt when the offset
// is not a non-positive integer combination.
inline std::optional<int> offset_height(const std::vector<int>& offset) {
    int partial = 0, height = 0;
    for (size_t i = 0; i < offset.size(); ++i) {
        partial += offset[i];
        if (i + 1 < offset.size()) {
            if (partial > 0) return std::nullopt;
            height += -partial;
        }
    }
    if (partial != 0) return std::nullopt;
    return height;
}

// All canonical lowering words of the given weight offset with length <= maxlen.
inline std::vector<Word> weight_basis(const GlContext& ctx, const std::vector<int>& offset,
                                      int maxlen) {
    std::vector<Word> out;
    auto h = offset_height(offset);
    if (!h) return out;
    if (*h == 0) {
        out.push_back({});
        return out;
    }
    Word cur;
    std::vector<int> rem = offset;
    auto rec = [&](auto&& self, int start) -> void {
        bool zero = true;
        for (int v : rem)
            if (v) zero = false;
        if (zero && !cur.empty()) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= maxlen) return;
        for (int r = start; r < ctx.num_roots(); ++r) {
            if (!cur.empty() && r == cur.back() && ctx.root_odd(r)) continue;
            auto [j, i] = ctx.root(r);
            // stay inside the cone: subtracting the root must keep the offset reachable
            std::vector<int> next = rem;
            next[j] -= 1;
            next[i] += 1;
            auto nh = offset_height(next);
            if (!nh) continue;
            cur.push_back(r);
            rem = next;
            self(self, r);
            cur.pop_back();
            rem[j] += 1;
            rem[i] -= 1;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Coefficient of v0.
inline ParamPoly v0_coefficient(const GlContext& ctx, const ModuleElement& m) {
    auto it = m.terms.find(Word{});
    return it == m.terms.end() ? ParamPoly(ctx.nparams()) : it->second;
}

// Pairing of the weight-offset space against the raising PBW basis:
// P[r][c] = v0-coefficient of tau(word_r) . (word_c . v0), tau the transpose
// antiautomorphism. An element lies in the maximal submodule iff P * coeffs = 0.
inline std::vector<std::vector<ParamPoly>> pairing_matrix(const GlContext& ctx,
                                                          const std::vector<Word>& words) {
    std::vector<std::vector<ParamPoly>> p(words.size(),
                                          std::vector<ParamPoly>(words.size(), ParamPoly(ctx.nparams())));
    for (size_t r = 0; r < words.size(); ++r)
        for (size_t c = 0; c < words.size(); ++c) {
            ModuleElement m;
            m.add(words[c], ParamPoly::constant(ctx.nparams(), 1));
            for (int q : words[r]) {
                auto [j, i] = ctx.root(q);
                m = hw::act_pair(ctx, i, j, m);  // transpose: E_{ji} -> E_{ij}
                if (m.is_zero()) break;
            }
            p[r][c] = v0_coefficient(ctx, m);
        }
    return p;
}

// Dominance-integrality of a numeric weight for the even part of gl(a|b):
// consecutive differences within the x block and within the xi block in Z>=0.
inline bool finite_dim_admissible(std::span<const Rational> weight, int a, int b) {
    auto ok = [&](int i) {
        Rational d = weight[i] - weight[i + 1];
        return is_integer(d) && d >= 0;
    };
    for (int i = 0; i + 1 < a; ++i)
        if (!ok(i)) return false;
    for (int i = a; i + 1 < a + b; ++i)
        if (!ok(i)) return false;
    return true;
}

// The symbolic dominance difference forms, same block convention.
inline std::vector<ParamPoly> dominance_forms(const GlContext& ctx) {
    std::vector<ParamPoly> out;
    for (int i = 0; i + 1 < ctx.a(); ++i) out.push_back(ctx.lambda(i) - ctx.lambda(i + 1));
    for (int i = ctx.a(); i + 1 < ctx.n(); ++i) out.push_back(ctx.lambda(i) - ctx.lambda(i + 1));
    return out;
}

}  // namespace singvect

#endif
