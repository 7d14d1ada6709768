#ifndef SINGVECT_FACTORIZE_HPP
#define SINGVECT_FACTORIZE_HPP

#include "singvect/parampoly.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace singvect {

// Candidate affine divisors for pivot factorization. The eigenvalue
// bookkeeping of gl(a|b) only ever produces factors of the shape
// +-l_i +- l_j + s or l_i + s with small integer s, so a structured pool
// plus live-collected forms covers the systems we solve.
class FactorPool {
public:
    void add(const ParamPoly& p) {
        if (p.degree() != 1) return;
        ParamPoly q = p.primitive_part();
        auto it = std::lower_bound(pool_.begin(), pool_.end(), q);
        if (it == pool_.end() || *it != q) pool_.insert(it, q);
    }
    const std::vector<ParamPoly>& candidates() const { return pool_; }

    static FactorPool structured(int nparams, int max_shift) {
        FactorPool pool;
        for (int s = -max_shift; s <= max_shift; ++s) {
            Rational sh(s);
            for (int i = 0; i < nparams; ++i) {
                pool.add(ParamPoly::variable(nparams, i) + ParamPoly::constant(nparams, sh));
                for (int j = i + 1; j < nparams; ++j) {
                    ParamPoly li = ParamPoly::variable(nparams, i);
                    ParamPoly lj = ParamPoly::variable(nparams, j);
                    ParamPoly c = ParamPoly::constant(nparams, sh);
                    pool.add(li - lj + c);
                    pool.add(li + lj + c);
                }
            }
        }
        return pool;
    }

private:
    std::vector<ParamPoly> pool_;
};

struct Factorization {
    Rational unit = 1;
    std::vector<ParamPoly> factors;  // primitive, positive leading coefficient
};

namespace detail {

// p = A t^2 + B t + C in parameter `t`; solves s^2 = B^2 - 4AC for affine s.
inline std::optional<ParamPoly> affine_sqrt(const ParamPoly& d) {
    int np = d.nparams();
    if (d.is_zero()) return ParamPoly(np);
    if (d.is_constant()) {
        auto r = rational_sqrt(d.constant_value());
        if (!r) return std::nullopt;
        return ParamPoly::constant(np, *r);
    }
    if (d.degree() != 2) return std::nullopt;
    int u = -1;
    Rational duu;
    for (int i = 0; i < np && u < 0; ++i) {
        for (auto& [m, c] : d.terms())
            if (m[i] == 2) {
                u = i;
                duu = c;
                break;
            }
    }
    if (u < 0) return std::nullopt;  // only cross terms: not a square
    auto su = rational_sqrt(duu);
    if (!su) return std::nullopt;
    ParamPoly s = ParamPoly::variable(np, u, *su);
    for (int w = 0; w < np; ++w) {
        if (w == u) continue;
        Rational cross = 0;
        for (auto& [m, c] : d.terms())
            if (m[u] == 1 && m[w] == 1) cross = c;
        if (cross != 0) s += ParamPoly::variable(np, w, cross / (2 * *su));
    }
    Rational lin = 0;
    for (auto& [m, c] : d.terms())
        if (m[u] == 1 && mono_degree(m) == 1) lin = c;
    if (lin != 0) s += ParamPoly::constant(np, lin / (2 * *su));
    if (s * s != d) return std::nullopt;
    return s;
}

inline std::optional<std::vector<ParamPoly>> factor_quadratic(const ParamPoly& p) {
    int np = p.nparams();
    int t = -1;
    for (int i = 0; i < np && t < 0; ++i)
        if (p.uses(i)) t = i;
    if (t < 0) return std::nullopt;

    ParamPoly a2(np), b1(np), c0(np);
    for (auto& [m, c] : p.terms()) {
        Mono rest = m;
        unsigned e = rest[t];
        rest[t] = 0;
        ParamPoly mono = ParamPoly::constant(np, c);
        for (int i = 0; i < np; ++i)
            for (unsigned k = 0; k < rest[i]; ++k) mono *= ParamPoly::variable(np, i);
        if (e == 2)
            a2 += mono;
        else if (e == 1)
            b1 += mono;
        else
            c0 += mono;
    }

    if (!a2.is_zero()) {
        if (!a2.is_constant()) return std::nullopt;  // total degree > 2
        Rational a = a2.constant_value();
        ParamPoly disc = b1 * b1 - ParamPoly::constant(np, 4 * a) * c0;
        auto s = affine_sqrt(disc);
        if (!s) return std::nullopt;
        ParamPoly f1 = ParamPoly::variable(np, t, 2 * a) + b1 + *s;
        ParamPoly f2 = ParamPoly::variable(np, t, 2 * a) + b1 - *s;
        if (f1.is_zero() || f2.is_zero()) return std::nullopt;
        return std::vector<ParamPoly>{f1.primitive_part(), f2.primitive_part()};
    }
    // Affine in t: p = b1*t + c0 = b1*(t + c0/b1) when b1 | c0.
    if (b1.is_zero()) return std::nullopt;
    auto q = c0.divide_exact(b1);
    if (!q || q->degree() > 1) return std::nullopt;
    ParamPoly lin = ParamPoly::variable(np, t) + *q;
    if (b1.is_constant()) return std::vector<ParamPoly>{lin.primitive_part()};
    return std::vector<ParamPoly>{b1.primitive_part(), lin.primitive_part()};
}

}  // namespace detail

// Full factorization into affine factors (multiplicities expanded).
// nullopt when some non-affine factor resists the pool and the quadratic
// closer; callers turn that into the explicit nonlinear-branch error.
inline std::optional<Factorization> factor_into_affines(const ParamPoly& p0, const FactorPool& pool) {
    if (p0.is_zero()) return std::nullopt;
    Factorization out;
    out.unit = p0.content();
    ParamPoly p = p0.primitive_part();

    auto emit = [&out](const ParamPoly& f) {
        Rational c = f.content();
        out.unit *= c;
        out.factors.push_back(f.primitive_part());
    };

    bool progress = true;
    while (progress && p.degree() > 2) {
        progress = false;
        for (const auto& cand : pool.candidates()) {
            if (auto q = p.divide_exact(cand)) {
                emit(cand);
                p = *q;
                Rational c = p.content();
                out.unit *= c;
                p = p.primitive_part();
                progress = true;
                break;
            }
        }
        if (!progress) {
            // p affine in some variable with divisible tail: peel one factor.
            int np = p.nparams();
            for (int t = 0; t < np; ++t) {
                if (p.degree_in(t) != 1) continue;
                ParamPoly b1(np), c0(np);
                for (auto& [m, c] : p.terms()) {
                    Mono rest = m;
                    unsigned e = rest[t];
                    rest[t] = 0;
                    ParamPoly mono = ParamPoly::constant(np, c);
                    for (int i = 0; i < np; ++i)
                        for (unsigned k = 0; k < rest[i]; ++k) mono *= ParamPoly::variable(np, i);
                    (e == 1 ? b1 : c0) += mono;
                }
                if (b1.is_zero()) continue;
                auto q = c0.divide_exact(b1);
                if (!q || q->degree() > 1) continue;
                emit(ParamPoly::variable(np, t) + *q);
                p = b1;
                Rational c = p.content();
                out.unit *= c;
                p = p.primitive_part();
                progress = true;
                break;
            }
        }
    }

    while (p.degree() >= 1) {
        if (p.degree() == 1) {
            emit(p);
            p = ParamPoly::constant(p.nparams(), 1);
            break;
        }
        if (p.degree() == 2) {
            bool peeled = false;
            for (const auto& cand : pool.candidates()) {
                if (auto q = p.divide_exact(cand)) {
                    emit(cand);
                    Rational c = q->content();
                    out.unit *= c;
                    p = q->primitive_part();
                    peeled = true;
                    break;
                }
            }
            if (peeled) continue;
            auto fs = detail::factor_quadratic(p);
            if (!fs) return std::nullopt;
            for (auto& f : *fs) emit(f);
            p = ParamPoly::constant(p.nparams(), 1);
            break;
        }
        return std::nullopt;
    }

    // Exactness check; the unit absorbs the residual rational scale.
    ParamPoly prod = ParamPoly::constant(p0.nparams(), 1);
    for (auto& f : out.factors) prod *= f;
    auto ratio = p0.divide_exact(prod);
    if (!ratio || !ratio->is_constant()) return std::nullopt;
    out.unit = ratio->constant_value();
    return out;
}

// Removes common affine/rational content from a list of polynomials
// (kernel-vector normalization; safe there, unlike for equation rows).
inline void remove_common_factors(std::vector<ParamPoly>& v, const FactorPool& pool) {
    Rational g = 0;
    for (auto& p : v) g = rational_gcd(g, p.content());
    if (g != 0 && g != 1) {
        for (auto& p : v) p *= Rational(1) / g;
    }
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& cand : pool.candidates()) {
            std::vector<ParamPoly> reduced;
            reduced.reserve(v.size());
            bool all = true;
            for (auto& p : v) {
                if (p.is_zero()) {
                    reduced.push_back(p);
                    continue;
                }
                auto q = p.divide_exact(cand);
                if (!q) {
                    all = false;
                    break;
                }
                reduced.push_back(*q);
            }
            if (all && !v.empty()) {
                bool any = false;
                for (auto& p : v)
                    if (!p.is_zero()) any = true;
                if (any) {
                    v = std::move(reduced);
                    progress = true;
                    break;
                }
            }
        }
    }
    // Orient: first nonzero entry gets a positive leading coefficient.
    for (auto& p : v) {
        if (p.is_zero()) continue;
        if (p.leading().second < 0)
            for (auto& q : v) q = -q;
        break;
    }
}

}  // namespace singvect

#endif
