#ifndef SINGVECT_SUPERFIELD_HPP
#define SINGVECT_SUPERFIELD_HPP

#include "singvect/rational.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace singvect {

// Superdomain C^(a|b): coordinates u_1..u_{a+b} = x_1..x_a, xi_1..xi_b.
struct SuperDims {
    int a = 0, b = 0;
    int n() const { return a + b; }
    bool odd_coord(int i) const { return i >= a; }
};

namespace grassmann {

// Sign of merging two increasing products xi_S * xi_T; zero overlap required.
inline int merge_sign(uint32_t s, uint32_t t) {
    int inv = 0;
    for (uint32_t bits = t; bits; bits &= bits - 1) {
        int j = std::countr_zero(bits);
        inv += std::popcount(s >> (j + 1));
    }
    return (inv % 2) ? -1 : 1;
}

// Left derivative d_j(xi_S): sign (-1)^{#bits below j}.
inline std::optional<std::pair<uint32_t, int>> left_derivative(uint32_t s, int j) {
    if (!(s & (1u << j))) return std::nullopt;
    int below = std::popcount(s & ((1u << j) - 1));
    return std::pair{s & ~(1u << j), (below % 2) ? -1 : 1};
}

}  // namespace grassmann

// One vector-field term coeff * x^alpha * xi_S * d_{u_target}.
struct FieldKey {
    std::vector<unsigned> xexp;  // size a
    uint32_t ximask = 0;
    int target = 0;  // coordinate index of the derivation

    auto operator<=>(const FieldKey&) const = default;
};

// Homogeneous polynomial vector field on C^(a|b): fixed parity and Z-degree
// (deg u_i = 1, deg d_i = -1). The zero field is compatible with any grading.
class SuperField {
public:
    SuperField() = default;
    explicit SuperField(SuperDims dims) : dims_(dims) {}

    static SuperField term(SuperDims dims, const Rational& c, std::vector<unsigned> xexp,
                           uint32_t ximask, int target) {
        SuperField f(dims);
        f.add_term(c, FieldKey{std::move(xexp), ximask, target});
        return f;
    }
    // Convenience: u_i d_j.
    static SuperField coordinate_field(SuperDims dims, int i, int j, const Rational& c = 1) {
        std::vector<unsigned> xexp(dims.a, 0);
        uint32_t mask = 0;
        if (i < dims.a)
            xexp[i] = 1;
        else
            mask = 1u << (i - dims.a);
        return term(dims, c, std::move(xexp), mask, j);
    }
    static SuperField partial(SuperDims dims, int j, const Rational& c = 1) {
        return term(dims, c, std::vector<unsigned>(dims.a, 0), 0, j);
    }

    const SuperDims& dims() const { return dims_; }
    const std::map<FieldKey, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int term_parity(const FieldKey& k) const {
        int p = std::popcount(k.ximask) + (dims_.odd_coord(k.target) ? 1 : 0);
        return p & 1;
    }
    int term_degree(const FieldKey& k) const {
        int d = std::popcount(k.ximask);
        for (unsigned e : k.xexp) d += e;
        return d - 1;
    }

    // Parity / degree of a nonzero homogeneous field.
    int parity() const { return parity_; }
    int degree() const { return degree_; }

    std::vector<int> term_weight(const FieldKey& k) const {
        std::vector<int> w(dims_.n(), 0);
        for (int i = 0; i < dims_.a; ++i) w[i] = static_cast<int>(k.xexp[i]);
        for (int j = 0; j < dims_.b; ++j)
            if (k.ximask & (1u << j)) w[dims_.a + j] = 1;
        w[k.target] -= 1;
        return w;
    }
    // Weight when the field is an h-eigenvector; nullopt otherwise.
    std::optional<std::vector<int>> weight() const {
        std::optional<std::vector<int>> w;
        for (auto& [k, c] : terms_) {
            auto tw = term_weight(k);
            if (!w)
                w = tw;
            else if (*w != tw)
                return std::nullopt;
        }
        return w;
    }

    void add_term(const Rational& c, const FieldKey& k) {
        if (c == 0) return;
        int p = term_parity(k), d = term_degree(k);
        if (terms_.empty()) {
            parity_ = p;
            degree_ = d;
        } else if (p != parity_ || d != degree_) {
            throw std::invalid_argument("inhomogeneous vector field term");
        }
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SuperField operator-() const {
        SuperField f(dims_);
        for (auto& [k, c] : terms_) f.add_term(-c, k);
        return f;
    }
    SuperField& operator+=(const SuperField& o) {
        for (auto& [k, c] : o.terms_) add_term(c, k);
        return *this;
    }
    friend SuperField operator+(SuperField x, const SuperField& y) { return x += y; }
    friend SuperField operator-(SuperField x, const SuperField& y) { return x += -y; }
    friend SuperField operator*(const Rational& c, SuperField x) {
        if (c == 0) return SuperField(x.dims_);
        for (auto& [k, v] : x.terms_) v *= c;
        return x;
    }
    bool operator==(const SuperField& o) const { return terms_ == o.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto& [k, c] : terms_) {
            Rational v = c;
            if (first) {
                if (v < 0) out << "-";
            } else {
                out << (v < 0 ? " - " : " + ");
            }
            if (v < 0) v = -v;
            std::string mono;
            for (int i = 0; i < dims_.a; ++i)
                for (unsigned e = 0; e < k.xexp[i]; ++e) mono += "x" + std::to_string(i + 1) + "*";
            for (int j = 0; j < dims_.b; ++j)
                if (k.ximask & (1u << j)) mono += "xi" + std::to_string(j + 1) + "*";
            if (v != 1 || mono.empty()) out << singvect::to_string(v) << (mono.empty() ? "" : "*");
            out << mono << "d" << (k.target + 1);
            first = false;
        }
        return out.str();
    }

private:
    SuperDims dims_;
    std::map<FieldKey, Rational> terms_;
    int parity_ = 0, degree_ = 0;
};

namespace detail {

struct CoeffMono {
    std::vector<unsigned> xexp;
    uint32_t ximask;
};

// Supercommutative product of coefficient monomials.
inline std::optional<std::pair<CoeffMono, int>> mono_mul(const SuperDims& dims, const CoeffMono& f,
                                                         const CoeffMono& g) {
    if (f.ximask & g.ximask) return std::nullopt;  // xi^2 = 0
    CoeffMono r;
    r.xexp.resize(dims.a);
    for (int i = 0; i < dims.a; ++i) r.xexp[i] = f.xexp[i] + g.xexp[i];
    r.ximask = f.ximask | g.ximask;
    return std::pair{r, grassmann::merge_sign(f.ximask, g.ximask)};
}

// d_h applied to a coefficient monomial (left derivative on the xi part).
inline std::optional<std::pair<CoeffMono, Rational>> mono_derive(const SuperDims& dims,
                                                                 const CoeffMono& m, int h) {
    if (!dims.odd_coord(h)) {
        if (m.xexp[h] == 0) return std::nullopt;
        CoeffMono r = m;
        r.xexp[h] -= 1;
        return std::pair{r, Rational(m.xexp[h])};
    }
    auto d = grassmann::left_derivative(m.ximask, h - dims.a);
    if (!d) return std::nullopt;
    CoeffMono r = m;
    r.ximask = d->first;
    return std::pair{r, Rational(d->second)};
}

}  // namespace detail

// [X,Y] = XY - (-1)^{p(X)p(Y)} YX on vector fields:
// [f d_i, g d_j] = f*d_i(g) d_j - (-1)^{p(X)p(Y)} g*d_j(f) d_i.
inline SuperField supercommutator(const SuperField& x, const SuperField& y) {
    const SuperDims dims = x.is_zero() ? y.dims() : x.dims();
    SuperField out(dims);
    if (x.is_zero() || y.is_zero()) return out;
    int sign = (x.parity() * y.parity()) % 2 ? -1 : 1;

    for (auto& [kx, cx] : x.terms()) {
        detail::CoeffMono f{kx.xexp, kx.ximask};
        for (auto& [ky, cy] : y.terms()) {
            detail::CoeffMono g{ky.xexp, ky.ximask};
            if (auto dg = detail::mono_derive(dims, g, kx.target)) {
                if (auto prod = detail::mono_mul(dims, f, dg->first)) {
                    out.add_term(cx * cy * dg->second * prod->second,
                                 FieldKey{prod->first.xexp, prod->first.ximask, ky.target});
                }
            }
            if (auto df = detail::mono_derive(dims, f, ky.target)) {
                if (auto prod = detail::mono_mul(dims, g, df->first)) {
                    out.add_term(-Rational(sign) * cx * cy * df->second * prod->second,
                                 FieldKey{prod->first.xexp, prod->first.ximask, kx.target});
                }
            }
        }
    }
    return out;
}

// Superdivergence div(f d_i) = (-1)^{p(f)p(d_i)} d_i(f).
inline bool is_divergence_free(const SuperField& x) {
    const SuperDims dims = x.dims();
    std::map<std::pair<std::vector<unsigned>, uint32_t>, Rational> acc;
    for (auto& [k, c] : x.terms()) {
        detail::CoeffMono f{k.xexp, k.ximask};
        auto df = detail::mono_derive(dims, f, k.target);
        if (!df) continue;
        int pf = std::popcount(k.ximask) & 1;
        int pd = dims.odd_coord(k.target) ? 1 : 0;
        Rational v = c * df->second * ((pf * pd) % 2 ? -1 : 1);
        auto key = std::pair{df->first.xexp, df->first.ximask};
        acc[key] += v;
        if (acc[key] == 0) acc.erase(key);
    }
    return acc.empty();
}

}  // namespace singvect

#endif
