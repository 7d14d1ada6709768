#ifndef SINGVECT_ALGEBRA_HPP
#define SINGVECT_ALGEBRA_HPP

#include "singvect/rational_linalg.hpp"
#include "singvect/superfield.hpp"

#include <map>
#include <string>
#include <vector>

namespace singvect {

enum class Algebra { Pgl, Vect };

inline std::string to_string(Algebra a) { return a == Algebra::Pgl ? "pgl" : "vect"; }

namespace detail {

// All single-term fields of the given Z-degree, deterministic order.
inline std::vector<SuperField> full_component(SuperDims dims, int degree) {
    std::vector<SuperField> out;
    int coeff_deg = degree + 1;
    if (coeff_deg < 0) return out;

    std::vector<std::pair<std::vector<unsigned>, uint32_t>> monos;
    std::vector<unsigned> xexp(dims.a, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == dims.a) {
            for (uint32_t mask = 0; mask < (1u << dims.b); ++mask)
                if (std::popcount(mask) == left) monos.emplace_back(xexp, mask);
            return;
        }
        for (int e = left; e >= 0; --e) {
            xexp[pos] = static_cast<unsigned>(e);
            self(self, pos + 1, left - e);
        }
        xexp[pos] = 0;
    };
    rec(rec, 0, coeff_deg);

    for (int t = 0; t < dims.n(); ++t)
        for (auto& [xe, mask] : monos) out.push_back(SuperField::term(dims, 1, xe, mask, t));
    return out;
}

struct FieldCoords {
    std::vector<FieldKey> keys;
    std::map<FieldKey, int> index;

    explicit FieldCoords(const std::vector<SuperField>& span_fields) {
        for (const auto& f : span_fields)
            for (auto& [k, c] : f.terms())
                if (!index.count(k)) {
                    index[k] = static_cast<int>(keys.size());
                    keys.push_back(k);
                }
    }
    std::vector<Rational> coords(const SuperField& f) const {
        std::vector<Rational> v(keys.size(), 0);
        for (auto& [k, c] : f.terms()) v[index.at(k)] = c;
        return v;
    }
};

inline SuperField from_coords(SuperDims dims, const FieldCoords& fc,
                              const std::vector<Rational>& v) {
    SuperField f(dims);
    for (size_t i = 0; i < fc.keys.size(); ++i)
        if (v[i] != 0) f.add_term(v[i], fc.keys[i]);
    return f;
}

// Clears denominators / common integer content; keeps orientation.
inline SuperField primitive(const SuperField& f) {
    Rational g = 0;
    for (auto& [k, c] : f.terms()) g = rational_gcd(g, c);
    if (g == 0 || g == 1) return f;
    if (g < 0) g = -g;
    return (Rational(1) / g) * f;
}

}  // namespace detail

// The distinguished graded basis of vect(a|b) around degree 0:
//   gm1 = span(d_i), g0 = gl(a|b) as the E_ij = u_i d_j,
//   g1 listed as the s-part (s_i = u_i E) followed by the divergence-free
//   part generated from its lowest weight vectors, g2 on request.
struct GradedBasis {
    SuperDims dims;
    std::vector<SuperField> gm1, g0, g1, g2;
    std::vector<SuperField> cartan, raising, lowering;
    std::vector<SuperField> s_part;
    std::vector<SuperField> g1_lowest;  // s_{a+b} first, then divergence-free lowest vectors
    std::vector<SuperField> g2_lowest;
    bool has_g2 = false;

    const SuperField& euler() const { return euler_; }
    SuperField euler_;
};

inline GradedBasis standard_basis(int a, int b, bool with_g2 = false) {
    if (a < 0 || b < 0 || a + b < 1) throw std::invalid_argument("need a+b >= 1");
    if (b > 30) throw std::invalid_argument("odd dimension too large");
    GradedBasis basis;
    SuperDims dims{a, b};
    basis.dims = dims;
    const int n = dims.n();

    for (int i = 0; i < n; ++i) basis.gm1.push_back(SuperField::partial(dims, i));

    basis.euler_ = SuperField(dims);
    for (int i = 0; i < n; ++i) basis.euler_ += SuperField::coordinate_field(dims, i, i);

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) basis.g0.push_back(SuperField::coordinate_field(dims, i, j));
    for (int i = 0; i < n; ++i) basis.cartan.push_back(SuperField::coordinate_field(dims, i, i));
    for (int i = 0; i + 1 < n; ++i) {
        basis.raising.push_back(SuperField::coordinate_field(dims, i, i + 1));
        basis.lowering.push_back(SuperField::coordinate_field(dims, i + 1, i));
    }

    // s_i = u_i * E; a lone surviving term is normalized to +1 (matches the
    // conventional display of these generators).
    for (int i = 0; i < n; ++i) {
        SuperField s(dims);
        for (auto& [ek, ec] : basis.euler_.terms()) {
            detail::CoeffMono um;
            um.xexp.assign(dims.a, 0);
            um.ximask = 0;
            if (i < dims.a)
                um.xexp[i] = 1;
            else
                um.ximask = 1u << (i - dims.a);
            detail::CoeffMono em{ek.xexp, ek.ximask};
            if (auto prod = detail::mono_mul(dims, um, em))
                s.add_term(ec * prod->second, FieldKey{prod->first.xexp, prod->first.ximask, ek.target});
        }
        if (s.terms().size() == 1 && s.terms().begin()->second < 0) s = -s;
        basis.s_part.push_back(s);
    }

    auto joint_lowering_kernel = [&](const std::vector<SuperField>& space) {
        std::vector<SuperField> images;
        for (const auto& low : basis.lowering)
            for (const auto& v : space) images.push_back(supercommutator(low, v));
        detail::FieldCoords fc(images);
        RationalMatrix m;  // rows: result coordinates, cols: space elements
        size_t rows = fc.keys.empty() ? 1 : fc.keys.size();
        m.assign(rows * basis.lowering.size(), std::vector<Rational>(space.size(), 0));
        for (size_t li = 0; li < basis.lowering.size(); ++li)
            for (size_t k = 0; k < space.size(); ++k) {
                auto img = supercommutator(basis.lowering[li], space[k]);
                auto v = fc.coords(img);
                for (size_t r = 0; r < v.size(); ++r) m[li * rows + r][k] = v[r];
            }
        return kernel_basis(m, static_cast<int>(space.size()));
    };

    auto g1_full = detail::full_component(dims, 1);

    // Divergence map on g1, then the lowest-weight vectors of its kernel.
    std::vector<SuperField> divfree_lowest;
    if (!g1_full.empty()) {
        auto in_kernel = joint_lowering_kernel(g1_full);
        std::vector<SuperField> kvecs;
        for (auto& coeffs : in_kernel) {
            SuperField v(dims);
            for (size_t k = 0; k < g1_full.size(); ++k)
                if (coeffs[k] != 0) v += coeffs[k] * g1_full[k];
            if (!v.is_zero() && is_divergence_free(v)) kvecs.push_back(detail::primitive(v));
        }
        // Reduce modulo the kernel vectors that are multiples of s_{a+b}.
        detail::FieldCoords fc(g1_full);
        RationalMatrix span;
        span.push_back(fc.coords(basis.s_part.back()));
        for (auto& v : kvecs) {
            RationalMatrix test = span;
            test.push_back(fc.coords(v));
            if (rank(test) > rank(span)) {
                divfree_lowest.push_back(v);
                span.push_back(fc.coords(v));
            }
        }
    }

    basis.g1_lowest = {basis.s_part.back()};
    for (auto& v : divfree_lowest) basis.g1_lowest.push_back(v);

    // g1 listing: s-part, then the raising-orbit of the divergence-free
    // lowest vectors, then raw monomial fields completing the span.
    {
        detail::FieldCoords fc(g1_full);
        RationalMatrix span;
        auto try_add = [&](const SuperField& f) {
            if (f.is_zero()) return false;
            RationalMatrix test = span;
            test.push_back(fc.coords(f));
            if (rank(test) > rank(span)) {
                span = std::move(test);
                basis.g1.push_back(detail::primitive(f));
                return true;
            }
            return false;
        };
        for (auto& s : basis.s_part) try_add(s);
        std::vector<SuperField> queue = divfree_lowest;
        for (size_t q = 0; q < queue.size(); ++q) {
            try_add(queue[q]);
            for (const auto& r : basis.raising) {
                SuperField img = supercommutator(r, queue[q]);
                if (!img.is_zero()) queue.push_back(detail::primitive(img));
            }
            if (queue.size() > 4 * g1_full.size() + 16) break;  // orbit closed long ago
        }
        for (auto& f : g1_full) try_add(f);
    }

    basis.has_g2 = with_g2 || (a == 1 && b == 0);
    if (basis.has_g2) {
        basis.g2 = detail::full_component(dims, 2);
        if (!basis.g2.empty()) {
            auto in_kernel = joint_lowering_kernel(basis.g2);
            for (auto& coeffs : in_kernel) {
                SuperField v(dims);
                for (size_t k = 0; k < basis.g2.size(); ++k)
                    if (coeffs[k] != 0) v += coeffs[k] * basis.g2[k];
                if (!v.is_zero()) basis.g2_lowest.push_back(detail::primitive(v));
            }
        }
    }
    return basis;
}

// Generators whose vanishing on a g0-highest-weight vector of I(V) makes it
// singular: the simple raisings plus the g0-lowest-weight vectors of g1
// (s_{a+b} for pgl; all of them for vect), plus the g2 lowest vectors where
// g_> is not generated by g1 (vect(1|0)) or when forced.
inline std::vector<SuperField> invariance_generators(const GradedBasis& basis, Algebra alg,
                                                     bool force_g2 = false) {
    std::vector<SuperField> gens = basis.raising;
    if (alg == Algebra::Pgl) {
        gens.push_back(basis.s_part.back());
    } else {
        for (const auto& v : basis.g1_lowest) gens.push_back(v);
    }
    bool need_g2 = force_g2 || (alg == Algebra::Vect && basis.dims.a == 1 && basis.dims.b == 0);
    if (need_g2)
        for (const auto& v : basis.g2_lowest) gens.push_back(v);
    return gens;
}

struct StructureReport {
    bool ok = true;
    int brackets_checked = 0;
    int jacobi_checked = 0;
    std::string detail;

    void fail(const std::string& msg) {
        if (ok) detail = msg;
        ok = false;
    }
};

// Exhaustive super-antisymmetry / super-Jacobi / grading checks over the
// full components with degrees in [-1, degree_bound].
inline StructureReport verify_structure(int a, int b, int degree_bound) {
    StructureReport rep;
    SuperDims dims{a, b};
    std::vector<SuperField> elems;
    for (int d = -1; d <= degree_bound; ++d)
        for (auto& f : detail::full_component(dims, d)) elems.push_back(f);

    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<SuperField>> table(n, std::vector<SuperField>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = supercommutator(elems[i], elems[j]);

    auto sgn = [](int px, int py) { return (px * py) % 2 ? -1 : 1; };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& xy = table[i][j];
            ++rep.brackets_checked;
            SuperField anti = xy + Rational(sgn(elems[i].parity(), elems[j].parity())) * table[j][i];
            if (!anti.is_zero()) {
                rep.fail("antisymmetry fails for [" + elems[i].to_string() + ", " +
                         elems[j].to_string() + "]");
                return rep;
            }
            if (!xy.is_zero()) {
                if (xy.degree() != elems[i].degree() + elems[j].degree())
                    rep.fail("degree additivity fails");
                if (xy.parity() != (elems[i].parity() + elems[j].parity()) % 2)
                    rep.fail("parity additivity fails");
                auto wx = elems[i].weight(), wy = elems[j].weight(), wxy = xy.weight();
                if (wx && wy && wxy) {
                    for (int t = 0; t < dims.n(); ++t)
                        if ((*wxy)[t] != (*wx)[t] + (*wy)[t]) rep.fail("weight additivity fails");
                }
                if (!rep.ok) return rep;
            }
        }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // [[X,Y],Z] = [X,[Y,Z]] - (-1)^{p(X)p(Y)}[Y,[X,Z]]
                SuperField lhs = supercommutator(table[i][j], elems[k]);
                SuperField rhs = supercommutator(elems[i], table[j][k]) -
                                 Rational(sgn(elems[i].parity(), elems[j].parity())) *
                                     supercommutator(elems[j], table[i][k]);
                ++rep.jacobi_checked;
                if (!(lhs - rhs).is_zero()) {
                    rep.fail("Jacobi fails for (" + elems[i].to_string() + ", " +
                             elems[j].to_string() + ", " + elems[k].to_string() + ")");
                    return rep;
                }
            }

    // Lowest-weight property of the curated generators.
    auto basis = standard_basis(a, b, degree_bound >= 2);
    for (const auto& low : basis.lowering)
        for (const auto& v : basis.g1_lowest)
            if (!supercommutator(low, v).is_zero()) {
                rep.fail("g1 lowest-weight vector fails [X^-, v] = 0: " + v.to_string());
                return rep;
            }
    return rep;
}

}  // namespace singvect

#endif
