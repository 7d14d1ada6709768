#ifndef SINGVECT_PARAMETRIC_SOLVE_HPP
#define SINGVECT_PARAMETRIC_SOLVE_HPP

#include "singvect/affine.hpp"
#include "singvect/factorize.hpp"
#include "singvect/parampoly.hpp"

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace singvect {

struct NonlinearBranchError : std::runtime_error {
    NonlinearBranchError(std::string what, ParamPoly piv)
        : std::runtime_error(std::move(what)), pivot(std::move(piv)) {}
    ParamPoly pivot;
};

struct DepthOverflowError : std::runtime_error {
    explicit DepthOverflowError(const std::string& what) : std::runtime_error(what) {}
};

struct Substitution {
    int param;
    ParamPoly expr;  // in terms of the parameters still free at creation time
};

struct Assumptions {
    std::vector<Substitution> subs;
    std::vector<ParamPoly> nonzeros;  // kept fully reduced w.r.t. subs

    ParamPoly reduce(ParamPoly p) const {
        for (const auto& s : subs) p = p.substitute(s.param, s.expr);
        return p;
    }

    // Equality constraints l_p - expr = 0 with every later substitution folded in.
    std::vector<AffineConstraint> equalities(int nparams) const {
        std::vector<AffineConstraint> out;
        for (size_t i = 0; i < subs.size(); ++i) {
            ParamPoly e = subs[i].expr;
            for (size_t j = i + 1; j < subs.size(); ++j)
                e = e.substitute(subs[j].param, subs[j].expr);
            ParamPoly c = ParamPoly::variable(e.nparams(), subs[i].param) - e;
            auto ac = AffineConstraint::from_poly(c, ConstraintKind::Equality);
            if (ac) {
                ac->normalize();
                out.push_back(*ac);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

struct CaseLeaf {
    Assumptions assume;
    bool inconsistent = false;
    std::vector<int> pivot_rows, pivot_cols;
    std::vector<ParamPoly> pivot_vals;
    std::vector<int> free_cols;
    // kernel[j]: solution vector (length = #unknowns) attached to free_cols[j].
    std::vector<std::vector<ParamPoly>> kernel;
    int nullity() const { return static_cast<int>(free_cols.size()); }
};

struct CaseNode {
    ParamPoly pivot;  // meaningful when not a leaf
    std::unique_ptr<CaseNode> zero, nonzero;
    std::unique_ptr<CaseLeaf> leaf;
    bool is_leaf() const { return leaf != nullptr; }
};

class CaseTree {
public:
    int nparams = 0;
    std::vector<std::string> unknowns;
    std::unique_ptr<CaseNode> root;

    std::vector<const CaseLeaf*> leaves() const {
        std::vector<const CaseLeaf*> out;
        collect(root.get(), out);
        return out;
    }

    const CaseLeaf* descend(std::span<const Rational> point) const {
        const CaseNode* n = root.get();
        while (n && !n->is_leaf())
            n = (n->pivot.eval(point) == 0 ? n->zero : n->nonzero).get();
        return n ? n->leaf.get() : nullptr;
    }

private:
    static void collect(const CaseNode* n, std::vector<const CaseLeaf*>& out) {
        if (!n) return;
        if (n->is_leaf()) {
            out.push_back(n->leaf.get());
            return;
        }
        collect(n->zero.get(), out);
        collect(n->nonzero.get(), out);
    }
};

struct SolveOptions {
    FactorPool pool;
    Assumptions initial;
};

namespace detail {

using Matrix = std::vector<std::vector<ParamPoly>>;

struct Eliminator {
    int nparams;
    int ncols;
    const FactorPool* pool;

    struct State {
        Matrix m;
        Assumptions assume;
        std::vector<bool> row_used, col_used;
        std::vector<int> pivot_rows, pivot_cols;
        std::vector<ParamPoly> pivot_vals;
    };

    std::unique_ptr<CaseNode> run(State st) {
        for (;;) {
            // Pivot selection: minimal (degree, row, column) among live
            // entries, skipping entries that resist affine factorization as
            // long as any workable pivot remains.
            std::vector<std::tuple<int, int, int>> candidates;  // (deg, row, col)
            for (size_t r = 0; r < st.m.size(); ++r) {
                if (st.row_used[r]) continue;
                for (int c = 0; c < ncols; ++c) {
                    if (st.col_used[c] || st.m[r][c].is_zero()) continue;
                    candidates.push_back({st.m[r][c].degree(), static_cast<int>(r), c});
                }
            }
            if (candidates.empty()) return finish(std::move(st));
            std::sort(candidates.begin(), candidates.end());

            for (auto& [deg, br, bc] : candidates) {
                const ParamPoly piv = st.m[br][bc];
                if (piv.is_constant()) {
                    eliminate(st, br, bc);
                    goto next_round;
                }
                auto fact = factor_into_affines(piv, *pool);
                if (!fact) continue;
                std::vector<ParamPoly> factors = fact->factors;
                std::sort(factors.begin(), factors.end());
                factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
                return split(std::move(st), br, bc, factors, 0);
            }
            {
                auto [deg, br, bc] = candidates.front();
                throw NonlinearBranchError(
                    "pivot polynomial does not factor into affine pieces: " +
                        st.m[br][bc].to_string(),
                    st.m[br][bc]);
            }
        next_round:;
        }
    }

private:
    std::unique_ptr<CaseNode> split(State st, int r, int c,
                                    const std::vector<ParamPoly>& factors, size_t i) {
        if (i == factors.size()) {
            // All factors assumed nonzero: pivot is usable.
            for (const auto& f : factors) st.assume.nonzeros.push_back(f);
            eliminate(st, r, c);
            return run(std::move(st));
        }
        auto node = std::make_unique<CaseNode>();
        node->pivot = factors[i];
        node->zero = zero_branch(st, factors[i]);
        node->nonzero = split(std::move(st), r, c, factors, i + 1);
        return node;
    }

    std::unique_ptr<CaseNode> zero_branch(const State& st, const ParamPoly& f) {
        // Solve f = 0 for its lowest-index parameter.
        int var = -1;
        Rational coeff;
        for (int i = 0; i < nparams && var < 0; ++i) {
            ParamPoly d = f.derivative(i);
            if (!d.is_zero()) {
                var = i;
                coeff = d.constant_value();
            }
        }
        State next = st;
        if (var < 0) {
            // Constant factor cannot vanish; empty branch.
            auto node = std::make_unique<CaseNode>();
            node->leaf = std::make_unique<CaseLeaf>();
            node->leaf->assume = st.assume;
            node->leaf->inconsistent = true;
            return node;
        }
        ParamPoly expr = (ParamPoly::variable(nparams, var, coeff) - f) * (Rational(1) / coeff);
        Substitution sub{var, expr};
        next.assume.subs.push_back(sub);
        bool ok = true;
        for (auto& nz : next.assume.nonzeros) {
            nz = nz.substitute(var, expr);
            if (nz.is_zero()) ok = false;
        }
        if (!ok) {
            auto node = std::make_unique<CaseNode>();
            node->leaf = std::make_unique<CaseLeaf>();
            node->leaf->assume = next.assume;
            node->leaf->inconsistent = true;
            return node;
        }
        for (auto& row : next.m)
            for (auto& e : row) e = e.substitute(var, expr);
        for (auto& pv : next.pivot_vals) pv = pv.substitute(var, expr);
        return run(std::move(next));
    }

    void eliminate(State& st, int r, int c) {
        const ParamPoly piv = st.m[r][c];
        for (size_t r2 = 0; r2 < st.m.size(); ++r2) {
            if (static_cast<int>(r2) == r || st.m[r2][c].is_zero()) continue;
            ParamPoly factor = st.m[r2][c];
            for (int c2 = 0; c2 < ncols; ++c2)
                st.m[r2][c2] = piv * st.m[r2][c2] - factor * st.m[r][c2];
            normalize_row(st, st.m[r2]);
        }
        st.row_used[r] = st.col_used[c] = true;
        st.pivot_rows.push_back(r);
        st.pivot_cols.push_back(c);
        st.pivot_vals.push_back(piv);
    }

    // Sound row reductions only: rational content and factors assumed nonzero.
    void normalize_row(const State& st, std::vector<ParamPoly>& row) {
        Rational g = 0;
        for (auto& e : row) g = rational_gcd(g, e.content());
        if (g != 0 && g != 1)
            for (auto& e : row) e *= Rational(1) / g;
        bool progress = true;
        while (progress) {
            progress = false;
            for (const auto& nz : st.assume.nonzeros) {
                if (nz.is_constant()) continue;
                std::vector<ParamPoly> reduced;
                reduced.reserve(row.size());
                bool all = true, any = false;
                for (auto& e : row) {
                    if (e.is_zero()) {
                        reduced.push_back(e);
                        continue;
                    }
                    any = true;
                    auto q = e.divide_exact(nz);
                    if (!q) {
                        all = false;
                        break;
                    }
                    reduced.push_back(*q);
                }
                if (all && any) {
                    row = std::move(reduced);
                    progress = true;
                    break;
                }
            }
        }
    }

    std::unique_ptr<CaseNode> finish(State st) {
        auto leaf = std::make_unique<CaseLeaf>();
        leaf->assume = st.assume;
        leaf->pivot_rows = st.pivot_rows;
        leaf->pivot_cols = st.pivot_cols;
        for (int c = 0; c < ncols; ++c)
            if (!st.col_used[c]) leaf->free_cols.push_back(c);

        // Later eliminations rescale earlier pivot rows, so read the live
        // pivot entries back out of the final matrix.
        std::vector<ParamPoly> pivots;
        for (size_t i = 0; i < st.pivot_cols.size(); ++i)
            pivots.push_back(st.m[st.pivot_rows[i]][st.pivot_cols[i]]);
        leaf->pivot_vals = pivots;

        // Kernel basis: scale the free column by the product of all pivots so
        // every entry stays polynomial, then strip common factors.
        for (int f : leaf->free_cols) {
            std::vector<ParamPoly> v(ncols, ParamPoly(nparams));
            ParamPoly all = ParamPoly::constant(nparams, 1);
            for (auto& p : pivots) all *= p;
            v[f] = all;
            for (size_t i = 0; i < st.pivot_cols.size(); ++i) {
                ParamPoly rest = ParamPoly::constant(nparams, 1);
                for (size_t j = 0; j < pivots.size(); ++j)
                    if (j != i) rest *= pivots[j];
                v[st.pivot_cols[i]] = -st.m[st.pivot_rows[i]][f] * rest;
            }
            remove_common_factors(v, *pool);
            leaf->kernel.push_back(std::move(v));
        }
        auto node = std::make_unique<CaseNode>();
        node->leaf = std::move(leaf);
        return node;
    }
};

}  // namespace detail

// Case-splitting Gauss-Jordan elimination of rows * c = 0 over Q(l1..ln).
// Leaves partition parameter space; on each leaf the rank is constant and
// `kernel` spans the solution space.
inline CaseTree parametric_row_reduce(const std::vector<std::vector<ParamPoly>>& rows,
                                      const std::vector<std::string>& unknowns, int nparams,
                                      const SolveOptions& opts) {
    CaseTree tree;
    tree.nparams = nparams;
    tree.unknowns = unknowns;

    detail::Eliminator elim;
    elim.nparams = nparams;
    elim.ncols = static_cast<int>(unknowns.size());
    elim.pool = &opts.pool;

    detail::Eliminator::State st;
    st.assume = opts.initial;
    st.m = rows;
    for (auto& row : st.m) {
        if (static_cast<int>(row.size()) != elim.ncols)
            throw std::invalid_argument("row width does not match unknown count");
        for (auto& e : row) e = st.assume.reduce(e);
    }
    st.row_used.assign(st.m.size(), false);
    st.col_used.assign(elim.ncols, false);

    tree.root = elim.run(std::move(st));
    return tree;
}

}  // namespace singvect

#endif
