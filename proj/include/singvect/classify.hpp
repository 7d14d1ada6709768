#ifndef SINGVECT_CLASSIFY_HPP
#define SINGVECT_CLASSIFY_HPP

#include "singvect/algebra.hpp"
#include "singvect/induced.hpp"
#include "singvect/rational_linalg.hpp"

#include <memory>
#include <random>
#include <set>
#include <sstream>

namespace singvect {

// Degree-k ansatz anchored at one d-monomial: the anchor coefficient is the
// highest-weight generator, every other coefficient is a combination of
// lowering words at the forced weight offset (monomials of lower weight than
// the anchor get no words at all).
struct Ansatz {
    int degree = 0;
    int anchor_index = 0;
    std::vector<DMonomial> monomials;              // case order
    std::vector<std::vector<Word>> words;          // per monomial
    std::vector<std::vector<int>> offsets;         // per monomial, weight offset
    std::vector<std::pair<int, int>> unknown_of;   // unknown -> (monomial idx, word idx)
    std::vector<std::string> unknown_names;
    int anchor_unknown = -1;
    int needed_depth = 0;
};

inline Ansatz build_ansatz(const GlContext& ctx, SuperDims dims, int k, int anchor_index,
                           int depth) {
    Ansatz az;
    az.degree = k;
    az.anchor_index = anchor_index;
    az.monomials = dmonomials_of_degree(dims, k);
    const auto anchor_wt = az.monomials[anchor_index].weight(ctx.n());

    for (size_t j = 0; j < az.monomials.size(); ++j) {
        auto mw = az.monomials[j].weight(ctx.n());
        std::vector<int> offset(ctx.n());
        for (int i = 0; i < ctx.n(); ++i) offset[i] = anchor_wt[i] - mw[i];
        az.offsets.push_back(offset);
        auto h = offset_height(offset);
        if (h && *h > depth)
            throw DepthOverflowError("ansatz needs lowering words of length " + std::to_string(*h) +
                                     " > depth bound " + std::to_string(depth));
        if (h) az.needed_depth = std::max(az.needed_depth, *h);
        az.words.push_back(h ? weight_basis(ctx, offset, *h) : std::vector<Word>{});
    }

    for (size_t j = 0; j < az.monomials.size(); ++j)
        for (size_t w = 0; w < az.words[j].size(); ++w) {
            if (static_cast<int>(j) == anchor_index && az.words[j][w].empty())
                az.anchor_unknown = static_cast<int>(az.unknown_of.size());
            az.unknown_of.push_back({static_cast<int>(j), static_cast<int>(w)});
            az.unknown_names.push_back("c" + std::to_string(az.unknown_of.size() - 1));
        }
    if (az.anchor_unknown < 0) throw std::logic_error("anchor unknown missing");
    return az;
}

// One pairing block: the word basis of a weight offset together with the
// symbolic pairing matrix against the raising PBW basis.
struct PairingBlock {
    std::vector<int> offset;
    std::vector<Word> words;
    std::vector<std::vector<ParamPoly>> p;
};

namespace classify_detail {

struct BlockCache {
    const GlContext* ctx;
    std::map<std::vector<int>, PairingBlock> blocks;

    const PairingBlock& get(const std::vector<int>& offset) {
        auto it = blocks.find(offset);
        if (it != blocks.end()) return it->second;
        PairingBlock b;
        b.offset = offset;
        auto h = offset_height(offset);
        b.words = h ? weight_basis(*ctx, offset, *h) : std::vector<Word>{};
        b.p = pairing_matrix(*ctx, b.words);
        return blocks.emplace(offset, std::move(b)).first->second;
    }
};

}  // namespace classify_detail

// The linear conditions "act(G, f) = 0 in I(L(Lambda))" for every generator:
// each result coefficient is paired against the full raising basis of its
// weight space, which encodes vanishing modulo the maximal submodule.
struct ConditionSystem {
    Ansatz ansatz;
    std::vector<std::vector<ParamPoly>> rows;
    std::vector<PairingBlock> gauge_blocks;  // per non-anchor monomial with words
    std::vector<int> gauge_monomial;         // monomial index per gauge block
};

inline ConditionSystem singular_conditions(const GlContext& ctx, SuperDims dims,
                                           const Ansatz& ansatz,
                                           const std::vector<SuperField>& generators) {
    ConditionSystem sys;
    sys.ansatz = ansatz;
    classify_detail::BlockCache cache{&ctx, {}};

    const int ncols = static_cast<int>(ansatz.unknown_of.size());
    for (const auto& gen : generators) {
        // act on each ansatz basis element
        std::map<DMonomial, std::map<Word, std::vector<ParamPoly>>, DMonStorageLess> coeff;
        auto gen_wt = gen.weight();
        if (!gen_wt) throw std::invalid_argument("generator is not an h-eigenvector");
        for (int u = 0; u < ncols; ++u) {
            auto [j, wi] = ansatz.unknown_of[u];
            InducedElement f;
            f.degree = ansatz.degree;
            f.add(ansatz.monomials[j], ansatz.words[j][wi], ParamPoly::constant(ctx.nparams(), 1));
            InducedElement img = act(ctx, gen, f);
            for (auto& [d, m] : img.terms)
                for (auto& [w, c] : m.terms) {
                    auto& vec = coeff[d][w];
                    if (vec.empty()) vec.assign(ncols, ParamPoly(ctx.nparams()));
                    vec[u] += c;
                }
        }
        // pair each result coefficient block against the raising basis
        for (auto& [d, by_word] : coeff) {
            // offset of the result coefficient at monomial d
            std::vector<int> offset(ctx.n(), 0);
            {
                auto aw = ansatz.monomials[ansatz.anchor_index].weight(ctx.n());
                auto dw = d.weight(ctx.n());
                for (int i = 0; i < ctx.n(); ++i) offset[i] = aw[i] + (*gen_wt)[i] - dw[i];
            }
            const PairingBlock& block = cache.get(offset);
            std::map<Word, int> windex;
            for (size_t i = 0; i < block.words.size(); ++i) windex[block.words[i]] = static_cast<int>(i);
            for (auto& [w, vec] : by_word)
                if (!windex.count(w)) throw std::logic_error("word outside its weight basis");

            for (size_t r = 0; r < block.words.size(); ++r) {
                std::vector<ParamPoly> row(ncols, ParamPoly(ctx.nparams()));
                bool nontrivial = false;
                for (auto& [w, vec] : by_word) {
                    const ParamPoly& pr = block.p[r][windex[w]];
                    if (pr.is_zero()) continue;
                    for (int u = 0; u < ncols; ++u)
                        if (!vec[u].is_zero()) {
                            row[u] += pr * vec[u];
                            nontrivial = true;
                        }
                }
                if (nontrivial) sys.rows.push_back(std::move(row));
            }
        }
    }

    for (size_t j = 0; j < ansatz.monomials.size(); ++j) {
        if (static_cast<int>(j) == ansatz.anchor_index || ansatz.words[j].empty()) continue;
        sys.gauge_blocks.push_back(cache.get(ansatz.offsets[j]));
        sys.gauge_monomial.push_back(static_cast<int>(j));
    }
    return sys;
}

struct OperatorInterpretation {
    std::vector<std::string> source_weight, target_weight;
    int order = 0;
    std::string label;
};

struct ClassifiedCase {
    int anchor_index = 0;
    std::string anchor;
    std::vector<AffineConstraint> constraints;        // equalities on l1..ln
    std::vector<ParamPoly> assumed_nonzero;           // inequations carved out by the solve
    std::vector<ParamPoly> weight_v, weight_f;
    std::map<std::string, std::string> vanishing;     // monomial -> "zero"/"nonzero"
    std::map<std::string, std::string> solution;      // unknown -> expression
    std::vector<std::pair<std::string, std::string>> unknown_legend;  // name -> (monomial;word)
    int family_dim = 0;
    std::vector<int> free_params;
    int codim = 0;
    std::vector<ParamPoly> dominance;  // reduced difference forms
    bool finite_branch_empty = false;
    std::string finiteness_condition;
    std::string finiteness_note;
    std::string interpretation;

    // solver internals for the oracle crosscheck
    Assumptions assume;
};

struct AnchorSystem {
    Ansatz ansatz;
    ConditionSystem conditions;
    CaseTree tree;

    int gauge_dimension_at(std::span<const Rational> point) const {
        int g = 0;
        for (const auto& block : conditions.gauge_blocks) {
            RationalMatrix m(block.words.size(), std::vector<Rational>(block.words.size()));
            for (size_t r = 0; r < block.words.size(); ++r)
                for (size_t c = 0; c < block.words.size(); ++c) m[r][c] = block.p[r][c].eval(point);
            g += static_cast<int>(block.words.size()) - rank(m);
        }
        return g;
    }
    // Dimension of the singular space in this anchor's weight sector.
    int predicted_dimension_at(std::span<const Rational> point) const {
        const CaseLeaf* leaf = tree.descend(point);
        if (!leaf || leaf->inconsistent) throw std::logic_error("descent failed");
        return leaf->nullity() - gauge_dimension_at(point);
    }
};

struct ContinuumWitness {
    bool flag = false;
    int min_codim = -1;
    std::string case_anchor;
    std::vector<AffineConstraint> constraints;
    std::vector<int> free_params;
};

struct Classification {
    int a = 0, b = 0, degree = 1;
    Algebra algebra = Algebra::Pgl;
    int depth = 0;
    std::vector<ClassifiedCase> cases;
    ContinuumWitness continuum;
    std::vector<std::unique_ptr<AnchorSystem>> systems;  // per anchor, case order
    std::shared_ptr<GlContext> ctx;
};

namespace classify_detail {

inline std::string word_string(const GlContext& ctx, const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (int r : w) {
        auto [j, i] = ctx.root(r);
        if (!s.empty()) s += "*";
        s += "E" + std::to_string(j + 1) + std::to_string(i + 1);
    }
    return s;
}

// Numeric sample on the case variety: free parameters get small random
// rationals, substituted parameters follow; nullopt if an inequation fails.
inline std::optional<std::vector<Rational>> sample_point(const Assumptions& assume, int nparams,
                                                         std::mt19937& rng, int denom_bound) {
    std::vector<std::optional<Rational>> val(nparams);
    std::vector<bool> pinned(nparams, false);
    for (const auto& s : assume.subs) pinned[s.param] = true;
    for (int i = 0; i < nparams; ++i)
        if (!pinned[i]) {
            int num = static_cast<int>(rng() % 41) - 20;
            int den = 1 + static_cast<int>(rng() % static_cast<unsigned>(denom_bound));
            val[i] = Rational(num, den);
        }
    for (int i = static_cast<int>(assume.subs.size()) - 1; i >= 0; --i) {
        std::vector<Rational> cur(nparams, 0);
        for (int p = 0; p < nparams; ++p)
            if (val[p]) cur[p] = *val[p];
        val[assume.subs[i].param] = assume.subs[i].expr.eval(cur);
    }
    std::vector<Rational> point(nparams, 0);
    for (int p = 0; p < nparams; ++p) point[p] = val[p].value_or(0);
    for (const auto& nz : assume.nonzeros) {
        ParamPoly q = nz;
        if (q.eval(point) == 0) return std::nullopt;
    }
    return point;
}

inline std::string join_params(const std::vector<int>& ps) {
    std::string s;
    for (int p : ps) {
        if (!s.empty()) s += ",";
        s += "l" + std::to_string(p + 1);
    }
    return s;
}

}  // namespace classify_detail

// Full classification of degree-k singular vectors / invariant operators for
// the chosen algebra, as a list of weight-constraint cases.
inline Classification classify(int a, int b, int k, Algebra algebra, int depth = -1,
                               bool force_g2 = false) {
    if (k < 1) throw std::invalid_argument("degree must be >= 1");
    SuperDims dims{a, b};
    auto basis = standard_basis(a, b, force_g2 || (a == 1 && b == 0));
    auto generators = invariance_generators(basis, algebra, force_g2);

    // Depth: every offset height appearing for any anchor, plus slack for the
    // one extra lowering a generator action can introduce.
    auto monomials = dmonomials_of_degree(dims, k);
    int needed = 1;
    {
        GlContext probe(a, b, 1 + k * std::max(1, a + b));
        for (size_t anc = 0; anc < monomials.size(); ++anc) {
            auto aw = monomials[anc].weight(probe.n());
            for (size_t j = 0; j < monomials.size(); ++j) {
                auto mw = monomials[j].weight(probe.n());
                std::vector<int> off(probe.n());
                for (int i = 0; i < probe.n(); ++i) off[i] = aw[i] - mw[i];
                if (auto h = offset_height(off)) needed = std::max(needed, *h);
            }
        }
    }
    int bound = depth > 0 ? depth : needed + 2;

    Classification out;
    out.a = a;
    out.b = b;
    out.degree = k;
    out.algebra = algebra;
    out.depth = bound;
    out.ctx = std::make_shared<GlContext>(a, b, bound);
    const GlContext& ctx = *out.ctx;

    FactorPool pool = FactorPool::structured(ctx.nparams(), std::max(4, needed + k + 2));

    for (int anchor = 0; anchor < static_cast<int>(monomials.size()); ++anchor) {
        auto sys = std::make_unique<AnchorSystem>();
        sys->ansatz = build_ansatz(ctx, dims, k, anchor, bound - 1);
        sys->conditions = singular_conditions(ctx, dims, sys->ansatz, generators);

        SolveOptions opts;
        opts.pool = pool;
        for (const auto& row : sys->conditions.rows)
            for (const auto& e : row)
                if (e.degree() >= 1) {
                    if (auto f = factor_into_affines(e, opts.pool))
                        for (auto& fac : f->factors) opts.pool.add(fac);
                }
        sys->tree = parametric_row_reduce(sys->conditions.rows, sys->ansatz.unknown_names,
                                          ctx.nparams(), opts);

        // Chain the gauge blocks under each consistent condition leaf.
        struct State {
            Assumptions assume;
            int gauge = 0;
            const CaseLeaf* leaf;
        };
        std::vector<State> states;
        for (const CaseLeaf* leaf : sys->tree.leaves()) {
            if (leaf->inconsistent) continue;
            states.push_back({leaf->assume, 0, leaf});
        }
        for (const auto& block : sys->conditions.gauge_blocks) {
            std::vector<State> next;
            for (auto& st : states) {
                std::vector<std::string> names;
                for (size_t i = 0; i < block.words.size(); ++i)
                    names.push_back("g" + std::to_string(i));
                SolveOptions gopts;
                gopts.pool = opts.pool;
                gopts.initial = st.assume;
                CaseTree gt = parametric_row_reduce(block.p, names, ctx.nparams(), gopts);
                for (const CaseLeaf* gl : gt.leaves()) {
                    if (gl->inconsistent) continue;
                    next.push_back({gl->assume, st.gauge + gl->nullity(), st.leaf});
                }
            }
            states = std::move(next);
        }

        const Ansatz& az = sys->ansatz;
        for (auto& st : states) {
            int effective = st.leaf->nullity() - st.gauge;
            if (effective < 1) continue;

            ClassifiedCase c;
            c.anchor_index = anchor;
            c.anchor = az.monomials[anchor].to_string();
            c.assume = st.assume;
            c.family_dim = effective;

            auto simplified = constraint_simplify(st.assume.equalities(ctx.nparams()));
            if (simplified.empty_variety) continue;
            c.constraints = simplified.constraints;
            for (auto& nz : st.assume.nonzeros)
                if (!nz.is_constant()) c.assumed_nonzero.push_back(nz);
            std::sort(c.assumed_nonzero.begin(), c.assumed_nonzero.end());
            c.assumed_nonzero.erase(std::unique(c.assumed_nonzero.begin(), c.assumed_nonzero.end()),
                                    c.assumed_nonzero.end());

            c.codim = 0;
            std::vector<bool> pinned(ctx.nparams(), false);
            for (auto& s : st.assume.subs) {
                if (!pinned[s.param]) ++c.codim;
                pinned[s.param] = true;
            }
            for (int p = 0; p < ctx.nparams(); ++p)
                if (!pinned[p]) c.free_params.push_back(p);

            for (int i = 0; i < ctx.n(); ++i) c.weight_v.push_back(st.assume.reduce(ctx.lambda(i)));
            auto aw = az.monomials[anchor].weight(ctx.n());
            for (int i = 0; i < ctx.n(); ++i)
                c.weight_f.push_back(c.weight_v[i] + ParamPoly::constant(ctx.nparams(), aw[i]));

            // Representative solution: a kernel vector carrying the anchor.
            std::vector<std::vector<ParamPoly>> kernel = st.leaf->kernel;
            for (auto& v : kernel)
                for (auto& e : v) e = st.assume.reduce(e);
            const std::vector<ParamPoly>* rep = nullptr;
            for (auto& v : kernel)
                if (!v[az.anchor_unknown].is_zero()) {
                    rep = &v;
                    break;
                }
            if (rep) {
                std::vector<ParamPoly> norm = *rep;
                remove_common_factors(norm, opts.pool);
                const ParamPoly& anc = norm[az.anchor_unknown];
                if (anc.is_constant() && !anc.is_zero()) {
                    Rational s = Rational(1) / anc.constant_value();
                    for (auto& e : norm) e *= s;
                }
                for (size_t u = 0; u < norm.size(); ++u)
                    if (!norm[u].is_zero()) c.solution[az.unknown_names[u]] = norm[u].to_string();
            }
            for (size_t u = 0; u < az.unknown_of.size(); ++u) {
                auto [j, wi] = az.unknown_of[u];
                c.unknown_legend.push_back(
                    {az.unknown_names[u], az.monomials[j].to_string() + " ; " +
                                              classify_detail::word_string(ctx, az.words[j][wi])});
            }

            // Vanishing pattern: a monomial is zero when every solution's
            // block coordinate dies in the quotient (P * block = 0), checked
            // at sampled points of the case variety.
            {
                std::mt19937 rng(0xC0FFEE ^ (anchor * 977) ^ (k * 131) ^ static_cast<int>(algebra));
                std::vector<std::vector<Rational>> samples;
                for (int tries = 0; tries < 200 && samples.size() < 3; ++tries)
                    if (auto pt = classify_detail::sample_point(st.assume, ctx.nparams(), rng, 13))
                        samples.push_back(*pt);
                for (size_t j = 0; j < az.monomials.size(); ++j) {
                    bool zero = true;
                    if (static_cast<int>(j) == anchor) zero = false;
                    const PairingBlock* block = nullptr;
                    for (size_t bi = 0; bi < sys->conditions.gauge_blocks.size(); ++bi)
                        if (sys->conditions.gauge_monomial[bi] == static_cast<int>(j))
                            block = &sys->conditions.gauge_blocks[bi];
                    if (zero && block && !az.words[j].empty()) {
                        for (auto& pt : samples) {
                            // numeric kernel of the full system at pt
                            RationalMatrix m;
                            for (auto& row : sys->conditions.rows) {
                                std::vector<Rational> r;
                                for (auto& e : row) r.push_back(e.eval(pt));
                                m.push_back(std::move(r));
                            }
                            auto numkernel =
                                kernel_basis(m, static_cast<int>(az.unknown_names.size()));
                            RationalMatrix pnum(block->words.size(),
                                                std::vector<Rational>(block->words.size()));
                            for (size_t r = 0; r < block->words.size(); ++r)
                                for (size_t cc = 0; cc < block->words.size(); ++cc)
                                    pnum[r][cc] = block->p[r][cc].eval(pt);
                            for (auto& kv : numkernel) {
                                std::vector<Rational> blockvec;
                                for (size_t u = 0; u < az.unknown_of.size(); ++u)
                                    if (az.unknown_of[u].first == static_cast<int>(j))
                                        blockvec.push_back(kv[u]);
                                for (size_t r = 0; r < pnum.size(); ++r) {
                                    Rational acc = 0;
                                    for (size_t cc = 0; cc < blockvec.size(); ++cc)
                                        acc += pnum[r][cc] * blockvec[cc];
                                    if (acc != 0) zero = false;
                                }
                            }
                        }
                    }
                    c.vanishing[az.monomials[j].to_string()] = zero ? "zero" : "nonzero";
                }
            }

            // Finiteness annotation from the dominance difference forms.
            {
                auto all_forms = dominance_forms(ctx);
                std::vector<ParamPoly> forms;
                bool pinned_dominant = !all_forms.empty();
                for (auto& f : all_forms) {
                    ParamPoly r = st.assume.reduce(f);
                    if (r.is_zero()) continue;
                    if (r.is_constant()) {
                        Rational v = r.constant_value();
                        if (!(is_integer(v) && v >= 0)) c.finite_branch_empty = true;
                        continue;
                    }
                    pinned_dominant = false;
                    forms.push_back(r);
                }
                if (c.finite_branch_empty) pinned_dominant = false;
                if (!c.finite_branch_empty && !nonneg_system_feasible(forms))
                    c.finite_branch_empty = true;
                c.dominance = forms;
                std::string cond;
                for (auto& f : forms) {
                    if (!cond.empty()) cond += " and ";
                    cond += f.to_string() + " in Z>=0";
                }
                if (cond.empty())
                    cond = all_forms.empty()
                               ? "none (every weight is dominant integral)"
                               : (pinned_dominant ? "weight is dominant integral; dim V < oo"
                                                  : "none");
                c.finiteness_condition =
                    c.finite_branch_empty ? "no solutions if dim V < oo" : cond;
                for (auto& f : forms) {
                    bool frac = false;
                    for (auto& [mn, cf] : f.terms())
                        if (!is_integer(cf)) frac = true;
                    if (frac)
                        c.finiteness_note =
                            "integrality threshold convention (Z>=0 vs shifted) is ambiguous in "
                            "classical displays; recorded as Z>=0";
                }
                if (a == 2 && b == 0 && k == 1 && anchor == 0)
                    c.finiteness_note =
                        "integrality threshold stated elsewhere with a +1 shift and truncated "
                        "subscript; recorded as Z>=0";
                if (a == 0 && b == 3 && k == 1 && anchor == 2)
                    c.finiteness_note =
                        "boundary convention differs across displays (Z>0 vs Z>=0); recorded as "
                        "Z>=0";
            }

            // Known operator shapes.
            {
                auto weight_is = [&](const std::vector<ParamPoly>& w, const Rational& v) {
                    for (auto& e : w)
                        if (!(e.is_constant() && e.constant_value() == v)) return false;
                    return true;
                };
                if (a == 0 && k == b && weight_is(c.weight_v, 1)) {
                    c.interpretation = "Berezin integral";
                    if (k >= 3) c.interpretation += ", order " + std::to_string(k);
                } else if (k == 1 && weight_is(c.weight_v, 0) && b == 0) {
                    c.interpretation = "exterior differential d: Ω^0 → Ω^1";
                    if (a == 1) c.interpretation += ", self-dual";
                } else if (a == 0 && b == 2 && k == 1) {
                    c.interpretation = anchor == 0
                                           ? "exterior differential d: Σ_{-k} → Σ_{-k+1}"
                                           : "exterior differential d: Ω^l → Ω^{l+1}";
                }
            }

            out.cases.push_back(std::move(c));
        }
        out.systems.push_back(std::move(sys));
    }

    // Display-layer merge: a leaf whose variety lies inside another case of
    // the same anchor with the same family dimension is the boundary of that
    // closed family; keep the closure representative.
    {
        std::vector<bool> drop(out.cases.size(), false);
        for (size_t i = 0; i < out.cases.size(); ++i)
            for (size_t j = 0; j < out.cases.size(); ++j) {
                if (i == j || drop[i] || drop[j]) continue;
                const auto& ci = out.cases[i];
                const auto& cj = out.cases[j];
                if (ci.anchor_index != cj.anchor_index || ci.family_dim != cj.family_dim) continue;
                if (ci.codim < cj.codim) continue;
                if (ci.codim == cj.codim && i < j) continue;
                bool contained = true;
                for (const auto& q : cj.constraints)
                    if (!ci.assume.reduce(q.to_poly(ctx.nparams())).is_zero()) contained = false;
                if (contained) drop[i] = true;
            }
        std::vector<ClassifiedCase> kept;
        for (size_t i = 0; i < out.cases.size(); ++i)
            if (!drop[i]) kept.push_back(std::move(out.cases[i]));
        out.cases = std::move(kept);
    }

    // Continuum marker: outside the tabulated key superdimensions, any case
    // whose constraint variety has codimension <= 2 flags the configuration.
    {
        static const std::set<std::pair<int, int>> key_dims{{0, 2}, {0, 3}, {2, 0}, {1, 1}, {1, 0}};
        const ClassifiedCase* witness = nullptr;
        for (const auto& c : out.cases)
            if (!witness || c.codim < witness->codim) witness = &c;
        if (witness) {
            out.continuum.min_codim = witness->codim;
            out.continuum.case_anchor = witness->anchor;
            out.continuum.constraints = witness->constraints;
            out.continuum.free_params = witness->free_params;
            out.continuum.flag = !key_dims.count({a, b}) && witness->codim <= 2;
        }
    }
    return out;
}

inline ContinuumWitness detect_continuum(const Classification& c) { return c.continuum; }

inline OperatorInterpretation render_operator(const Classification& cls, const ClassifiedCase& c) {
    OperatorInterpretation op;
    for (auto& w : c.weight_v) op.source_weight.push_back(w.to_string());
    for (auto& w : c.weight_f) op.target_weight.push_back(w.to_string());
    op.order = cls.degree;
    op.label = c.interpretation;
    return op;
}

}  // namespace singvect

#endif
