#ifndef SINGVECT_ORACLE_HPP
#define SINGVECT_ORACLE_HPP

// Brute-force numeric verifier. Everything here works with explicit rational
// matrices at a fully numeric weight and deliberately avoids the symbolic
// machinery in hw_module.hpp / induced.hpp / classify.hpp: the straightening,
// word enumeration, pairing and kernel computations are written out again so
// the two paths only share the vector-field algebra itself.

#include "singvect/algebra.hpp"
#include "singvect/classify.hpp"

#include <map>
#include <random>
#include <sstream>
#include <vector>

namespace singvect::oracle {

using NWord = std::vector<std::pair<int, int>>;  // product of E_{ji}, j > i, left to right
using NElem = std::map<NWord, Rational>;

struct Realization {
    int a = 0, b = 0;
    std::vector<Rational> lambda;
    int depth = 0;

    bool odd_coord(int i) const { return i >= a; }
    bool odd_pair(int s, int t) const { return odd_coord(s) != odd_coord(t); }
    // canonical order on negative roots: height, then row
    bool root_before(std::pair<int, int> x, std::pair<int, int> y) const {
        int hx = x.first - x.second, hy = y.first - y.second;
        if (hx != hy) return hx < hy;
        return x.second < y.second;
    }
};

namespace detail {

inline void nadd(NElem& e, const NWord& w, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = e.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) e.erase(it);
    }
}

// F_{q} * (w . v0) in the canonical descending-insertion normal form.
inline NElem lower_word(const Realization& rz, std::pair<int, int> q, const NWord& w);

// E_{st} * (w . v0), arbitrary s, t.
inline NElem pair_word(const Realization& rz, int s, int t, const NWord& w) {
    NElem out;
    if (s == t) {
        // Cartan eigenvalue: lambda_s + sum of root contributions
        Rational eig = rz.lambda[s];
        for (auto& [j, i] : w) eig += (j == s ? 1 : 0) - (i == s ? 1 : 0);
        nadd(out, w, eig);
        return out;
    }
    if (s > t) return lower_word(rz, {s, t}, w);
    if (w.empty()) return out;  // raising kills v0

    auto head = w.front();
    NWord tail(w.begin() + 1, w.end());
    int sign = (rz.odd_pair(s, t) && rz.odd_pair(head.first, head.second)) ? -1 : 1;
    for (auto& [w2, c2] : pair_word(rz, s, t, tail)) {
        for (auto& [w3, c3] : lower_word(rz, head, w2)) nadd(out, w3, c2 * c3 * sign);
    }
    // [E_{st}, E_{head}] = d(t=j) E_{s,i} - (-1)^{pp'} d(i=s) E_{j,t}
    auto [j, i] = head;
    if (t == j)
        for (auto& [w2, c2] : pair_word(rz, s, i, tail)) nadd(out, w2, c2);
    if (i == s) {
        int sg = (rz.odd_pair(s, t) && rz.odd_pair(j, i)) ? -1 : 1;
        for (auto& [w2, c2] : pair_word(rz, j, t, tail)) nadd(out, w2, -Rational(sg) * c2);
    }
    return out;
}

inline NElem lower_word(const Realization& rz, std::pair<int, int> q, const NWord& w) {
    NElem out;
    if (w.empty() || !rz.root_before(w.front(), q)) {
        if (!w.empty() && w.front() == q && rz.odd_pair(q.first, q.second)) return out;  // F^2=0
        NWord nw;
        nw.push_back(q);
        nw.insert(nw.end(), w.begin(), w.end());
        nadd(out, nw, 1);
        return out;
    }
    auto head = w.front();
    NWord tail(w.begin() + 1, w.end());
    int sign =
        (rz.odd_pair(q.first, q.second) && rz.odd_pair(head.first, head.second)) ? -1 : 1;
    for (auto& [w2, c2] : lower_word(rz, q, tail))
        for (auto& [w3, c3] : lower_word(rz, head, w2)) nadd(out, w3, c2 * c3 * sign);
    // bracket of two negative roots
    auto [jq, iq] = q;
    auto [jh, ih] = head;
    if (iq == jh)
        for (auto& [w2, c2] : lower_word(rz, {jq, ih}, tail)) nadd(out, w2, c2);
    if (ih == jq) {
        int sg = sign;
        for (auto& [w2, c2] : lower_word(rz, {jh, iq}, tail)) nadd(out, w2, -Rational(sg) * c2);
    }
    return out;
}

// All canonical words of the given weight offset (independent enumeration:
// grow words root by root and keep those that land on the offset).
inline std::vector<NWord> words_for_offset(const Realization& rz, const std::vector<int>& offset) {
    int n = rz.a + rz.b;
    int need = 0;
    {
        int partial = 0;
        for (int i = 0; i < n; ++i) {
            partial += offset[i];
            if (i + 1 < n) {
                if (partial > 0) return {};
                need -= partial;
            }
        }
        if (partial != 0) return {};
    }
    std::vector<std::pair<int, int>> roots;
    for (int h = 1; h < n; ++h)
        for (int i = 0; i + h < n; ++i) roots.push_back({i + h, i});

    std::vector<NWord> result;
    NWord cur;
    auto rec = [&](auto&& self, size_t start, std::vector<int> rem, int left) -> void {
        bool done = true;
        for (int v : rem)
            if (v) done = false;
        if (done) {
            result.push_back(cur);
            return;
        }
        if (left == 0) return;
        for (size_t r = start; r < roots.size(); ++r) {
            auto [j, i] = roots[r];
            if (!cur.empty() && cur.back() == roots[r] && rz.odd_pair(j, i)) continue;
            std::vector<int> next = rem;
            next[j] -= 1;
            next[i] += 1;
            int partial = 0;
            bool ok = true;
            for (int t = 0; t < n; ++t) {
                partial += next[t];
                if (t + 1 < n && partial > 0) ok = false;
            }
            if (partial != 0) ok = false;
            if (!ok) continue;
            cur.push_back(roots[r]);
            self(self, r, next, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, offset, need);
    std::sort(result.begin(), result.end());
    return result;
}

// Numeric pairing of the offset weight space against the raising basis.
inline RationalMatrix pairing(const Realization& rz, const std::vector<NWord>& words) {
    RationalMatrix p(words.size(), std::vector<Rational>(words.size(), 0));
    for (size_t r = 0; r < words.size(); ++r)
        for (size_t c = 0; c < words.size(); ++c) {
            NElem m;
            nadd(m, words[c], 1);
            for (auto& [j, i] : words[r]) {
                NElem next;
                for (auto& [w, cf] : m)
                    for (auto& [w2, cf2] : pair_word(rz, i, j, w)) nadd(next, w2, cf * cf2);
                m = std::move(next);
                if (m.empty()) break;
            }
            auto it = m.find(NWord{});
            p[r][c] = it == m.end() ? Rational(0) : it->second;
        }
    return p;
}

// d-monomial bookkeeping (kept separate from induced.hpp on purpose).
struct NMono {
    std::vector<unsigned> xexp;
    uint32_t ximask = 0;
    auto operator<=>(const NMono&) const = default;
};

inline std::optional<std::pair<int, NMono>> nmono_mul(int a, int h, NMono d) {
    if (h < a) {
        d.xexp[h] += 1;
        return std::pair{1, d};
    }
    int j = h - a;
    if (d.ximask & (1u << j)) return std::nullopt;
    int below = std::popcount(d.ximask & ((1u << j) - 1));
    d.ximask |= 1u << j;
    return std::pair{(below % 2) ? -1 : 1, d};
}

using NInduced = std::map<std::pair<NMono, NWord>, Rational>;

// X * (D (x) w . v0), numeric recursive descent.
inline NInduced act_induced(const Realization& rz, const SuperField& x, const NMono& d,
                            const NWord& w) {
    NInduced out;
    SuperDims dims = x.dims();
    // leftmost d-factor
    int h = -1;
    NMono rest = d;
    for (int i = 0; i < dims.a && h < 0; ++i)
        if (d.xexp[i]) {
            h = i;
            rest.xexp[i] -= 1;
        }
    if (h < 0 && d.ximask) {
        int j = std::countr_zero(d.ximask);
        h = dims.a + j;
        rest.ximask &= ~(1u << j);
    }

    if (h < 0) {
        for (auto& [k, c] : x.terms()) {
            int deg = x.term_degree(k);
            if (deg == -1) {
                NMono unit;
                unit.xexp.assign(dims.a, 0);
                auto prod = nmono_mul(dims.a, k.target, unit);
                out[{prod->second, w}] += c * prod->first;
            } else if (deg == 0) {
                int s = -1;
                for (int i = 0; i < dims.a; ++i)
                    if (k.xexp[i]) s = i;
                for (int j = 0; j < dims.b; ++j)
                    if (k.ximask & (1u << j)) s = dims.a + j;
                NMono unit;
                unit.xexp.assign(dims.a, 0);
                for (auto& [w2, c2] : pair_word(rz, s, k.target, w)) out[{unit, w2}] += c * c2;
            }
        }
        std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
        return out;
    }

    for (auto& [k, c] : x.terms()) {
        SuperField one = SuperField::term(dims, 1, k.xexp, k.ximask, k.target);
        int sign = (one.parity() && dims.odd_coord(h)) ? -1 : 1;
        for (auto& [key, c2] : act_induced(rz, one, rest, w)) {
            auto prod = nmono_mul(dims.a, h, key.first);
            if (!prod) continue;
            out[{prod->second, key.second}] += c * c2 * sign * prod->first;
        }
        SuperField br = supercommutator(one, SuperField::partial(dims, h));
        if (!br.is_zero())
            for (auto& [key, c2] : act_induced(rz, br, rest, w)) out[key] += c * c2;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace detail

// Truncated numeric realization of the module: basis of lowering words of
// length <= depth plus exact action matrices for the requested generators.
struct NumericRealization {
    Realization rz;
    std::vector<NWord> basis;
    std::map<NWord, int> index;
    // generator label -> matrix (columns follow `basis`; entries on words
    // that leave the truncation are dropped, hence the validity window)
    std::vector<std::pair<std::string, RationalMatrix>> matrices;
    int validity_window = 0;
};

inline NumericRealization realize(std::span<const Rational> weight, int a, int b, int depth) {
    NumericRealization nr;
    nr.rz = Realization{a, b, std::vector<Rational>(weight.begin(), weight.end()), depth};
    int n = a + b;

    // enumerate all canonical words of length <= depth
    std::vector<std::pair<int, int>> roots;
    for (int h = 1; h < n; ++h)
        for (int i = 0; i + h < n; ++i) roots.push_back({i + h, i});
    std::vector<NWord> layer{NWord{}};
    nr.basis.push_back(NWord{});
    for (int len = 1; len <= depth; ++len) {
        std::vector<NWord> next;
        for (auto& w : layer)
            for (auto& r : roots) {
                if (!w.empty() && !nr.rz.root_before(w.back(), r) && w.back() != r) continue;
                if (!w.empty() && w.back() == r && nr.rz.odd_pair(r.first, r.second)) continue;
                NWord nw = w;
                nw.push_back(r);
                next.push_back(nw);
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        for (auto& w : next) nr.basis.push_back(w);
        layer = std::move(next);
    }
    std::sort(nr.basis.begin(), nr.basis.end(),
              [](const NWord& x, const NWord& y) {
                  if (x.size() != y.size()) return x.size() < y.size();
                  return x < y;
              });
    for (size_t i = 0; i < nr.basis.size(); ++i) nr.index[nr.basis[i]] = static_cast<int>(i);

    auto matrix_for = [&](int s, int t) {
        RationalMatrix m(nr.basis.size(), std::vector<Rational>(nr.basis.size(), 0));
        for (size_t c = 0; c < nr.basis.size(); ++c)
            for (auto& [w, cf] : detail::pair_word(nr.rz, s, t, nr.basis[c])) {
                auto it = nr.index.find(w);
                if (it != nr.index.end()) m[it->second][c] = cf;
            }
        return m;
    };
    for (int i = 0; i < n; ++i)
        nr.matrices.push_back({"H" + std::to_string(i + 1), matrix_for(i, i)});
    for (int i = 0; i + 1 < n; ++i) {
        nr.matrices.push_back(
            {"E" + std::to_string(i + 1) + std::to_string(i + 2), matrix_for(i, i + 1)});
        nr.matrices.push_back(
            {"E" + std::to_string(i + 2) + std::to_string(i + 1), matrix_for(i + 1, i)});
    }
    nr.validity_window = depth - 1;
    return nr;
}

// Dimension of the quotient by the maximal submodule, per word-length layer
// up to `depth` (the contravariant-form kernel quotient).
inline int quotient_dimension(std::span<const Rational> weight, int a, int b, int depth) {
    Realization rz{a, b, std::vector<Rational>(weight.begin(), weight.end()), depth};
    NumericRealization nr = realize(weight, a, b, depth);
    std::map<std::vector<int>, std::vector<NWord>> by_offset;
    int n = a + b;
    for (auto& w : nr.basis) {
        std::vector<int> off(n, 0);
        for (auto& [j, i] : w) {
            off[j] += 1;
            off[i] -= 1;
        }
        by_offset[off].push_back(w);
    }
    int dim = 0;
    for (auto& [off, words] : by_offset) {
        auto p = detail::pairing(rz, words);
        dim += static_cast<int>(words.size()) - static_cast<int>(kernel_basis(p, words.size()).size());
    }
    return dim;
}

struct SectorResult {
    DMonomial anchor;
    int dimension = 0;
    std::vector<std::string> basis;  // printable solution vectors
};

struct BruteForceResult {
    int dimension = 0;
    std::vector<SectorResult> sectors;
};

// Exact singular-space computation in I(L(Lambda)) at a numeric weight, one
// weight sector per anchor d-monomial (their f-weights are distinct).
// densities_only additionally demands the solution span a one-dimensional
// g0-module (simple lowerings kill it too): such vectors are the duals of
// operators between spaces of weighted densities.
inline BruteForceResult brute_force_singular(int a, int b, int k, std::span<const Rational> weight,
                                             Algebra algebra, bool finite_branch = false,
                                             int anchor_only = -1, bool densities_only = false) {
    SuperDims dims{a, b};
    int n = a + b;
    Realization rz{a, b, std::vector<Rational>(weight.begin(), weight.end()), 0};
    if (finite_branch && !finite_dim_admissible(weight, a, b))
        throw std::invalid_argument("finite branch requires a dominant integral weight");

    auto basis = standard_basis(a, b, a == 1 && b == 0);
    auto generators = invariance_generators(basis, algebra);
    if (densities_only)
        for (const auto& low : basis.lowering) generators.push_back(low);

    auto monomials = dmonomials_of_degree(dims, k);
    BruteForceResult out;

    for (int anchor = 0; anchor < static_cast<int>(monomials.size()); ++anchor) {
        if (anchor_only >= 0 && anchor != anchor_only) continue;
        auto anchor_wt = monomials[anchor].weight(n);

        // unknowns: (monomial, word at its offset)
        std::vector<std::pair<detail::NMono, NWord>> unknowns;
        std::vector<std::vector<NWord>> block_words(monomials.size());
        std::vector<int> block_begin(monomials.size(), 0);
        for (size_t j = 0; j < monomials.size(); ++j) {
            auto mw = monomials[j].weight(n);
            std::vector<int> off(n);
            for (int i = 0; i < n; ++i) off[i] = anchor_wt[i] - mw[i];
            block_words[j] = detail::words_for_offset(rz, off);
            block_begin[j] = static_cast<int>(unknowns.size());
            detail::NMono m{monomials[j].xexp, monomials[j].ximask};
            if (m.xexp.empty()) m.xexp.assign(a, 0);
            for (auto& w : block_words[j]) unknowns.push_back({m, w});
        }

        // rows: for each generator, pair every result coefficient block
        RationalMatrix rows;
        for (const auto& gen : generators) {
            std::map<detail::NMono, std::map<NWord, std::vector<Rational>>> coeff;
            for (size_t u = 0; u < unknowns.size(); ++u) {
                auto img = detail::act_induced(rz, gen, unknowns[u].first, unknowns[u].second);
                for (auto& [key, c] : img) {
                    auto& vec = coeff[key.first][key.second];
                    if (vec.empty()) vec.assign(unknowns.size(), 0);
                    vec[u] += c;
                }
            }
            for (auto& [mono, by_word] : coeff) {
                // offset of this result block
                std::vector<int> off(n, 0);
                {
                    std::vector<int> mw(n, 0);
                    for (int i = 0; i < a; ++i) mw[i] -= static_cast<int>(mono.xexp[i]);
                    for (int j = 0; a + j < n; ++j)
                        if (mono.ximask & (1u << j)) mw[a + j] -= 1;
                    auto gw = gen.weight();
                    for (int i = 0; i < n; ++i) off[i] = anchor_wt[i] + (*gw)[i] - mw[i];
                }
                auto words = detail::words_for_offset(rz, off);
                std::map<NWord, int> widx;
                for (size_t i = 0; i < words.size(); ++i) widx[words[i]] = static_cast<int>(i);
                auto p = detail::pairing(rz, words);
                for (size_t r = 0; r < words.size(); ++r) {
                    std::vector<Rational> row(unknowns.size(), 0);
                    bool used = false;
                    for (auto& [w, vec] : by_word) {
                        const Rational& pr = p[r][widx.at(w)];
                        if (pr == 0) continue;
                        for (size_t u = 0; u < unknowns.size(); ++u)
                            if (vec[u] != 0) {
                                row[u] += pr * vec[u];
                                used = true;
                            }
                    }
                    if (used) rows.push_back(std::move(row));
                }
            }
        }

        int nullity = static_cast<int>(kernel_basis(rows, static_cast<int>(unknowns.size())).size());
        int gauge = 0;
        for (size_t j = 0; j < monomials.size(); ++j) {
            if (static_cast<int>(j) == anchor || block_words[j].empty()) continue;
            auto p = detail::pairing(rz, block_words[j]);
            gauge += static_cast<int>(kernel_basis(p, block_words[j].size()).size());
        }

        SectorResult sector;
        sector.anchor = monomials[anchor];
        sector.dimension = nullity - gauge;

        if (sector.dimension > 0) {
            // representatives: kernel vectors independent modulo the gauge span
            auto kern = kernel_basis(rows, static_cast<int>(unknowns.size()));
            RationalMatrix gauge_span;
            for (size_t j = 0; j < monomials.size(); ++j) {
                if (static_cast<int>(j) == anchor || block_words[j].empty()) continue;
                auto p = detail::pairing(rz, block_words[j]);
                for (auto& gv : kernel_basis(p, block_words[j].size())) {
                    std::vector<Rational> full(unknowns.size(), 0);
                    for (size_t t = 0; t < gv.size(); ++t) full[block_begin[j] + t] = gv[t];
                    gauge_span.push_back(std::move(full));
                }
            }
            RationalMatrix reduce = gauge_span;
            int grank = static_cast<int>(rref(reduce).size());
            for (auto& kv : kern) {
                RationalMatrix test = reduce;
                test.push_back(kv);
                if (rank(test) > grank) {
                    reduce.push_back(kv);
                    grank += 1;
                    std::ostringstream os;
                    for (size_t u = 0; u < unknowns.size(); ++u) {
                        if (kv[u] == 0) continue;
                        DMonomial dm;
                        dm.xexp = unknowns[u].first.xexp;
                        dm.ximask = unknowns[u].first.ximask;
                        os << (os.tellp() > 0 ? " + " : "") << to_string(kv[u]) << "*(" << dm.to_string()
                           << " ; ";
                        if (unknowns[u].second.empty())
                            os << "v0";
                        else {
                            for (auto& [jj, ii] : unknowns[u].second)
                                os << "E" << jj + 1 << ii + 1 << ".";
                            os << "v0";
                        }
                        os << ")";
                    }
                    sector.basis.push_back(os.str());
                }
            }
        }
        out.dimension += sector.dimension;
        out.sectors.push_back(std::move(sector));
    }
    return out;
}

struct CrosscheckReport {
    int samples = 0;
    int mismatches = 0;
    std::vector<std::string> mismatch_details;
    bool ok() const { return mismatches == 0; }
};

// Compare the classification's predicted sector dimensions against the brute
// force at on- and off-variety samples, fixed seed.
inline CrosscheckReport crosscheck(const Classification& cls, int samples_per_case, unsigned seed) {
    CrosscheckReport rep;
    std::mt19937 rng(seed);
    const GlContext& ctx = *cls.ctx;
    int n = ctx.n();

    auto run_sample = [&](const ClassifiedCase& c, const std::vector<Rational>& pt,
                          const char* kind) {
        const AnchorSystem& sys = *cls.systems[c.anchor_index];
        int predicted = sys.predicted_dimension_at(pt);
        auto brute = brute_force_singular(cls.a, cls.b, cls.degree, pt, cls.algebra, false,
                                          c.anchor_index);
        int actual = brute.sectors.empty() ? 0 : brute.sectors[0].dimension;
        ++rep.samples;
        if (predicted != actual) {
            ++rep.mismatches;
            std::ostringstream os;
            os << kind << " sample anchor=" << c.anchor << " at (";
            for (int i = 0; i < n; ++i) os << (i ? "," : "") << to_string(pt[i]);
            os << "): predicted " << predicted << ", brute force " << actual;
            rep.mismatch_details.push_back(os.str());
        }
    };

    for (const auto& c : cls.cases) {
        for (int s = 0; s < samples_per_case; ++s) {
            std::optional<std::vector<Rational>> pt;
            for (int tries = 0; tries < 500 && !pt; ++tries)
                pt = classify_detail::sample_point(c.assume, n, rng, 97);
            if (!pt) continue;
            run_sample(c, *pt, "on-variety");
        }
        for (int s = 0; s < samples_per_case; ++s) {
            std::vector<Rational> pt;
            bool off = false;
            for (int tries = 0; tries < 500 && !off; ++tries) {
                pt.clear();
                for (int i = 0; i < n; ++i)
                    pt.push_back(Rational(static_cast<int>(rng() % 195) - 97,
                                           1 + static_cast<int>(rng() % 97)));
                off = false;
                for (auto& eq : c.constraints)
                    if (eq.to_poly(n).eval(pt) != 0) off = true;
            }
            if (off) run_sample(c, pt, "off-variety");
        }
    }

    // Off-variety probes for anchors without any reported case (empty
    // classifications still have sectors to verify).
    for (size_t anchor = 0; anchor < cls.systems.size(); ++anchor) {
        bool has_case = false;
        for (auto& c : cls.cases)
            if (c.anchor_index == static_cast<int>(anchor)) has_case = true;
        if (has_case) continue;
        for (int s = 0; s < std::max(1, samples_per_case / 2); ++s) {
            std::vector<Rational> pt;
            for (int i = 0; i < n; ++i)
                pt.push_back(Rational(static_cast<int>(rng() % 195) - 97,
                                       1 + static_cast<int>(rng() % 97)));
            const AnchorSystem& sys = *cls.systems[anchor];
            int predicted = sys.predicted_dimension_at(pt);
            auto brute =
                brute_force_singular(cls.a, cls.b, cls.degree, pt, cls.algebra, false,
                                     static_cast<int>(anchor));
            int actual = brute.sectors.empty() ? 0 : brute.sectors[0].dimension;
            ++rep.samples;
            if (predicted != actual) {
                ++rep.mismatches;
                rep.mismatch_details.push_back("empty-anchor sample mismatch");
            }
        }
    }
    return rep;
}

}  // namespace singvect::oracle

#endif
