#include <catch2/catch_amalgamated.hpp>

#include "singvect/algebra.hpp"
#include "singvect/induced.hpp"

#include <random>

using namespace singvect;

namespace {

InducedElement basis_elem(const GlContext& ctx, const DMonomial& d, const Word& w) {
    InducedElement f;
    f.degree = d.degree();
    f.add(d, w, ParamPoly::constant(ctx.nparams(), 1));
    return f;
}

DMonomial dmon(SuperDims dims, std::vector<unsigned> xexp, uint32_t mask) {
    DMonomial d;
    d.xexp = std::move(xexp);
    if (d.xexp.empty()) d.xexp.assign(dims.a, 0);
    d.ximask = mask;
    return d;
}

}  // namespace

TEST_CASE("case order on d-monomials") {
    SuperDims d03{0, 3};
    auto ms = dmonomials_of_degree(d03, 1);
    REQUIRE(ms.size() == 3);
    CHECK(ms[0].ximask == 0b100);  // d3 first: highest weight
    CHECK(ms[2].ximask == 0b001);

    SuperDims d20{2, 0};
    auto m2 = dmonomials_of_degree(d20, 2);
    REQUIRE(m2.size() == 3);
    CHECK(m2[0].xexp == std::vector<unsigned>{0, 2});  // d2^2, then d1 d2, then d1^2
    CHECK(m2[1].xexp == std::vector<unsigned>{1, 1});
    CHECK(m2[2].xexp == std::vector<unsigned>{2, 0});

    SuperDims d11{1, 1};
    auto m3 = dmonomials_of_degree(d11, 3);
    REQUIRE(m3.size() == 2);
    CHECK(m3[0].xexp == std::vector<unsigned>{2});  // d^2 delta before d^3
    CHECK(m3[0].ximask == 1);
    CHECK(m3[1].xexp == std::vector<unsigned>{3});
}

TEST_CASE("g_{-1} multiplies on the left") {
    GlContext ctx(0, 2, 6);
    SuperDims dims{0, 2};
    auto f = basis_elem(ctx, dmon(dims, {}, 0b10), {});
    auto r = act(ctx, SuperField::partial(dims, 0), f);
    REQUIRE(r.terms.size() == 1);
    CHECK(r.terms.begin()->first.ximask == 0b11);
    CHECK(v0_coefficient(ctx, r.terms.begin()->second) ==
          ParamPoly::constant(2, 1));
    CHECK(r.degree == 2);

    // odd square: d1 * (d1 (x) v0) = 0
    auto f1 = basis_elem(ctx, dmon(dims, {}, 0b01), {});
    CHECK(act(ctx, SuperField::partial(dims, 0), f1).is_zero());
}

TEST_CASE("raising action on I(V): [X1+, d1] = -d2") {
    GlContext ctx(0, 3, 6);
    SuperDims dims{0, 3};
    auto f = basis_elem(ctx, dmon(dims, {}, 0b001), {});
    auto x1p = SuperField::coordinate_field(dims, 0, 1);
    auto r = act(ctx, x1p, f);
    REQUIRE(r.terms.size() == 1);
    CHECK(r.terms.begin()->first.ximask == 0b010);
    auto c = v0_coefficient(ctx, r.terms.begin()->second);
    CHECK(c == ParamPoly::constant(3, -1));
}

TEST_CASE("degree-1 generator across two odd factors: s2 on d1 d2 (x) v0") {
    // s2 (d1 d2 (x) v0) = d2 (x) X- v0 + d1 (x) (H1 - 1) v0
    GlContext ctx(0, 2, 6);
    SuperDims dims{0, 2};
    auto basis = standard_basis(0, 2);
    auto f = basis_elem(ctx, dmon(dims, {}, 0b11), {});
    auto r = act(ctx, basis.g1[1], f);  // s2 = xi1 xi2 d1
    REQUIRE(r.terms.size() == 2);

    DMonomial d1m = dmon(dims, {}, 0b01), d2m = dmon(dims, {}, 0b10);
    const ModuleElement& at_d1 = r.terms.at(d1m);
    REQUIRE(at_d1.terms.size() == 1);
    CHECK(at_d1.terms.begin()->first.empty());
    CHECK(at_d1.terms.begin()->second == ctx.lambda(0) - ParamPoly::constant(2, 1));

    const ModuleElement& at_d2 = r.terms.at(d2m);
    REQUIRE(at_d2.terms.size() == 1);
    CHECK(at_d2.terms.begin()->first == Word{0});  // X- v0
    CHECK(at_d2.terms.begin()->second == ParamPoly::constant(2, 1));
}

TEST_CASE("(1|1) divergence-free generator: u1 on f1") {
    // u1 (d (x) v + delta (x) w) = 1 (x) (-2(H1+H2) v - 2 X+ w)
    GlContext ctx(1, 1, 6);
    SuperDims dims{1, 1};
    auto basis = standard_basis(1, 1);
    const SuperField& u1 = basis.g1_lowest[1];

    // v = v0, w = 0
    auto fv = basis_elem(ctx, dmon(dims, {1}, 0), {});
    auto rv = act(ctx, u1, fv);
    REQUIRE(rv.terms.size() == 1);
    CHECK(rv.terms.begin()->first.degree() == 0);
    CHECK(v0_coefficient(ctx, rv.terms.begin()->second) ==
          Rational(-2) * (ctx.lambda(0) + ctx.lambda(1)));

    // v = 0, w = X- v0: -2 X+ X- v0 = -2 (l1 + l2) v0
    auto fw = basis_elem(ctx, dmon(dims, {0}, 0b1), {ctx.root_index(1, 0)});
    auto rw = act(ctx, u1, fw);
    REQUIRE(rw.terms.size() == 1);
    CHECK(v0_coefficient(ctx, rw.terms.begin()->second) ==
          Rational(-2) * (ctx.lambda(0) + ctx.lambda(1)));
}

TEST_CASE("weight bookkeeping") {
    GlContext c2(0, 2, 6);
    SuperDims d2{0, 2};
    auto f1 = basis_elem(c2, dmon(d2, {}, 0b10), {});
    auto w = weight_of(c2, f1);
    CHECK(w[0] == c2.lambda(0));
    CHECK(w[1] == c2.lambda(1) - ParamPoly::constant(2, 1));

    auto unit = basis_elem(c2, dmon(d2, {}, 0), {});
    auto wl = weight_of(c2, unit);
    CHECK(wl[0] == c2.lambda(0));
    CHECK(wl[1] == c2.lambda(1));

    GlContext c3(0, 3, 6);
    SuperDims d3{0, 3};
    auto f3 = basis_elem(c3, dmon(d3, {}, 0b111), {});
    auto w3 = weight_of(c3, f3);
    std::vector<Rational> ones{1, 1, 1};
    for (int i = 0; i < 3; ++i) CHECK(w3[i].eval(ones) == 0);
}

TEST_CASE("module axiom on I(V)") {
    std::mt19937 rng(777);
    for (auto [a, b] : {std::pair{0, 3}, {1, 1}, {2, 0}}) {
        GlContext ctx(a, b, 10);
        SuperDims dims{a, b};
        auto basis = standard_basis(a, b);
        std::vector<SuperField> gens = basis.gm1;
        for (auto& g : basis.g0) gens.push_back(g);
        for (auto& g : basis.g1) gens.push_back(g);

        auto mons = dmonomials_of_degree(dims, 2);
        for (int trial = 0; trial < 25; ++trial) {
            const SuperField& X = gens[rng() % gens.size()];
            const SuperField& Y = gens[rng() % gens.size()];
            InducedElement f;
            f.degree = 2;
            const DMonomial& d = mons[rng() % mons.size()];
            Word w;
            if (rng() % 2) w.push_back(static_cast<int>(rng() % ctx.num_roots()));
            f.add(d, w, ParamPoly::constant(ctx.nparams(), 1 + static_cast<int>(rng() % 3)));

            InducedElement xy = act(ctx, X, act(ctx, Y, f));
            InducedElement yx = act(ctx, Y, act(ctx, X, f));
            int sign = (X.parity() * Y.parity()) % 2 ? -1 : 1;
            InducedElement lhs = xy;
            for (auto& [dm, m] : yx.terms)
                lhs.add_scaled(dm, m, ParamPoly::constant(ctx.nparams(), -sign));
            InducedElement rhs = act(ctx, supercommutator(X, Y), f);
            for (auto& [dm, m] : rhs.terms)
                lhs.add_scaled(dm, m, ParamPoly::constant(ctx.nparams(), -1));
            INFO(X.to_string() << " ; " << Y.to_string() << " ; " << d.to_string());
            CHECK(lhs.is_zero());
        }
    }
}

TEST_CASE("component degree bookkeeping") {
    GlContext ctx(1, 1, 8);
    SuperDims dims{1, 1};
    auto basis = standard_basis(1, 1);
    auto f = basis_elem(ctx, dmon(dims, {2}, 0b1), {});  // degree 3
    for (const SuperField* X :
         {&basis.gm1[0], &basis.g0[1], &basis.g1_lowest[0], &basis.g1_lowest[1]}) {
        auto r = act(ctx, *X, f);
        int expect = f.degree - X->degree();
        CHECK(r.degree == expect);
        for (auto& [d, m] : r.terms) CHECK(d.degree() == expect);
    }
}
