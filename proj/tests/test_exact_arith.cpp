#include <catch2/catch_amalgamated.hpp>

#include "singvect/affine.hpp"
#include "singvect/factorize.hpp"
#include "singvect/parametric_solve.hpp"

#include <random>

using namespace singvect;

namespace {

ParamPoly var(int np, int i) { return ParamPoly::variable(np, i); }
ParamPoly cst(int np, const Rational& c) { return ParamPoly::constant(np, c); }

ParamPoly random_poly(std::mt19937& rng, int np, int maxdeg) {
    ParamPoly p(np);
    int nterms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < nterms; ++t) {
        ParamPoly term = cst(np, Rational(static_cast<int>(rng() % 9) - 4));
        int deg = static_cast<int>(rng() % (maxdeg + 1));
        for (int d = 0; d < deg; ++d) term *= var(np, static_cast<int>(rng() % np));
        p += term;
    }
    return p;
}

// Plain numeric Gaussian elimination, used as the independent check on the
// parametric solver: returns the kernel dimension of M (rows x cols).
int numeric_kernel_dim(std::vector<std::vector<Rational>> m, int ncols) {
    int rank = 0;
    int nrows = static_cast<int>(m.size());
    for (int c = 0; c < ncols && rank < nrows; ++c) {
        int sel = -1;
        for (int r = rank; r < nrows; ++r)
            if (m[r][c] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[rank], m[sel]);
        for (int r = 0; r < nrows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (int c2 = 0; c2 < ncols; ++c2) m[r][c2] -= f * m[rank][c2];
        }
        ++rank;
    }
    return ncols - rank;
}

bool leaf_matches_point(const CaseLeaf& leaf, int np, std::span<const Rational> pt) {
    if (leaf.inconsistent) return false;
    for (auto& eq : leaf.assume.equalities(np))
        if (eq.to_poly(np).eval(pt) != 0) return false;
    for (auto& nz : leaf.assume.nonzeros) {
        ParamPoly p = nz;
        if (p.eval(pt) == 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(to_string(Rational(3, 6)) == "1/2");
    CHECK(parse_rational("-7/3").value() == Rational(-7, 3));
    CHECK(parse_rational("5").value() == 5);
    CHECK(!parse_rational("1/0").has_value());
    CHECK(rational_gcd(Rational(4, 3), Rational(2, 9)) == Rational(2, 9));
    CHECK(rational_sqrt(Rational(9, 4)).value() == Rational(3, 2));
    CHECK(!rational_sqrt(Rational(2)).has_value());
}

TEST_CASE("poly arithmetic identities") {
    const int np = 2;
    ParamPoly l = var(np, 0), m = var(np, 1);

    // (l+1) + (-l) = 1
    CHECK(poly_arith(PolyOp::Add, l + cst(np, 1), -l) == cst(np, 1));
    // (l+2m-1)*1 = l+2m-1
    ParamPoly p = l + m * Rational(2) - cst(np, 1);
    CHECK(poly_arith(PolyOp::Mul, p, cst(np, 1)) == p);
    // l*m + (-(l*m)) = 0
    CHECK((poly_arith(PolyOp::Mul, l, m) + poly_arith(PolyOp::Neg, l * m, l)).is_zero());

    ParamPoly other(3);
    CHECK_THROWS_AS(poly_arith(PolyOp::Add, l, other), std::invalid_argument);
}

TEST_CASE("poly ring axioms on random inputs") {
    std::mt19937 rng(20240811);
    const int np = 3;
    for (int trial = 0; trial < 60; ++trial) {
        ParamPoly p = random_poly(rng, np, 2);
        ParamPoly q = random_poly(rng, np, 2);
        ParamPoly r = random_poly(rng, np, 2);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("poly eval, substitute, divide") {
    const int np = 2;
    ParamPoly l = var(np, 0), m = var(np, 1);
    ParamPoly p = l * l - m * m;
    std::vector<Rational> pt{Rational(3), Rational(2)};
    CHECK(p.eval(pt) == 5);
    CHECK(p.substitute(0, m) == ParamPoly(np));
    auto q = p.divide_exact(l - m);
    REQUIRE(q.has_value());
    CHECK(*q == l + m);
    CHECK(!(l * l + cst(np, 1)).divide_exact(l - m).has_value());
    CHECK(p.to_string() == "l1*l1 - l2*l2");
}

TEST_CASE("factorization into affine pieces") {
    const int np = 3;
    ParamPoly l1 = var(np, 0), l2 = var(np, 1);
    FactorPool pool = FactorPool::structured(np, 3);

    auto f = factor_into_affines((l1 - l2) * (l1 + l2), pool);
    REQUIRE(f.has_value());
    CHECK(f->factors.size() == 2);

    // l1*(3*l1 + 3*l2 - 2): monomial times affine
    ParamPoly p = l1 * (l1 * Rational(3) + l2 * Rational(3) - cst(np, 2));
    f = factor_into_affines(p, pool);
    REQUIRE(f.has_value());
    CHECK(f->factors.size() == 2);

    // Shapovalov-style cubic m(m-1)(m-2), m = l1 - l2
    ParamPoly m = l1 - l2;
    ParamPoly cubic = m * (m - cst(np, 1)) * (m - cst(np, 2));
    f = factor_into_affines(cubic, pool);
    REQUIRE(f.has_value());
    CHECK(f->factors.size() == 3);

    // perfect square via discriminant
    f = factor_into_affines(l1 * l1 - Rational(2) * l1 * l2 + l2 * l2, pool);
    REQUIRE(f.has_value());
    CHECK(f->factors.size() == 2);
    CHECK(f->factors[0] == f->factors[1]);

    // irreducible quadratic resists
    CHECK(!factor_into_affines(l1 * l1 + cst(np, 1), pool).has_value());

    // exactness: unit * product == input
    ParamPoly messy = (l1 + l2 - cst(np, 1)) * (l1 - l2 + cst(np, 2)) * Rational(-6, 5);
    f = factor_into_affines(messy, pool);
    REQUIRE(f.has_value());
    ParamPoly prod = cst(np, f->unit);
    for (auto& fac : f->factors) prod *= fac;
    CHECK(prod == messy);
}

TEST_CASE("constraint_simplify examples") {
    const int np = 2;
    auto eq = [&](const ParamPoly& p) {
        auto c = AffineConstraint::from_poly(p, ConstraintKind::Equality);
        REQUIRE(c.has_value());
        return *c;
    };
    ParamPoly l = var(np, 0), m = var(np, 1);

    // duplicates: {l = m, m = l} -> single row l - m = 0
    auto s = constraint_simplify({eq(l - m), eq(m - l)});
    CHECK(!s.empty_variety);
    REQUIRE(s.constraints.size() == 1);
    CHECK(s.constraints[0].to_poly(np) == l - m);

    // {l + m - 1 = 0, l - m = 0} -> l = 1/2, m = 1/2
    s = constraint_simplify({eq(l + m - cst(np, 1)), eq(l - m)});
    REQUIRE(s.constraints.size() == 2);
    CHECK(s.constraints[0].to_poly(np) == l - cst(np, Rational(1, 2)));
    CHECK(s.constraints[1].to_poly(np) == m - cst(np, Rational(1, 2)));

    // {l = 0, l = 1} -> empty variety
    s = constraint_simplify({eq(l), eq(l - cst(np, 1))});
    CHECK(s.empty_variety);
}

TEST_CASE("feasibility probe") {
    const int np = 2;
    ParamPoly l = var(np, 0);
    // {2l-1 >= 0, -2l >= 0} infeasible; {l >= 0} feasible
    CHECK(!nonneg_system_feasible({l * Rational(2) - cst(np, 1), l * Rational(-2)}));
    CHECK(nonneg_system_feasible({l}));
    CHECK(!nonneg_system_feasible({cst(np, -1)}));
    CHECK(nonneg_system_feasible({}));
}

TEST_CASE("parametric solve: pinned point system") {
    // rows (l+2m-1)x = 0, (3l+3m-2)x = 0: the only leaf with a nonzero
    // solution pins l = m = 1/3.
    const int np = 2;
    ParamPoly l = var(np, 0), m = var(np, 1);
    SolveOptions opts;
    opts.pool = FactorPool::structured(np, 3);
    auto tree = parametric_row_reduce(
        {{l + m * Rational(2) - cst(np, 1)}, {l * Rational(3) + m * Rational(3) - cst(np, 2)}},
        {"x"}, np, opts);

    int with_solution = 0;
    for (auto* leaf : tree.leaves()) {
        if (leaf->inconsistent || leaf->nullity() == 0) continue;
        ++with_solution;
        auto eqs = leaf->assume.equalities(np);
        REQUIRE(eqs.size() == 2);
        CHECK(eqs[0].to_poly(np) == l - cst(np, Rational(1, 3)));
        CHECK(eqs[1].to_poly(np) == m - cst(np, Rational(1, 3)));
    }
    CHECK(with_solution == 1);
}

TEST_CASE("parametric solve: identity system has one leaf") {
    const int np = 1;
    auto tree = parametric_row_reduce({{cst(np, 1), cst(np, 0)}, {cst(np, 0), cst(np, 1)}},
                                      {"x", "y"}, np, SolveOptions{});
    auto leaves = tree.leaves();
    REQUIRE(leaves.size() == 1);
    CHECK(leaves[0]->nullity() == 0);
}

TEST_CASE("parametric solve: l*x = 0 splits") {
    const int np = 1;
    ParamPoly l = var(np, 0);
    SolveOptions opts;
    opts.pool = FactorPool::structured(np, 2);
    auto tree = parametric_row_reduce({{l}}, {"x"}, np, opts);
    auto leaves = tree.leaves();
    REQUIRE(leaves.size() == 2);

    // Cross-check both branches against plain numeric elimination.
    for (Rational v : {Rational(1), Rational(0)}) {
        std::vector<Rational> pt{v};
        const CaseLeaf* leaf = tree.descend(pt);
        REQUIRE(leaf != nullptr);
        CHECK(leaf->nullity() == numeric_kernel_dim({{v}}, 1));
    }
}

TEST_CASE("parametric solve agrees with numeric elimination on random systems") {
    std::mt19937 rng(987654);
    const int np = 2;
    FactorPool pool = FactorPool::structured(np, 3);

    int instantiations = 0;
    for (int sys = 0; sys < 200 && instantiations < 200; ++sys) {
        int nrows = 2 + static_cast<int>(rng() % 3);
        int ncols = 2 + static_cast<int>(rng() % 2);
        // Sparse rows with mostly constant entries, like the systems the
        // classifier actually produces.
        std::vector<std::vector<ParamPoly>> rows(nrows, std::vector<ParamPoly>(ncols, ParamPoly(np)));
        for (auto& row : rows)
            for (auto& e : row) {
                unsigned pick = rng() % 10;
                if (pick < 5)
                    e = cst(np, Rational(static_cast<int>(rng() % 7) - 3));
                else if (pick < 8)
                    e = random_poly(rng, np, 1);
                else
                    e = ParamPoly(np);
            }
        std::vector<std::string> names;
        for (int c = 0; c < ncols; ++c) names.push_back("c" + std::to_string(c));

        SolveOptions opts;
        opts.pool = pool;
        CaseTree tree;
        try {
            tree = parametric_row_reduce(rows, names, np, opts);
        } catch (const NonlinearBranchError&) {
            continue;  // random degree growth past affine factors: allowed error path
        }

        for (int s = 0; s < 8 && instantiations < 200; ++s, ++instantiations) {
            std::vector<Rational> pt;
            for (int i = 0; i < np; ++i)
                pt.push_back(Rational(static_cast<int>(rng() % 13) - 6,
                                       1 + static_cast<int>(rng() % 5)));
            const CaseLeaf* leaf = tree.descend(pt);
            REQUIRE(leaf != nullptr);
            CHECK(!leaf->inconsistent);

            std::vector<std::vector<Rational>> m(nrows, std::vector<Rational>(ncols));
            for (int r = 0; r < nrows; ++r)
                for (int c = 0; c < ncols; ++c) m[r][c] = rows[r][c].eval(pt);
            CHECK(leaf->nullity() == numeric_kernel_dim(m, ncols));

            // kernel vectors really solve the instantiated system
            for (auto& kv : leaf->kernel) {
                for (int r = 0; r < nrows; ++r) {
                    Rational acc = 0;
                    for (int c = 0; c < ncols; ++c) acc += m[r][c] * kv[c].eval(pt);
                    CHECK(acc == 0);
                }
            }

            // exactly one leaf's assumptions hold at the point
            int holds = 0;
            for (auto* lf : tree.leaves())
                if (leaf_matches_point(*lf, np, pt)) ++holds;
            CHECK(holds == 1);
        }
    }
    CHECK(instantiations == 200);
}

TEST_CASE("nonlinear pivot reports an error instead of dropping") {
    const int np = 2;
    ParamPoly l = var(np, 0), m = var(np, 1);
    SolveOptions opts;  // empty pool: nothing to factor with
    CHECK_THROWS_AS(
        parametric_row_reduce({{l * l * l + m * m * m + cst(np, 1)}}, {"x"}, np, opts),
        NonlinearBranchError);
}
