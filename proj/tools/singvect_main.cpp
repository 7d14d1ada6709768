#include "singvect/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

using namespace singvect;

namespace {

constexpr const char* kGoldenEnv = "SINGVECT_GOLDEN_DIR";

#ifndef SINGVECT_DEFAULT_GOLDEN_DIR
#define SINGVECT_DEFAULT_GOLDEN_DIR "goldens"
#endif

Algebra parse_algebra(const std::string& s) {
    if (s == "pgl") return Algebra::Pgl;
    if (s == "vect") return Algebra::Vect;
    throw CLI::ValidationError("--algebra", "must be pgl or vect");
}

std::optional<std::vector<Rational>> parse_weight(const std::string& s, int n) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto q = parse_rational(item);
        if (!q) return std::nullopt;
        out.push_back(*q);
    }
    if (static_cast<int>(out.size()) != n) return std::nullopt;
    return out;
}

int run_classify(const RunConfig& cfg, const std::string& outfile) {
    int last = cfg.degree_max > 0 ? cfg.degree_max : cfg.degree;
    nlohmann::ordered_json runs = nlohmann::ordered_json::array();
    std::string markdown;
    for (int k = cfg.degree; k <= last; ++k) {
        Classification cls = classify(cfg.a, cfg.b, k, cfg.algebra, cfg.depth, cfg.include_g2);
        std::optional<oracle::CrosscheckReport> cross;
        if (cfg.run_crosscheck) cross = oracle::crosscheck(cls, cfg.samples, cfg.seed);
        if (cfg.format == "markdown")
            markdown += classification_markdown(cls, cross ? &*cross : nullptr) + "\n";
        else
            runs.push_back(classification_json(cls, cross ? &*cross : nullptr, cfg.seed));
    }
    std::string text;
    if (cfg.format == "markdown")
        text = markdown;
    else
        text = (cfg.degree_max > 0 ? nlohmann::ordered_json{{"runs", runs}}.dump(2)
                                   : runs[0].dump(2)) +
               "\n";
    if (outfile.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(outfile);
        out << text;
    }
    return 0;
}

int run_selftest(bool quick, std::string golden_dir) {
    int checked = 0;
    auto structure = [&](int a, int b, int bound) {
        auto rep = verify_structure(a, b, bound);
        std::cout << "structure (" << a << "|" << b << ") up to degree " << bound << ": "
                  << (rep.ok ? "ok" : ("FAIL " + rep.detail)) << " (" << rep.jacobi_checked
                  << " Jacobi triples)\n";
        return rep.ok;
    };
    bool ok = true;
    ok &= structure(0, 2, 1);
    ok &= structure(0, 3, 1);
    ok &= structure(2, 0, 1);
    ok &= structure(1, 1, 1);
    ok &= structure(1, 0, 2);
    if (!ok) return 4;
    if (quick) return 0;

    // module-axiom spot checks at fixed seeds
    {
        std::mt19937 rng(1234);
        for (auto [a, b] : {std::pair{0, 3}, {1, 1}}) {
            GlContext ctx(a, b, 8);
            auto basis = standard_basis(a, b);
            SuperDims dims{a, b};
            auto mons = dmonomials_of_degree(dims, 2);
            std::vector<SuperField> gens = basis.gm1;
            for (auto& g : basis.g0) gens.push_back(g);
            for (auto& g : basis.g1) gens.push_back(g);
            for (int trial = 0; trial < 20; ++trial) {
                const SuperField& X = gens[rng() % gens.size()];
                const SuperField& Y = gens[rng() % gens.size()];
                InducedElement f;
                f.degree = 2;
                f.add(mons[rng() % mons.size()], {}, ParamPoly::constant(ctx.nparams(), 1));
                InducedElement xy = act(ctx, X, act(ctx, Y, f));
                InducedElement yx = act(ctx, Y, act(ctx, X, f));
                int sign = (X.parity() * Y.parity()) % 2 ? -1 : 1;
                InducedElement lhs = xy;
                for (auto& [dm, m] : yx.terms)
                    lhs.add_scaled(dm, m, ParamPoly::constant(ctx.nparams(), -sign));
                InducedElement rhs = act(ctx, supercommutator(X, Y), f);
                for (auto& [dm, m] : rhs.terms)
                    lhs.add_scaled(dm, m, ParamPoly::constant(ctx.nparams(), -1));
                if (!lhs.is_zero()) {
                    std::cout << "module axiom FAIL on (" << a << "|" << b << ")\n";
                    return 4;
                }
                ++checked;
            }
        }
        std::cout << "module axiom: ok (" << checked << " random pairs)\n";
    }

    // golden tables
    if (golden_dir.empty()) {
        if (const char* env = std::getenv(kGoldenEnv)) golden_dir = env;
    }
    if (golden_dir.empty()) golden_dir = SINGVECT_DEFAULT_GOLDEN_DIR;
    namespace fs = std::filesystem;
    if (!fs::is_directory(golden_dir)) {
        std::cout << "golden directory not found: " << golden_dir << "\n";
        return 4;
    }
    std::vector<fs::path> files;
    for (auto& e : fs::directory_iterator(golden_dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    int compared = 0;
    for (auto& path : files) {
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string expected = buf.str();
        nlohmann::json parsed = nlohmann::json::parse(expected);
        auto& input = parsed.at("input");
        Classification cls =
            classify(input.at("a").get<int>(), input.at("b").get<int>(),
                     input.at("degree").get<int>(),
                     input.at("algebra").get<std::string>() == "vect" ? Algebra::Vect
                                                                      : Algebra::Pgl);
        std::string actual = classification_json(cls, nullptr, input.at("seed").get<unsigned>()).dump(2) + "\n";
        if (actual != expected) {
            std::cout << "golden mismatch: " << path.filename().string() << "\n";
            std::istringstream ea(expected), aa(actual);
            std::string le, la;
            int line = 0;
            while (std::getline(ea, le) && std::getline(aa, la)) {
                ++line;
                if (le != la) {
                    std::cout << "  line " << line << ":\n  expected: " << le
                              << "\n  actual:   " << la << "\n";
                    break;
                }
            }
            return 4;
        }
        ++compared;
    }
    std::cout << "golden tables: " << compared << " compared, all byte-identical\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"singular-vector classifier for pgl(a+1|b) inside vect(a|b)"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<int> sdim;
    std::string algebra = "pgl", outfile, weight_str, golden_dir;
    bool quick = false, densities_only = false;

    auto* c = app.add_subcommand("classify", "classify degree-k singular vectors");
    c->add_option("--sdim", sdim, "superdimension: a b")->expected(2)->required();
    c->add_option("--degree", cfg.degree, "degree k of the search")->required();
    c->add_option("--degree-max", cfg.degree_max, "run degrees k..K");
    c->add_option("--algebra", algebra, "pgl or vect");
    c->add_option("--depth", cfg.depth, "lowering-word depth bound (default: automatic)");
    c->add_option("--format", cfg.format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    c->add_option("--seed", cfg.seed, "sampling seed");
    c->add_option("--samples", cfg.samples, "crosscheck samples per case");
    c->add_flag("--include-g2", cfg.include_g2, "force g2 lowest-weight generators");
    c->add_flag("--finite-branch", cfg.finite_branch, "annotate for finite-dimensional fibers");
    c->add_flag("--crosscheck", cfg.run_crosscheck, "run the numeric oracle crosscheck");
    c->add_option("--out", outfile, "write the report to a file");

    auto* o = app.add_subcommand("oracle", "brute-force singular space at a numeric weight");
    o->add_option("--sdim", sdim, "superdimension: a b")->expected(2)->required();
    o->add_option("--degree", cfg.degree, "degree k")->required();
    o->add_option("--weight", weight_str, "comma separated rationals p/q")->required();
    o->add_option("--algebra", algebra, "pgl or vect");
    o->add_flag("--finite-branch", cfg.finite_branch,
                "require a dominant integral weight (finite-dimensional fiber)");
    o->add_flag("--densities-only", densities_only,
                "count only solutions spanning a one-dimensional g0-module");

    auto* s = app.add_subcommand("selftest", "structure checks, property suite, golden tables");
    s->add_flag("--quick", quick, "structure checks only");
    s->add_option("--golden-dir", golden_dir, "golden table directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c->parsed()) {
            cfg.a = sdim[0];
            cfg.b = sdim[1];
            cfg.algebra = parse_algebra(algebra);
            if (!cfg.valid()) {
                std::cerr << "invalid configuration: need a,b >= 0, a+b >= 1, degree >= 1\n";
                return 1;
            }
            return run_classify(cfg, outfile);
        }
        if (o->parsed()) {
            cfg.a = sdim[0];
            cfg.b = sdim[1];
            cfg.algebra = parse_algebra(algebra);
            if (!cfg.valid()) {
                std::cerr << "invalid configuration\n";
                return 1;
            }
            auto weight = parse_weight(weight_str, cfg.a + cfg.b);
            if (!weight) {
                std::cerr << "malformed weight: need " << cfg.a + cfg.b
                          << " comma-separated rationals\n";
                return 1;
            }
            auto r = oracle::brute_force_singular(cfg.a, cfg.b, cfg.degree, *weight, cfg.algebra,
                                                  cfg.finite_branch, -1, densities_only);
            std::cout << oracle_json(cfg.a, cfg.b, cfg.degree, *weight, cfg.algebra, r).dump(2)
                      << "\n";
            return 0;
        }
        return run_selftest(quick, golden_dir);
    } catch (const NonlinearBranchError& e) {
        std::cerr << "nonlinear branch: " << e.what() << "\n";
        return 2;
    } catch (const DepthOverflowError& e) {
        std::cerr << "depth overflow: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    }
}
