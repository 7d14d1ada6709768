#ifndef SINGVECT_REPORT_HPP
#define SINGVECT_REPORT_HPP

#include "singvect/classify.hpp"
#include "singvect/oracle.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace singvect {

struct RunConfig {
    int a = 0, b = 0;
    int degree = 1;
    int degree_max = -1;  // inclusive range end; -1 = single degree
    Algebra algebra = Algebra::Pgl;
    int depth = -1;  // -1 = automatic
    std::string format = "json";
    unsigned seed = 20240811;
    int samples = 5;
    bool include_g2 = false;
    bool finite_branch = false;
    bool run_crosscheck = false;

    bool valid() const { return a >= 0 && b >= 0 && a + b >= 1 && degree >= 1; }
};

namespace report_detail {

inline std::vector<std::string> param_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("l" + std::to_string(i + 1));
    return names;
}

inline nlohmann::ordered_json constraint_json(const AffineConstraint& c, int n) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json lin = nlohmann::ordered_json::object();
    for (auto& [i, v] : c.linear) lin["l" + std::to_string(i + 1)] = to_string(v);
    j["linear"] = lin;
    j["constant"] = to_string(c.constant);
    switch (c.kind) {
        case ConstraintKind::Equality: j["kind"] = "equality"; break;
        case ConstraintKind::Integrality: j["kind"] = "integrality"; break;
        case ConstraintKind::NonIntegrality: j["kind"] = "non-integrality"; break;
    }
    return j;
}

}  // namespace report_detail

inline nlohmann::ordered_json classification_json(const Classification& cls,
                                                  const oracle::CrosscheckReport* cross = nullptr,
                                                  unsigned seed = 0) {
    using nlohmann::ordered_json;
    const int n = cls.a + cls.b;
    ordered_json j;
    j["input"] = {{"a", cls.a},        {"b", cls.b},      {"degree", cls.degree},
                  {"algebra", to_string(cls.algebra)},    {"depth", cls.depth},
                  {"seed", seed}};

    ordered_json cases = ordered_json::array();
    for (const auto& c : cls.cases) {
        ordered_json cj;
        cj["anchor"] = c.anchor;
        ordered_json van = ordered_json::object();
        for (auto& [m, z] : c.vanishing) van[m] = z;
        cj["vanishing"] = van;
        ordered_json cons = ordered_json::array();
        for (auto& k : c.constraints) cons.push_back(report_detail::constraint_json(k, n));
        cj["constraints"] = cons;
        ordered_json nz = ordered_json::array();
        for (auto& p : c.assumed_nonzero) nz.push_back(p.to_string());
        cj["assumed_nonzero"] = nz;
        ordered_json wv = ordered_json::array(), wf = ordered_json::array();
        for (auto& w : c.weight_v) wv.push_back(w.to_string());
        for (auto& w : c.weight_f) wf.push_back(w.to_string());
        cj["weight_v"] = wv;
        cj["weight_f"] = wf;
        ordered_json sol = ordered_json::object();
        for (auto& [u, e] : c.solution) sol[u] = e;
        cj["solution"] = sol;
        ordered_json legend = ordered_json::array();
        for (auto& [name, what] : c.unknown_legend) {
            auto sep = what.find(" ; ");
            legend.push_back({{"name", name},
                              {"monomial", what.substr(0, sep)},
                              {"word", what.substr(sep + 3)}});
        }
        cj["unknowns"] = legend;
        cj["family_dimension"] = c.family_dim;
        ordered_json fp = ordered_json::array();
        for (int p : c.free_params) fp.push_back("l" + std::to_string(p + 1));
        cj["free_parameters"] = fp;
        cj["codimension"] = c.codim;
        ordered_json fin;
        fin["condition"] = c.finiteness_condition;
        ordered_json dom = ordered_json::array();
        for (auto& f : c.dominance) dom.push_back(f.to_string() + " in Z>=0");
        fin["dominance"] = dom;
        fin["empty_if_finite"] = c.finite_branch_empty;
        if (!c.finiteness_note.empty()) fin["note"] = c.finiteness_note;
        cj["finiteness"] = fin;
        if (c.interpretation.empty())
            cj["interpretation"] = nullptr;
        else
            cj["interpretation"] = c.interpretation;
        cases.push_back(cj);
    }
    j["cases"] = cases;

    ordered_json cont;
    cont["flag"] = cls.continuum.flag;
    cont["min_codimension"] = cls.continuum.min_codim;
    if (cls.continuum.min_codim >= 0) {
        cont["anchor"] = cls.continuum.case_anchor;
        ordered_json cc = ordered_json::array();
        for (auto& k : cls.continuum.constraints)
            cc.push_back(report_detail::constraint_json(k, n));
        cont["constraints"] = cc;
        ordered_json fp = ordered_json::array();
        for (int p : cls.continuum.free_params) fp.push_back("l" + std::to_string(p + 1));
        cont["free_parameters"] = fp;
    }
    j["continuum"] = cont;

    if (cross) {
        j["crosscheck"] = {{"samples", cross->samples},
                           {"mismatches", cross->mismatches},
                           {"details", cross->mismatch_details}};
    }
    return j;
}

inline std::string classification_markdown(const Classification& cls,
                                           const oracle::CrosscheckReport* cross = nullptr) {
    const int n = cls.a + cls.b;
    auto names = report_detail::param_names(n);
    std::ostringstream md;
    md << "# Singular vectors: sdim (" << cls.a << "|" << cls.b << "), degree " << cls.degree
       << ", algebra " << to_string(cls.algebra) << "\n\n";
    if (cls.cases.empty()) md << "No cases: the classification is empty.\n";
    int idx = 1;
    for (const auto& c : cls.cases) {
        md << "## Case " << idx++ << " (anchor " << c.anchor << ")\n\n";
        auto tuple = [&](const std::vector<ParamPoly>& ws) {
            std::string s = "(";
            for (size_t i = 0; i < ws.size(); ++i) s += (i ? ", " : "") + ws[i].to_string(names);
            return s + ")";
        };
        md << "- wht(v) = " << tuple(c.weight_v) << ", wht(f) = " << tuple(c.weight_f) << "\n";
        md << "- constraints:";
        if (c.constraints.empty()) md << " none";
        for (auto& k : c.constraints) md << " [" << k.to_string(names) << "]";
        md << "\n";
        if (!c.assumed_nonzero.empty()) {
            md << "- generic for:";
            for (auto& p : c.assumed_nonzero) md << " " << p.to_string(names) << " != 0;";
            md << "\n";
        }
        md << "- vanishing pattern:";
        for (auto& [m, z] : c.vanishing) md << " " << m << "=" << z;
        md << "\n";
        md << "- family dimension " << c.family_dim << ", codimension " << c.codim << "\n";
        md << "- finite-dimensional fiber: " << c.finiteness_condition;
        if (!c.finiteness_note.empty()) md << " (note: " << c.finiteness_note << ")";
        md << "\n";
        if (!c.solution.empty()) {
            md << "- solution:";
            for (auto& [u, e] : c.solution) md << " " << u << " = " << e << ";";
            md << "\n";
        }
        if (!c.interpretation.empty()) md << "- interpretation: " << c.interpretation << "\n";
        md << "\n";
    }
    md << "## Continuum marker\n\n";
    md << "- flag: " << (cls.continuum.flag ? "true" : "false")
       << ", minimal codimension: " << cls.continuum.min_codim << "\n";
    if (cls.continuum.min_codim >= 0 && !cls.continuum.constraints.empty()) {
        md << "- witness constraints (anchor " << cls.continuum.case_anchor << "):";
        for (auto& k : cls.continuum.constraints) md << " [" << k.to_string(names) << "]";
        md << "\n";
    }
    if (cross) {
        md << "\n## Crosscheck\n\n- samples: " << cross->samples
           << ", mismatches: " << cross->mismatches << "\n";
        for (auto& d : cross->mismatch_details) md << "  - " << d << "\n";
    }
    return md.str();
}

inline nlohmann::ordered_json oracle_json(int a, int b, int k, std::span<const Rational> weight,
                                          Algebra alg, const oracle::BruteForceResult& r) {
    using nlohmann::ordered_json;
    ordered_json j;
    ordered_json w = ordered_json::array();
    for (auto& v : weight) w.push_back(to_string(v));
    j["input"] = {{"a", a},
                  {"b", b},
                  {"degree", k},
                  {"algebra", to_string(alg)},
                  {"weight", w}};
    j["dimension"] = r.dimension;
    ordered_json sectors = ordered_json::array();
    for (auto& s : r.sectors) {
        ordered_json sj;
        sj["anchor"] = s.anchor.to_string();
        sj["dimension"] = s.dimension;
        sj["basis"] = s.basis;
        sectors.push_back(sj);
    }
    j["sectors"] = sectors;
    return j;
}

}  // namespace singvect

#endif
