#ifndef SINGVECT_AFFINE_HPP
#define SINGVECT_AFFINE_HPP

#include "singvect/parampoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace singvect {

enum class ConstraintKind { Equality, Integrality, NonIntegrality };

// An affine condition on the weight parameters:
//   Equality        linear + constant == 0
//   Integrality     linear + constant in Z>=0
//   NonIntegrality  linear + constant not in Z>=0
struct AffineConstraint {
    std::map<int, Rational> linear;
    Rational constant = 0;
    ConstraintKind kind = ConstraintKind::Equality;

    bool is_constant() const { return linear.empty(); }

    // Equality records are scaled so the first nonzero linear coefficient is +1.
    void normalize() {
        if (kind != ConstraintKind::Equality || linear.empty()) return;
        Rational lead = linear.begin()->second;
        for (auto& [i, c] : linear) c /= lead;
        constant /= lead;
    }

    ParamPoly to_poly(int nparams) const {
        ParamPoly p = ParamPoly::constant(nparams, constant);
        for (auto& [i, c] : linear) p += ParamPoly::variable(nparams, i, c);
        return p;
    }

    static std::optional<AffineConstraint> from_poly(const ParamPoly& p, ConstraintKind kind) {
        if (p.degree() > 1) return std::nullopt;
        AffineConstraint c;
        c.kind = kind;
        for (auto& [m, coeff] : p.terms()) {
            if (mono_degree(m) == 0) {
                c.constant = coeff;
            } else {
                for (int i = 0; i < p.nparams(); ++i)
                    if (m[i]) c.linear[i] = coeff;
            }
        }
        return c;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        ParamPoly p(static_cast<int>(names.size()));
        p = to_poly(static_cast<int>(names.size()));
        std::string lhs = p.to_string(names);
        switch (kind) {
            case ConstraintKind::Equality: return lhs + " = 0";
            case ConstraintKind::Integrality: return lhs + " in Z>=0";
            case ConstraintKind::NonIntegrality: return lhs + " not in Z>=0";
        }
        return lhs;
    }

    bool operator==(const AffineConstraint& o) const {
        return kind == o.kind && constant == o.constant && linear == o.linear;
    }
    bool operator<(const AffineConstraint& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (linear != o.linear) return linear < o.linear;
        return constant < o.constant;
    }
};

struct ConstraintSet {
    std::vector<AffineConstraint> constraints;
    bool empty_variety = false;  // inconsistent set
};

// Gauss-Jordan on the equalities, substitution into the integrality
// conditions, duplicate removal. Inconsistency comes back as empty_variety.
inline ConstraintSet constraint_simplify(const std::vector<AffineConstraint>& input) {
    ConstraintSet out;

    std::vector<AffineConstraint> eqs, rest;
    for (const auto& c : input)
        (c.kind == ConstraintKind::Equality ? eqs : rest).push_back(c);

    // Reduced echelon form, pivots on the lowest parameter index.
    std::vector<AffineConstraint> echelon;
    for (auto row : eqs) {
        for (const auto& p : echelon) {
            int pv = p.linear.begin()->first;
            auto it = row.linear.find(pv);
            if (it == row.linear.end()) continue;
            Rational f = it->second;
            for (auto& [i, c] : p.linear) {
                row.linear[i] -= f * c;
                if (row.linear[i] == 0) row.linear.erase(i);
            }
            row.constant -= f * p.constant;
        }
        if (row.linear.empty()) {
            if (row.constant != 0) out.empty_variety = true;
            continue;
        }
        row.normalize();
        // Back-substitute into the rows already collected.
        int pv = row.linear.begin()->first;
        for (auto& p : echelon) {
            auto it = p.linear.find(pv);
            if (it == p.linear.end()) continue;
            Rational f = it->second;
            for (auto& [i, c] : row.linear) {
                p.linear[i] -= f * c;
                if (p.linear[i] == 0) p.linear.erase(i);
            }
            p.constant -= f * row.constant;
        }
        echelon.push_back(row);
    }
    std::sort(echelon.begin(), echelon.end());

    // Reduce the integral side conditions modulo the equalities.
    std::vector<AffineConstraint> sides;
    for (auto row : rest) {
        for (const auto& p : echelon) {
            int pv = p.linear.begin()->first;
            auto it = row.linear.find(pv);
            if (it == row.linear.end()) continue;
            Rational f = it->second;
            for (auto& [i, c] : p.linear) {
                row.linear[i] -= f * c;
                if (row.linear[i] == 0) row.linear.erase(i);
            }
            row.constant -= f * p.constant;
        }
        if (row.linear.empty()) {
            bool holds = is_integer(row.constant) && row.constant >= 0;
            if (row.kind == ConstraintKind::Integrality && !holds) out.empty_variety = true;
            if (row.kind == ConstraintKind::NonIntegrality && holds) out.empty_variety = true;
            continue;  // constant-folded away
        }
        sides.push_back(row);
    }
    std::sort(sides.begin(), sides.end());
    sides.erase(std::unique(sides.begin(), sides.end()), sides.end());

    out.constraints = std::move(echelon);
    out.constraints.insert(out.constraints.end(), sides.begin(), sides.end());
    return out;
}

// Real relaxation feasibility of {f_i(x) >= 0} by Fourier-Motzkin.
// Used to decide whether a case's dominance conditions can hold at all
// (the "no solutions if dim V < oo" annotations).
inline bool nonneg_system_feasible(std::vector<ParamPoly> forms) {
    if (forms.empty()) return true;
    int np = forms[0].nparams();
    for (int var = 0; var < np; ++var) {
        std::vector<ParamPoly> lower, upper, free;
        for (auto& f : forms) {
            if (f.degree() > 1) return true;  // non-affine: stay permissive
            ParamPoly d = f.derivative(var);
            if (d.is_zero()) {
                free.push_back(f);
            } else if (d.constant_value() > 0) {
                lower.push_back(f);
            } else {
                upper.push_back(f);
            }
        }
        std::vector<ParamPoly> next = free;
        for (auto& lo : lower)
            for (auto& up : upper) {
                Rational a = lo.derivative(var).constant_value();
                Rational b = -up.derivative(var).constant_value();
                // lo >= 0 gives var >= -lo0/a, up >= 0 gives var <= up0/b.
                next.push_back(up * a + lo * b);
            }
        forms = std::move(next);
        if (forms.empty()) return true;
    }
    for (auto& f : forms)
        if (f.constant_value() < 0) return false;
    return true;
}

}  // namespace singvect

#endif
