#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "subordlab/theorems.hpp"

namespace subordlab {

/// One verified constant: the value recomputed here versus the rounded
/// value printed in the literature.
struct ConstantsRow {
    std::string id;       // theorem or equation id
    std::string expr;     // human-readable closed form or equation tag
    double computed;      // closed-form or root-solved value
    double printed;       // rounded literature value
    double abs_diff;      // |computed - printed|
    std::string note;     // discrepancy notes, empty if clean
};

struct ConstantsReport {
    std::vector<ConstantsRow> rows;
    std::vector<std::string> flags;  // statement/proof discrepancies
};

inline ConstantsReport constants_table() {
    ConstantsReport rep;
    auto row = [&](std::string id, std::string expr, double computed,
                   double printed, std::string note = "") {
        rep.rows.push_back({std::move(id), std::move(expr), computed, printed,
                            std::abs(computed - printed), std::move(note)});
    };
    const double e = kE;

    row("lem5a", "e^2+1", e * e + 1.0, 8.38906);
    row("lem5b", "e+1/e", e + 1.0 / e, 3.08616);
    row("lem7a", "e^3-e", e * e * e - e, 17.3673);
    row("lem7b", "e^2-1", e * e - 1.0, 6.38906);
    row("lem7c", "e-1/e", e - 1.0 / e, 2.3504);
    row("lem8a", "e^2+1/e", e * e + 1.0 / e, 7.75694);
    row("lem8b", "e+1/e^2", e + 1.0 / (e * e), 2.85362);
    row("lem8c", "root of eq. lem8c",
        static_cast<double>(solve_root("lem8c").root), 104.122);
    row("lem9a", "e^3+e", e * e * e + e, 22.8038);
    row("lem9b", "e^3+1", e * e * e + 1.0, 21.0855,
        "statement prints 21.0855 but the proof text prints 20.0855; "
        "e^3+1 = 21.0855 so the proof figure is a typo");
    row("lem9c", "e^3+1/e", e * e * e + 1.0 / e, 20.4534);
    row("lem10", "e^2+1/e-e+1", e * e + 1.0 / e - e + 1.0, 6.03865);
    double b12 = (e + 2.0 - std::sqrt(2.0) * (e - 1.0)) /
                 (e * (std::sqrt(2.0) - 1.0));
    row("lem12a", "(e+2-sqrt2(e-1))/(e(sqrt2-1))", b12, 2.0323);
    row("lem12b", "e(e+2-sqrt2(e-1))/(e(sqrt2-1))", b12 * e, 5.52436);
    row("A1", "root of eq. A1", static_cast<double>(solve_root("A1").root),
        3.4446);
    row("A2", "root of eq. A2", static_cast<double>(solve_root("A2").root),
        3.7586);
    row("A3", "root of eq. A3", static_cast<double>(solve_root("A3").root),
        2.9432);
    row("A4", "root of eq. A4", static_cast<double>(solve_root("A4").root),
        7.7065);
    row("A5", "root of eq. A5", static_cast<double>(solve_root("A5").root),
        6.46722);
    row("A6", "root of eq. A6", static_cast<double>(solve_root("A6").root),
        5.66489);

    rep.flags.push_back(
        "lem9b: statement value 21.0855 (= e^3+1) vs proof value 20.0855; "
        "recomputation confirms the statement, the proof figure is a typo");
    rep.flags.push_back(
        "lem4: the statement denominator exponent (n+1) differs from the "
        "exponent n carried through the proof; the bound e^{n+1}-e^n matches "
        "the statement form 1 + beta s / r^{n+1}, which is implemented");
    return rep;
}

/// Closed-form bound for a theorem; root-defined bounds are solved.
inline double theorem_bound(const std::string& id, const PsiParams& p = {}) {
    return find_theorem(id).bound(p);
}

}  // namespace subordlab
